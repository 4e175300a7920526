"""JSON-facing encoders and parsers for every file format the CLI accepts.

All rationals travel as reduced "a/b" strings with positive denominator
(bare integers are accepted on input).  Group elements are lists of
integers.  Radicals are objects with a "torsion" fraction and an "exponents"
object keyed by decimal prime strings; quadratic field elements are objects
{"a", "b", "d"} meaning a + b*sqrt(d).
"""

from __future__ import annotations

from typing import Any

from .arith import format_fraction, parse_fraction
from .cohomology import OneCochain, TwoCocycle
from .fields import MultiquadraticField, QuadraticElement
from .groups import Element, FiniteAbelianGroup
from .pipeline import FrobeniusAssignment, FrobeniusEntry, QCurveDatum
from .radicals import RadicalElement
from .traces import DirichletCharacterData, TraceEntry, TraceTable
from . import descent, linalg


class ParseError(ValueError):
    """Malformed input document."""


def _fail(msg: str) -> "ParseError":
    return ParseError(msg)


# -- radicals ---------------------------------------------------------------


def radical_to_json(x: RadicalElement) -> dict:
    return {
        "torsion": format_fraction(x.torsion),
        "exponents": {str(p): format_fraction(r) for p, r in sorted(x.exponents.items())},
    }


def radical_from_json(obj: Any) -> RadicalElement:
    if isinstance(obj, (int, str)):
        return RadicalElement.from_rational(parse_fraction(obj))
    if not isinstance(obj, dict):
        raise _fail(f"expected a radical object, got {obj!r}")
    try:
        torsion = parse_fraction(obj.get("torsion", "0/1"))
        exponents = {
            int(p): parse_fraction(r) for p, r in (obj.get("exponents") or {}).items()
        }
        return RadicalElement(torsion, exponents)
    except (ValueError, TypeError) as exc:
        raise _fail(f"bad radical {obj!r}: {exc}") from None


# -- groups and tables --------------------------------------------------------


def element_from_json(obj: Any, group: FiniteAbelianGroup) -> Element:
    if not isinstance(obj, (list, tuple)):
        raise _fail(f"expected a group element (list of ints), got {obj!r}")
    try:
        return group.check_element(tuple(int(x) for x in obj))
    except (TypeError, ValueError) as exc:
        raise _fail(str(exc)) from None


def element_to_json(g: Element) -> list[int]:
    return list(g)


def group_from_json(obj: Any) -> FiniteAbelianGroup:
    if not isinstance(obj, list) or not all(isinstance(n, int) for n in obj):
        raise _fail('"cyclic_orders" must be a list of integers')
    try:
        return FiniteAbelianGroup(tuple(obj))
    except ValueError as exc:
        raise _fail(str(exc)) from None


def cocycle_from_json(obj: Any, group: FiniteAbelianGroup) -> TwoCocycle:
    """Cocycle values as a list of [g, h, radical] triples; missing pairs are 1."""
    if isinstance(obj, dict):
        obj = obj.get("values", [])
    if not isinstance(obj, list):
        raise _fail('"cocycle" must be a list of [g, h, value] triples')
    table = {}
    for triple in obj:
        if not isinstance(triple, (list, tuple)) or len(triple) != 3:
            raise _fail(f"bad cocycle triple {triple!r}")
        g = element_from_json(triple[0], group)
        h = element_from_json(triple[1], group)
        table[(g, h)] = radical_from_json(triple[2])
    return TwoCocycle(group, table)


def cocycle_to_json(c: TwoCocycle) -> list:
    return [
        [element_to_json(g), element_to_json(h), radical_to_json(v)]
        for (g, h), v in sorted(c.values().items())
        if not v.is_one
    ]


def cochain_from_json(obj: Any, group: FiniteAbelianGroup) -> OneCochain:
    if not isinstance(obj, list):
        raise _fail("cochain must be a list of [g, value] pairs")
    table = {group.identity: RadicalElement.one()}
    for pair in obj:
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise _fail(f"bad cochain pair {pair!r}")
        g = element_from_json(pair[0], group)
        table[g] = radical_from_json(pair[1])
    try:
        return OneCochain(group, table)
    except ValueError as exc:
        raise _fail(str(exc)) from None


def cochain_to_json(a: OneCochain) -> list:
    return [
        [element_to_json(g), radical_to_json(v)] for g, v in sorted(a.values().items())
    ]


def pairing_to_json(pairing) -> list:
    return [
        [element_to_json(g), element_to_json(h), radical_to_json(v)]
        for (g, h), v in pairing.table
        if not v.is_one
    ]


def algebra_element_to_json(x) -> list:
    return [
        [element_to_json(g), format_fraction(q)] for g, q in sorted(x.coefficients.items())
    ]


def field_to_json(f: MultiquadraticField) -> dict:
    return {
        "square_classes": list(f.basis),
        "degree": f.degree,
        "totally_real": f.totally_real,
    }


# -- pipeline documents -------------------------------------------------------


def qcurve_datum_from_json(obj: Any) -> QCurveDatum:
    if not isinstance(obj, dict):
        raise _fail("datum document must be an object")
    group = group_from_json(obj.get("cyclic_orders"))
    raw_degrees = obj.get("degrees")
    if not isinstance(raw_degrees, list):
        raise _fail('"degrees" must be a list of [g, integer] pairs')
    degrees = {}
    for pair in raw_degrees:
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise _fail(f"bad degree pair {pair!r}")
        g = element_from_json(pair[0], group)
        if not isinstance(pair[1], int):
            raise _fail(f"degree at {pair[0]} must be an integer")
        degrees[g] = pair[1]
    degrees.setdefault(group.identity, 1)
    cocycle = cocycle_from_json(obj.get("cocycle", []), group)
    try:
        return QCurveDatum(group, degrees, cocycle)
    except ValueError as exc:
        raise _fail(str(exc)) from None


def frobenius_assignment_from_json(obj: Any, group: FiniteAbelianGroup) -> FrobeniusAssignment:
    if not isinstance(obj, list):
        raise _fail('"frobenius" must be a list of entry objects')
    entries = []
    for raw in obj:
        if not isinstance(raw, dict) or "p" not in raw or "class" not in raw:
            raise _fail(f"bad Frobenius entry {raw!r}")
        a_p = raw.get("a_p")
        entries.append(
            FrobeniusEntry(
                p=int(raw["p"]),
                frobenius_class=element_from_json(raw["class"], group),
                a_p=None if a_p is None else radical_from_json(a_p),
                good_reduction=bool(raw.get("good", True)),
            )
        )
    return FrobeniusAssignment(tuple(entries))


# -- descent documents --------------------------------------------------------


def matrix_from_json(obj: Any, n: int) -> linalg.Matrix:
    if not isinstance(obj, list) or len(obj) != n:
        raise _fail(f"expected an {n} x {n} matrix")
    rows = []
    for row in obj:
        if not isinstance(row, list) or len(row) != n:
            raise _fail(f"expected an {n} x {n} matrix")
        try:
            rows.append([parse_fraction(x) for x in row])
        except ValueError as exc:
            raise _fail(str(exc)) from None
    return linalg.matrix(rows)


def matrix_to_json(m: linalg.Matrix) -> list:
    return [[format_fraction(x) for x in row] for row in m]


def descent_datum_from_json(obj: Any) -> descent.DescentDatum:
    if not isinstance(obj, dict):
        raise _fail("descent document must be an object")
    group = group_from_json(obj.get("cyclic_orders"))
    block_rank = obj.get("block_rank")
    if not isinstance(block_rank, int) or block_rank < 1:
        raise _fail('"block_rank" must be a positive integer')
    raw_mu = obj.get("mu")
    if not isinstance(raw_mu, list):
        raise _fail('"mu" must be a list of [g, matrix] pairs')
    mu = {}
    for pair in raw_mu:
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise _fail(f"bad mu pair {pair!r}")
        g = element_from_json(pair[0], group)
        mu[g] = matrix_from_json(pair[1], block_rank)
    try:
        return descent.DescentDatum(group, block_rank, mu)
    except ValueError as exc:
        raise _fail(str(exc)) from None


# -- trace documents ----------------------------------------------------------


def quadratic_from_json(obj: Any) -> QuadraticElement:
    if isinstance(obj, (int, str)):
        return QuadraticElement.from_rational(parse_fraction(obj))
    if isinstance(obj, dict) and "torsion" in obj:
        return QuadraticElement.from_radical(radical_from_json(obj))
    if not isinstance(obj, dict) or "a" not in obj:
        raise _fail(f"bad field element {obj!r}")
    try:
        return QuadraticElement(
            parse_fraction(obj["a"]),
            parse_fraction(obj.get("b", 0)),
            int(obj.get("d", 1)),
        )
    except (ValueError, TypeError) as exc:
        raise _fail(f"bad field element {obj!r}: {exc}") from None


def quadratic_to_json(x: QuadraticElement) -> dict:
    out = {"a": format_fraction(x.a)}
    if x.b:
        out["b"] = format_fraction(x.b)
        out["d"] = x.d
    return out


def character_from_json(obj: Any) -> DirichletCharacterData:
    if not isinstance(obj, dict) or "modulus" not in obj:
        raise _fail('"epsilon" must be an object with "modulus" and "values"')
    modulus = obj["modulus"]
    if not isinstance(modulus, int) or modulus < 1:
        raise _fail('"modulus" must be a positive integer')
    values = {
        int(r): RadicalElement.root_of_unity(parse_fraction(t))
        for r, t in (obj.get("values") or {}).items()
    }
    if modulus == 1:
        values.setdefault(0, RadicalElement.one())
    at_m1 = obj.get("at_minus_one")
    try:
        return DirichletCharacterData(
            modulus,
            values,
            None if at_m1 is None else RadicalElement.root_of_unity(parse_fraction(at_m1)),
        )
    except ValueError as exc:
        raise _fail(str(exc)) from None


def character_to_json(eps: DirichletCharacterData) -> dict:
    return {
        "modulus": eps.modulus,
        "values": {str(r): format_fraction(v.torsion) for r, v in sorted(eps.values.items())},
        "at_minus_one": format_fraction(eps.value_at_minus_one.torsion),
    }


def trace_table_from_json(obj: Any) -> TraceTable:
    if not isinstance(obj, dict):
        raise _fail("trace-table document must be an object")
    raw_gens = obj.get("E_generators", [])
    if not isinstance(raw_gens, list) or not all(isinstance(d, int) for d in raw_gens):
        raise _fail('"E_generators" must be a list of squarefree integers')
    try:
        field_e = MultiquadraticField.from_square_classes(raw_gens)
    except ValueError as exc:
        raise _fail(str(exc)) from None
    epsilon = character_from_json(obj.get("epsilon", {"modulus": 1, "values": {}}))
    raw_entries = obj.get("entries")
    if not isinstance(raw_entries, list):
        raise _fail('"entries" must be a list')
    entries = []
    for raw in raw_entries:
        if not isinstance(raw, dict) or "p" not in raw or "a_p" not in raw:
            raise _fail(f"bad trace entry {raw!r}")
        entries.append(
            TraceEntry(
                p=int(raw["p"]),
                a_p=quadratic_from_json(raw["a_p"]),
                good=bool(raw.get("good", True)),
            )
        )
    bad = obj.get("bad_primes", [])
    if not isinstance(bad, list) or not all(isinstance(p, int) for p in bad):
        raise _fail('"bad_primes" must be a list of integers')
    try:
        return TraceTable(field_e, epsilon, entries, set(bad))
    except ValueError as exc:
        raise _fail(str(exc)) from None
