"""2-cocycles on finite abelian groups with radical values, and their splitting.

Values live in the divisible multiplicative group of radicals with trivial
Galois action.  Over such coefficients a normalized 2-cocycle on a finite
abelian group is a coboundary exactly when it is symmetric; the residual
obstruction on non-symmetric cocycles is the commutator pairing
(g, h) -> c(g, h)/c(h, g), an alternating bimultiplicative invariant of the
cohomology class.

The splitting is constructive and canonical: on a cyclic factor of order n
generated by s, the product P = prod_{i<n} c(s, s^i) determines the value at
the generator as the canonical n-th root of P, the remaining values follow by
telescoping, and factors are combined by peeling coordinates against the
cocycle itself.  The result is verified against every pair; a verification
failure yields the (necessarily nontrivial) pairing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import InvalidCocycle
from .groups import Element, FiniteAbelianGroup, GroupCharacter, all_characters
from .radicals import RadicalElement

_ONE = RadicalElement.one()


class OneCochain:
    """Normalized 1-cochain: a total map from a group to radicals with a(1) = 1."""

    __slots__ = ("group", "_values")

    def __init__(self, group: FiniteAbelianGroup, values: dict[Element, RadicalElement]):
        self.group = group
        table = {}
        for g in group.elements():
            try:
                table[g] = values[g]
            except KeyError:
                raise ValueError(f"cochain table missing value at {g}") from None
        if not table[group.identity].is_one:
            raise ValueError("cochain must send the identity to 1")
        self._values = table

    @classmethod
    def constant_one(cls, group: FiniteAbelianGroup) -> "OneCochain":
        return cls(group, {g: _ONE for g in group.elements()})

    def __call__(self, g: Element) -> RadicalElement:
        return self._values[g]

    def values(self) -> dict[Element, RadicalElement]:
        return dict(self._values)

    def coboundary(self) -> "TwoCocycle":
        """The 2-cocycle (g, h) -> a(g) a(h) / a(gh)."""
        table = {}
        for g in self._values:
            for h in self._values:
                table[(g, h)] = self._values[g] * self._values[h] / self._values[self.group.add(g, h)]
        return TwoCocycle(self.group, table)

    def twist(self, chi: GroupCharacter) -> "OneCochain":
        return OneCochain(self.group, {g: v * chi(g) for g, v in self._values.items()})

    def __mul__(self, other: "OneCochain") -> "OneCochain":
        if self.group != other.group:
            raise ValueError("cochains live on different groups")
        return OneCochain(self.group, {g: self._values[g] * other._values[g] for g in self._values})

    def __truediv__(self, other: "OneCochain") -> "OneCochain":
        if self.group != other.group:
            raise ValueError("cochains live on different groups")
        return OneCochain(self.group, {g: self._values[g] / other._values[g] for g in self._values})

    @property
    def is_rational_valued(self) -> bool:
        return all(v.is_rational for v in self._values.values())

    def __eq__(self, other):
        if not isinstance(other, OneCochain):
            return NotImplemented
        return self.group == other.group and self._values == other._values

    def __hash__(self):
        return hash((self.group, tuple(sorted(self._values.items(), key=lambda kv: kv[0]))))

    def __repr__(self):
        return f"OneCochain({self.group}, {self._values})"


class TwoCocycle:
    """Total table (g, h) -> radical, normalized on construction by c(1,1)."""

    __slots__ = ("group", "_values")

    def __init__(self, group: FiniteAbelianGroup, values: dict[tuple[Element, Element], RadicalElement]):
        self.group = group
        elements = group.elements()
        scale = values.get((group.identity, group.identity), _ONE)
        table = {}
        for g in elements:
            for h in elements:
                v = values.get((g, h), _ONE)
                table[(g, h)] = v if scale.is_one else v / scale
        self._values = table

    @classmethod
    def constant_one(cls, group: FiniteAbelianGroup) -> "TwoCocycle":
        return cls(group, {})

    def __call__(self, g: Element, h: Element) -> RadicalElement:
        return self._values[(g, h)]

    def values(self) -> dict[tuple[Element, Element], RadicalElement]:
        return dict(self._values)

    def violation(self) -> Optional[tuple[Element, Element, Element]]:
        """First triple breaking the cocycle identity, or None when valid.

        With c(1,1) = 1 (enforced on construction), the identity over all
        triples also forces the normalization c(1,g) = c(g,1) = 1.
        """
        elements = self.group.elements()
        c = self._values
        add = self.group.add
        for g in elements:
            for h in elements:
                gh = add(g, h)
                left_first = c[(g, h)]
                for k in elements:
                    if left_first * c[(gh, k)] != c[(h, k)] * c[(g, add(h, k))]:
                        return (g, h, k)
        return None

    @property
    def is_valid(self) -> bool:
        return self.violation() is None

    @property
    def is_symmetric(self) -> bool:
        return all(self._values[(g, h)] == self._values[(h, g)] for g, h in self._values)

    @property
    def is_rational_valued(self) -> bool:
        return all(v.is_rational for v in self._values.values())

    def rational_value(self, g: Element, h: Element) -> Fraction:
        return self._values[(g, h)].rational_value()

    def __mul__(self, other: "TwoCocycle") -> "TwoCocycle":
        if self.group != other.group:
            raise ValueError("cocycles live on different groups")
        return TwoCocycle(self.group, {k: self._values[k] * other._values[k] for k in self._values})

    def __pow__(self, k: int) -> "TwoCocycle":
        return TwoCocycle(self.group, {key: v**k for key, v in self._values.items()})

    def commutator_pairing(self) -> "CommutatorPairing":
        table = {
            (g, h): self._values[(g, h)] / self._values[(h, g)] for (g, h) in self._values
        }
        return CommutatorPairing(self.group, table)

    def __eq__(self, other):
        if not isinstance(other, TwoCocycle):
            return NotImplemented
        return self.group == other.group and self._values == other._values

    def __repr__(self):
        return f"TwoCocycle({self.group}, {self._values})"


@dataclass(frozen=True)
class CommutatorPairing:
    """The alternating pairing (g, h) -> c(g, h)/c(h, g) of a 2-cocycle."""

    group: FiniteAbelianGroup
    table: tuple

    def __init__(self, group, table):
        object.__setattr__(self, "group", group)
        if isinstance(table, dict):
            table = tuple(sorted(table.items()))
        object.__setattr__(self, "table", table)

    def __call__(self, g: Element, h: Element) -> RadicalElement:
        return dict(self.table)[(g, h)]

    @property
    def is_trivial(self) -> bool:
        return all(v.is_one for _, v in self.table)

    @property
    def is_alternating(self) -> bool:
        return all(self(g, g).is_one for g in self.group.elements())

    @property
    def is_bimultiplicative(self) -> bool:
        els = self.group.elements()
        add = self.group.add
        return all(
            self(add(g1, g2), h) == self(g1, h) * self(g2, h)
            and self(h, add(g1, g2)) == self(h, g1) * self(h, g2)
            for g1 in els
            for g2 in els
            for h in els
        )


@dataclass(frozen=True)
class SplitResult:
    """Outcome of a splitting attempt: a cochain, or the obstruction pairing."""

    cochain: Optional[OneCochain]
    obstruction: Optional[CommutatorPairing]

    @property
    def split(self) -> bool:
        return self.cochain is not None


def split_cocycle(c: TwoCocycle) -> SplitResult:
    """Split a valid cocycle, or report its commutator pairing as obstruction.

    On each cyclic factor the generator value is the canonical n-th root of
    P = prod_i c(s, s^i), so the construction (and everything downstream of
    it) is deterministic.  Coefficient divisibility makes the construction
    complete: verification can only fail when the pairing is nontrivial.
    """
    violation = c.violation()
    if violation is not None:
        raise InvalidCocycle(f"cocycle identity fails at {violation}")
    group = c.group
    orders = group.cyclic_orders

    # values on each cyclic factor by telescoping from the canonical root
    factor_values: list[dict[int, RadicalElement]] = []
    for i, n in enumerate(orders):
        s = group.generator(i)
        big_p = _ONE
        power = group.identity
        for _ in range(n):
            big_p = big_p * c(s, power)
            power = group.add(power, s)
        beta = big_p.nth_root(n)
        vals = {0: _ONE}
        power = group.identity
        for k in range(1, n):
            vals[k] = beta * vals[k - 1] / c(s, power)
            power = group.add(power, s)
        factor_values.append(vals)

    # peel coordinates: a(g) = a_i(s^k) * a(rest) / c(s^k, rest)
    values: dict[Element, RadicalElement] = {}
    for g in group.elements():
        acc = _ONE
        for i in range(len(orders) - 1, -1, -1):
            k = g[i]
            head = tuple(0 if j != i else k for j in range(len(orders)))
            rest = tuple(0 if j <= i else g[j] for j in range(len(orders)))
            acc = factor_values[i][k] * acc / c(head, rest)
        values[g] = acc
    cochain = OneCochain(group, values)

    if cochain.coboundary() == c:
        return SplitResult(cochain, None)
    pairing = c.commutator_pairing()
    if pairing.is_trivial:
        raise InvalidCocycle("symmetric cocycle failed to split (internal error)")
    return SplitResult(None, pairing)


def character_twists(a: OneCochain) -> list[OneCochain]:
    """All cochains with the same coboundary obtained by character twists."""
    return [a.twist(chi) for chi in all_characters(a.group)]


def power_splits_over_rationals(c: TwoCocycle, k: int) -> bool:
    """Whether c^k is the coboundary of a cochain with purely rational values.

    The exponent table of any splitting is unique (the exponent value group Q
    is torsion free), so integrality of the canonical splitting's exponents
    decides the prime-power side; the sign side is an exhaustive search over
    the finitely many character twists, which adjust only torsion.
    """
    if k < 1:
        raise ValueError("power must be a positive integer")
    if not c.is_rational_valued:
        raise ValueError("rational class order is defined for rational cocycles only")
    d = c**k
    result = split_cocycle(d)
    if not result.split:
        return False
    a = result.cochain
    for v in a.values().values():
        if any(r.denominator != 1 for r in v.exponents.values()):
            return False
    return any(t.is_rational_valued for t in character_twists(a))
