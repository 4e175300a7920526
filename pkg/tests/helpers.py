"""Shared generators and independent oracles for the test suite."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from qcurves import (
    DirichletCharacterData,
    FiniteAbelianGroup,
    OneCochain,
    QuadraticElement,
    TraceEntry,
    TwoCocycle,
)
from qcurves.descent import DescentDatum
from qcurves.linalg import identity, inverse, is_invertible, mat_mul, matrix
from qcurves.radicals import RadicalElement

PRIMES = (2, 3, 5)


def random_radical(
    rng: random.Random,
    torsion_dens=(1, 2, 4, 8),
    exponent_dens=(1, 2, 3, 4),
    primes=PRIMES,
) -> RadicalElement:
    den = rng.choice(torsion_dens)
    torsion = Fraction(rng.randrange(den), den)
    exps = {}
    for p in primes:
        if rng.random() < 0.5:
            d = rng.choice(exponent_dens)
            num = rng.randint(-2 * d, 2 * d)
            if num:
                exps[p] = Fraction(num, d)
    return RadicalElement(torsion, exps)


def random_cochain(rng: random.Random, group: FiniteAbelianGroup, **kw) -> OneCochain:
    values = {g: random_radical(rng, **kw) for g in group.elements()}
    values[group.identity] = RadicalElement.one()
    return OneCochain(group, values)


def klein_alternating_cocycle() -> TwoCocycle:
    """The nonsplit cocycle (g, h) -> (-1)^(g1 * h2) on Z/2 x Z/2."""
    group = FiniteAbelianGroup((2, 2))
    values = {}
    for g in group.elements():
        for h in group.elements():
            sign = RadicalElement.minus_one() if (g[0] * h[1]) % 2 else RadicalElement.one()
            values[(g, h)] = sign
    return TwoCocycle(group, values)


def brute_force_splittable(c: TwoCocycle, value_pool) -> bool:
    """Exhaustive search for a splitting cochain with values in a finite pool."""
    group = c.group
    free = [g for g in group.elements() if g != group.identity]
    for combo in itertools.product(value_pool, repeat=len(free)):
        values = dict(zip(free, combo))
        values[group.identity] = RadicalElement.one()
        if OneCochain(group, values).coboundary() == c:
            return True
    return False


def mu8_sqrt2_pool() -> list[RadicalElement]:
    """The 16 radicals mu_8 * {1, sqrt 2}."""
    pool = []
    for k in range(8):
        for j in (0, 1):
            pool.append(
                RadicalElement(Fraction(k, 8), {2: Fraction(j, 2)} if j else {})
            )
    return pool


# ---------------------------------------------------------------------------
# Descent data
# ---------------------------------------------------------------------------

ORDER_SEEDS = {
    # rational matrices of exact multiplicative order n, by (n, size)
    (2, 1): [[[-1]]],
    (2, 2): [[[-1, 0], [0, 1]], [[0, 1], [1, 0]], [[-1, 0], [0, -1]]],
    (2, 3): [[[-1, 0, 0], [0, 1, 0], [0, 0, 1]], [[0, 1, 0], [1, 0, 0], [0, 0, -1]]],
    (3, 2): [[[0, -1], [1, -1]]],
    (3, 3): [[[0, 0, 1], [1, 0, 0], [0, 1, 0]], [[0, -1, 0], [1, -1, 0], [0, 0, 1]]],
}


def random_invertible(rng: random.Random, n: int):
    while True:
        m = matrix([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
        if is_invertible(m):
            return m


def random_descent_datum(rng: random.Random, order: int, block_rank: int) -> DescentDatum:
    """Compatible datum on Z/order: mu at the generator has order dividing `order`."""
    group = FiniteAbelianGroup((order,))
    choices = ORDER_SEEDS.get((order, block_rank))
    if choices is None or rng.random() < 0.2:
        seed = identity(block_rank)
    else:
        seed = matrix(rng.choice(choices))
    p = random_invertible(rng, block_rank)
    m = mat_mul(mat_mul(p, seed), inverse(p))
    mu = {}
    power = identity(block_rank)
    for k in range(order):
        mu[(k,)] = power
        power = mat_mul(m, power)
    return DescentDatum(group, block_rank, mu)


# ---------------------------------------------------------------------------
# Trace tables
# ---------------------------------------------------------------------------


def chi_mod4() -> DirichletCharacterData:
    """The odd quadratic character of conductor 4."""
    return DirichletCharacterData(
        4, {1: RadicalElement.one(), 3: RadicalElement.minus_one()}
    )


def chi_mod8() -> DirichletCharacterData:
    """The even quadratic character of conductor 8 (fixed field Q(sqrt 2))."""
    one, m1 = RadicalElement.one(), RadicalElement.minus_one()
    return DirichletCharacterData(8, {1: one, 3: m1, 5: m1, 7: one})


def chi_mod5() -> DirichletCharacterData:
    """The even quadratic character mod 5."""
    one, m1 = RadicalElement.one(), RadicalElement.minus_one()
    return DirichletCharacterData(5, {1: one, 2: m1, 3: m1, 4: one})


def chi_mod16_order4() -> DirichletCharacterData:
    """An even order-4 character mod 16 (value i on the class of 3)."""
    i = RadicalElement.root_of_unity(Fraction(1, 4))
    values = {1: RadicalElement.one()}
    # (Z/16)* = <15> x <3>, with 3 of order 4; send 15 -> 1 and 3 -> i
    current = 1
    power = RadicalElement.one()
    for _ in range(4):
        values[current] = power
        values[(15 * current) % 16] = power
        current = (3 * current) % 16
        power = power * i
    return DirichletCharacterData(16, values)


def compliant_trace_value(rng, field_real: bool, d: int, eps_value: QuadraticElement):
    """Solve a = involution(a) * eps for a in Q(sqrt(d)), at a random scale.

    On a totally real field (or for entries in a real quadratic subfield) the
    involution is the identity, so nonzero solutions need eps = 1.  On an
    imaginary subfield the involution is conjugation: eps = s + t*sqrt(d)
    forces the rational ray (s = 1), the purely irrational ray (s = -1, t = 0),
    or the ray spanned by (1 + s) + t*sqrt(d).
    """
    scale = Fraction(rng.randint(1, 9), rng.randint(1, 4)) * rng.choice((1, -1))
    s, t = eps_value.a, eps_value.b
    if field_real or d > 0:
        if t != 0 or s != 1:
            return QuadraticElement.from_rational(0)  # only the zero trace complies
        if d == 1:
            return QuadraticElement.from_rational(scale)
        return QuadraticElement(scale, Fraction(rng.randint(1, 5)), d)
    if t == 0:
        if s == 1:
            return QuadraticElement.from_rational(scale)
        return QuadraticElement(Fraction(0), scale, d)
    if eps_value.d != d:
        raise ValueError("character value must lie in the same quadratic field")
    return QuadraticElement(scale * (1 + s), scale * t, d)


def compliant_table_entries(
    rng: random.Random, field_real: bool, d: int, eps: DirichletCharacterData, primes
) -> list[TraceEntry]:
    from qcurves.fields import root_of_unity_as_quadratic

    entries = []
    for p in primes:
        value = eps(p)
        if value is None:
            continue
        u = root_of_unity_as_quadratic(value)
        entries.append(TraceEntry(p, compliant_trace_value(rng, field_real, d, u)))
    return entries
