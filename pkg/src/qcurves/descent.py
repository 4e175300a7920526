"""Descent of abelian varieties up to isogeny, modeled by exact block matrices.

A variety over the extension together with isomorphisms-up-to-isogeny from
its Galois conjugates is modeled by one invertible rational n x n matrix per
group element (the Hom spaces between conjugate factors are n^2-dimensional
with a fixed basis, and the Galois action on rational entries is trivial, so
conjugating a map only relabels its source and target slots).  The
compatibility identity asks that the matrices compose on the nose:
mu(s) * mu(t) = mu(st).

Restriction of scalars turns each group element into a block operator on the
product of conjugate factors, sending slot (t*g) to slot t by mu(g); the
compatibility identity makes these operators a group law on the nose.  The
averaged sum of all operators is an idempotent of rank n whose column space
projects isomorphically onto every single factor: the diagonal image that
realizes the descended variety.

The equivariance computation compares, slot by slot, the two ways around the
square formed by the comparison map from the plain product (the map sending
the s-th copy to the s^{-1}-conjugate factor via the conjugated isogeny) and
the two module structures.  For cocycle-twisted data the comparison is done
on coefficients against canonical basis isogenies, using the twisted
composition rule; for matrix data it is a literal matrix identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Union

from . import linalg
from .errors import CompatibilityRequired
from .groups import Element, FiniteAbelianGroup
from .pipeline import QCurveDatum


@dataclass(frozen=True)
class FactorProduct:
    """Ordered product of conjugate factors, one per group element."""

    labels: tuple[Element, ...]
    block_rank: int

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("factor labels must be distinct")
        if self.block_rank < 1:
            raise ValueError("block rank must be >= 1")

    @classmethod
    def of_group(cls, group: FiniteAbelianGroup, block_rank: int) -> "FactorProduct":
        return cls(tuple(group.elements()), block_rank)

    @property
    def total_rank(self) -> int:
        return len(self.labels) * self.block_rank

    def slot(self, label: Element) -> int:
        return self.labels.index(label)


class BlockMap:
    """Map between factor products given by rational blocks (missing = zero)."""

    def __init__(
        self,
        source: FactorProduct,
        target: FactorProduct,
        blocks: Mapping[tuple[Element, Element], linalg.Matrix],
    ):
        if source.block_rank != target.block_rank:
            raise ValueError("source and target block ranks differ")
        n = source.block_rank
        table = {}
        for (t_label, s_label), block in blocks.items():
            if t_label not in target.labels or s_label not in source.labels:
                raise ValueError(f"block at ({t_label}, {s_label}) is off the products")
            block = linalg.matrix(block)
            if len(block) != n or any(len(row) != n for row in block):
                raise ValueError(f"block at ({t_label}, {s_label}) is not {n} x {n}")
            if any(any(x for x in row) for row in block):
                table[(t_label, s_label)] = block
        self.source = source
        self.target = target
        self.blocks = table

    @classmethod
    def identity(cls, product: FactorProduct) -> "BlockMap":
        eye = linalg.identity(product.block_rank)
        return cls(product, product, {(label, label): eye for label in product.labels})

    def block(self, t_label: Element, s_label: Element) -> linalg.Matrix:
        zero = linalg.zeros(self.source.block_rank, self.source.block_rank)
        return self.blocks.get((t_label, s_label), zero)

    def compose(self, other: "BlockMap") -> "BlockMap":
        """self after other."""
        if other.target != self.source:
            raise ValueError("block maps are not composable")
        acc: dict[tuple[Element, Element], linalg.Matrix] = {}
        for (t_label, mid1), left in self.blocks.items():
            for (mid2, s_label), right in other.blocks.items():
                if mid1 != mid2:
                    continue
                product = linalg.mat_mul(left, right)
                key = (t_label, s_label)
                acc[key] = linalg.mat_add(acc[key], product) if key in acc else product
        return BlockMap(other.source, self.target, acc)

    def __add__(self, other: "BlockMap") -> "BlockMap":
        if self.source != other.source or self.target != other.target:
            raise ValueError("block maps have different shapes")
        acc = dict(self.blocks)
        for key, block in other.blocks.items():
            acc[key] = linalg.mat_add(acc[key], block) if key in acc else block
        return BlockMap(self.source, self.target, acc)

    def scale(self, s) -> "BlockMap":
        return BlockMap(
            self.source,
            self.target,
            {key: linalg.mat_scale(block, s) for key, block in self.blocks.items()},
        )

    def to_dense(self) -> linalg.Matrix:
        """Full matrix in slot-major order (target rows, source columns)."""
        n = self.source.block_rank
        rows = []
        for t_label in self.target.labels:
            for i in range(n):
                row = []
                for s_label in self.source.labels:
                    block = self.blocks.get((t_label, s_label))
                    row.extend(block[i] if block else (Fraction(0),) * n)
                rows.append(tuple(row))
        return tuple(rows)

    def rank(self) -> int:
        return linalg.rank(self.to_dense())

    def __eq__(self, other):
        if not isinstance(other, BlockMap):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.blocks == other.blocks
        )

    def __repr__(self):
        return f"BlockMap({len(self.blocks)} blocks on {len(self.source.labels)} slots)"


class DescentDatum:
    """Group, block rank, and one invertible matrix per element (mu(1) = id)."""

    def __init__(self, group: FiniteAbelianGroup, block_rank: int, mu: Mapping[Element, linalg.Matrix]):
        self.group = group
        self.block_rank = int(block_rank)
        table = {}
        for g in group.elements():
            if g not in mu:
                raise ValueError(f"no isogeny matrix assigned at {g}")
            m = linalg.matrix(mu[g])
            if len(m) != self.block_rank or any(len(row) != self.block_rank for row in m):
                raise ValueError(f"matrix at {g} is not {self.block_rank} x {self.block_rank}")
            if not linalg.is_invertible(m):
                raise ValueError(f"matrix at {g} is not invertible")
            table[g] = m
        if table[group.identity] != linalg.identity(self.block_rank):
            raise ValueError("the identity element must carry the identity matrix")
        self.mu = table

    def product(self) -> FactorProduct:
        return FactorProduct.of_group(self.group, self.block_rank)


def compatibility_violation(datum: DescentDatum) -> Optional[tuple[Element, Element]]:
    """First pair with mu(s) mu(t) != mu(st), or None when compatible."""
    for s in datum.group.elements():
        for t in datum.group.elements():
            st = datum.group.add(s, t)
            if linalg.mat_mul(datum.mu[s], datum.mu[t]) != datum.mu[st]:
                return (s, t)
    return None


def build_restriction(datum: DescentDatum) -> dict[Element, BlockMap]:
    """The operators [g] on the product of conjugates, one per group element.

    [g] sends slot t*g to slot t by mu(g); compatibility makes the family a
    homomorphic image of the group, which is re-verified exactly.
    """
    violation = compatibility_violation(datum)
    if violation is not None:
        raise CompatibilityRequired(f"compatibility fails at {violation}")
    product = datum.product()
    operators = {}
    for g in datum.group.elements():
        blocks = {
            (t_label, datum.group.add(t_label, g)): datum.mu[g] for t_label in product.labels
        }
        operators[g] = BlockMap(product, product, blocks)
    for s in datum.group.elements():
        for t in datum.group.elements():
            if operators[s].compose(operators[t]) != operators[datum.group.add(s, t)]:
                raise CompatibilityRequired(f"operator group law fails at ({s}, {t})")
    return operators


@dataclass(frozen=True)
class DescentReport:
    eta: BlockMap
    idempotent_ok: bool
    rank: int
    fixed_by_all: bool
    diagonal_image_ok: bool

    @property
    def ok(self) -> bool:
        return self.idempotent_ok and self.fixed_by_all and self.diagonal_image_ok


def eta_descent(datum: DescentDatum) -> DescentReport:
    """Sum the restriction operators and verify the descended image.

    Checks: eta is fixed under every operator on both sides, eta / |G| is
    idempotent, eta has rank equal to the block rank, and the row slice of
    eta at every slot has full block rank (the column space projects
    isomorphically onto each factor).
    """
    operators = build_restriction(datum)
    group = datum.group
    eta = None
    for g in group.elements():
        eta = operators[g] if eta is None else eta + operators[g]

    fixed = all(
        operators[g].compose(eta) == eta and eta.compose(operators[g]) == eta
        for g in group.elements()
    )
    average = eta.scale(Fraction(1, group.order))
    idempotent_ok = average.compose(average) == average

    dense = eta.to_dense()
    eta_rank = linalg.rank(dense)

    n = datum.block_rank
    diagonal_ok = eta_rank == n
    for i, _ in enumerate(group.elements()):
        slice_rows = dense[i * n : (i + 1) * n]
        if linalg.rank(slice_rows) != n:
            diagonal_ok = False
            break

    return DescentReport(
        eta=eta,
        idempotent_ok=idempotent_ok,
        rank=eta_rank,
        fixed_by_all=fixed,
        diagonal_image_ok=diagonal_ok,
    )


# ---------------------------------------------------------------------------
# Equivariance of the comparison map
# ---------------------------------------------------------------------------

EQUIVARIANT = "equivariant"


def product_action(datum: QCurveDatum) -> dict[Element, BlockMap]:
    """The twisted action on the plain product: slot s goes to slot g*s with
    coefficient c(g, s) against the identity isogeny."""
    product = FactorProduct.of_group(datum.group, 1)
    action = {}
    for g in datum.group.elements():
        blocks = {}
        for s in product.labels:
            coeff = datum.cocycle.rational_value(g, s)
            blocks[(datum.group.add(g, s), s)] = ((coeff,),)
        action[g] = BlockMap(product, product, blocks)
    return action


def iota_equivariance_violation(
    datum: Union[QCurveDatum, DescentDatum],
    iota_scale: Optional[Mapping[Element, Fraction]] = None,
) -> Optional[tuple[Element, Element]]:
    """First (g, slot) where the comparison map fails to intertwine the two
    actions, or None when it is equivariant.

    iota_scale optionally rescales the comparison map on individual slots
    (used to demonstrate that the identity is sharp); a uniform rescaling
    keeps equivariance, any single-slot change breaks it.
    """
    group = datum.group
    scale = {s: Fraction(1) for s in group.elements()}
    if iota_scale:
        for s, q in iota_scale.items():
            scale[group.check_element(s)] = Fraction(q)

    if isinstance(datum, DescentDatum):
        violation = compatibility_violation(datum)
        if violation is not None:
            raise CompatibilityRequired(f"compatibility fails at {violation}")

        def transported(g, s):
            # iota after the permutation action: slot s -> slot g*s -> factor (g*s)^-1
            gs = group.add(g, s)
            return linalg.mat_scale(datum.mu[gs], scale[gs])

        def structural(g, s):
            # the [g] operator after iota: factor s^-1 -> factor (g*s)^-1
            return linalg.mat_scale(linalg.mat_mul(datum.mu[g], datum.mu[s]), scale[s])

    else:
        # coefficients against the canonical conjugated-isogeny basis; the
        # twisted composition rule contributes c(g, s) on both sides
        def transported(g, s):
            gs = group.add(g, s)
            return datum.cocycle.rational_value(g, s) * scale[gs]

        def structural(g, s):
            gs = group.add(g, s)
            return datum.cocycle.rational_value(g, s) * scale[s]

    for g in group.elements():
        for s in group.elements():
            if transported(g, s) != structural(g, s):
                return (g, s)
    return None
