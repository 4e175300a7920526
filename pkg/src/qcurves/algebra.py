"""Twisted group algebras over Q and their field quotients.

The algebra attached to a finite abelian group G and a rational-valued
normalized 2-cocycle c has basis symbols b_g with multiplication
b_g * b_h = c(g, h) * b_{gh}, extended bilinearly; b_1 is the unit and the
dimension over Q is |G|.  Associativity of the structure table is precisely
the cocycle identity.  The algebra is commutative iff c is symmetric.

A splitting cochain a of c induces the quotient map onto the multiquadratic
field generated by its values (b_g -> a(g)); the idempotent projecting onto
that quotient is recovered by exact linear algebra: it is the unique element
annihilating the kernel of the quotient map and mapping to 1 under it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .cohomology import OneCochain, TwoCocycle
from .errors import InconsistentDescriptor, InvalidCocycle, NoProjector, NotASplitting
from .fields import field_of_radicals
from .groups import Element, FiniteAbelianGroup
from .radicals import RadicalElement


class TwistedGroupAlgebra:
    """Q-algebra with basis indexed by a finite abelian group, twisted by a cocycle."""

    def __init__(self, group: FiniteAbelianGroup, cocycle: TwoCocycle):
        if cocycle.group != group:
            raise ValueError("cocycle group does not match")
        violation = cocycle.violation()
        if violation is not None:
            raise InvalidCocycle(f"cocycle identity fails at {violation}")
        if not cocycle.is_rational_valued:
            raise ValueError("twisted group algebra requires a rational-valued cocycle")
        self.group = group
        self.cocycle = cocycle
        self._constants = {
            (g, h): cocycle(g, h).rational_value()
            for g in group.elements()
            for h in group.elements()
        }
        self.is_commutative = cocycle.is_symmetric

    @property
    def dimension(self) -> int:
        return self.group.order

    def structure_constant(self, g: Element, h: Element) -> Fraction:
        return self._constants[(g, h)]

    def element(self, coefficients: dict[Element, Fraction]) -> "AlgebraElement":
        return AlgebraElement(self, coefficients)

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, {})

    def one(self) -> "AlgebraElement":
        return self.basis(self.group.identity)

    def basis(self, g: Element) -> "AlgebraElement":
        return AlgebraElement(self, {self.group.check_element(g): Fraction(1)})

    def basis_elements(self) -> list["AlgebraElement"]:
        return [self.basis(g) for g in self.group.elements()]

    def left_multiplication_matrix(self, x: "AlgebraElement") -> linalg.Matrix:
        """Matrix of y -> x*y in the group-element basis (canonical order)."""
        elements = self.group.elements()
        index = {g: i for i, g in enumerate(elements)}
        cols = []
        for h in elements:
            col = [Fraction(0)] * len(elements)
            for g, coeff in x.coefficients.items():
                col[index[self.group.add(g, h)]] += coeff * self._constants[(g, h)]
            cols.append(col)
        return tuple(tuple(cols[j][i] for j in range(len(elements))) for i in range(len(elements)))

    def __eq__(self, other):
        if not isinstance(other, TwistedGroupAlgebra):
            return NotImplemented
        return self.group == other.group and self.cocycle == other.cocycle

    def __repr__(self):
        return f"TwistedGroupAlgebra({self.group})"


class AlgebraElement:
    """Sparse rational combination of basis symbols of a twisted group algebra."""

    __slots__ = ("algebra", "coefficients")

    def __init__(self, algebra: TwistedGroupAlgebra, coefficients: dict[Element, Fraction]):
        self.algebra = algebra
        cleaned = {}
        for g, q in coefficients.items():
            q = Fraction(q)
            if q:
                cleaned[algebra.group.check_element(g)] = q
        self.coefficients = cleaned

    def _check(self, other: "AlgebraElement"):
        if self.algebra != other.algebra:
            raise ValueError("elements of different algebras")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        coeffs = dict(self.coefficients)
        for g, q in other.coefficients.items():
            coeffs[g] = coeffs.get(g, Fraction(0)) + q
        return AlgebraElement(self.algebra, coeffs)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.algebra, {g: -q for g, q in self.coefficients.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, s) -> "AlgebraElement":
        s = Fraction(s)
        return AlgebraElement(self.algebra, {g: q * s for g, q in self.coefficients.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        add = self.algebra.group.add
        constants = self.algebra.structure_constant
        coeffs: dict[Element, Fraction] = {}
        for g, x in self.coefficients.items():
            for h, y in other.coefficients.items():
                gh = add(g, h)
                coeffs[gh] = coeffs.get(gh, Fraction(0)) + x * y * constants(g, h)
        return AlgebraElement(self.algebra, coeffs)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, g: Element) -> Fraction:
        return self.coefficients.get(g, Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra == other.algebra and self.coefficients == other.coefficients

    def __repr__(self):
        if not self.coefficients:
            return "0"
        return " + ".join(f"({q})*b{list(g)}" for g, q in sorted(self.coefficients.items()))


def algebra_multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of the structure table (function form of x * y)."""
    return x * y


class AlgebraHom:
    """Verified Q-algebra surjection from a twisted group algebra onto a field.

    Basis symbols map to radicals; multiplicativity against the structure
    constants is checked on construction for every pair.
    """

    def __init__(self, algebra: TwistedGroupAlgebra, images: dict[Element, RadicalElement]):
        self.algebra = algebra
        group = algebra.group
        for g in group.elements():
            if g not in images:
                raise NotASplitting(f"no image assigned to basis symbol at {g}")
        for g in group.elements():
            for h in group.elements():
                expected = algebra.cocycle(g, h) * images[group.add(g, h)]
                if images[g] * images[h] != expected:
                    raise NotASplitting(f"images are not multiplicative at ({g}, {h})")
        self.images = dict(images)
        self.field = field_of_radicals(images.values())
        # coordinates of each image in the square-class basis of the field
        self.coordinates = {g: v.as_sqrt_multiple() for g, v in images.items()}

    def image(self, g: Element) -> RadicalElement:
        return self.images[g]

    def evaluate_coordinates(self, x: AlgebraElement) -> dict[int, Fraction]:
        """Image of x as {square class d: rational coefficient of sqrt(d)}."""
        coords: dict[int, Fraction] = {}
        for g, coeff in x.coefficients.items():
            q, d = self.coordinates[g]
            coords[d] = coords.get(d, Fraction(0)) + coeff * q
        return {d: q for d, q in coords.items() if q}

    def maps_to_one(self, x: AlgebraElement) -> bool:
        return self.evaluate_coordinates(x) == {1: Fraction(1)}

    def coordinate_rows(self) -> tuple[list[int], list[tuple]]:
        """Square classes and the matrix of the hom in class coordinates.

        Row k gives, for each basis symbol (in canonical element order), its
        contribution to the coefficient of sqrt(classes[k]).
        """
        elements = self.algebra.group.elements()
        classes = sorted({d for _, d in self.coordinates.values()}, key=abs)
        rows = [
            tuple(
                self.coordinates[g][0] if self.coordinates[g][1] == d else Fraction(0)
                for g in elements
            )
            for d in classes
        ]
        return classes, rows

    def kernel_basis(self) -> list[AlgebraElement]:
        """Basis of the kernel, by linear algebra on square-class coordinates."""
        elements = self.algebra.group.elements()
        _, rows = self.coordinate_rows()
        basis = []
        for v in linalg.nullspace(tuple(rows)):
            basis.append(AlgebraElement(self.algebra, dict(zip(elements, v))))
        return basis

    def __repr__(self):
        return f"AlgebraHom({self.algebra} -> {self.field})"


def hom_from_splitting(algebra: TwistedGroupAlgebra, a: OneCochain) -> AlgebraHom:
    """The quotient map b_g -> a(g) onto the field generated by the values of a."""
    if a.group != algebra.group:
        raise NotASplitting("cochain group does not match the algebra")
    if a.coboundary() != algebra.cocycle:
        raise NotASplitting("cochain does not split the algebra's cocycle")
    return AlgebraHom(algebra, a.values())


def kernel_projector(algebra: TwistedGroupAlgebra, hom: AlgebraHom) -> AlgebraElement:
    """The idempotent cutting out the field quotient of a commutative algebra.

    Characterized by two linear conditions: it maps to 1 under the quotient
    and annihilates the quotient's kernel.  Idempotency follows (p - 1 lies
    in the kernel, so p(p - 1) = 0), and semisimplicity makes the solution
    unique.
    """
    group = algebra.group
    elements = group.elements()

    classes, class_rows = hom.coordinate_rows()
    rows: list[tuple] = list(class_rows)
    rhs: list[Fraction] = [Fraction(1) if d == 1 else Fraction(0) for d in classes]

    for k in hom.kernel_basis():
        mult = algebra.left_multiplication_matrix(k)
        for row in mult:
            rows.append(row)
            rhs.append(Fraction(0))

    solution = linalg.solve(tuple(rows), tuple(rhs))
    if solution is None:
        raise NoProjector("projector system is inconsistent")
    projector = AlgebraElement(algebra, dict(zip(elements, solution)))
    if projector * projector != projector:
        raise NoProjector("solved element is not idempotent")
    return projector


# ---------------------------------------------------------------------------
# Endomorphism-algebra descriptors
# ---------------------------------------------------------------------------

PRIMITIVE = "primitive"
MATRIX_OVER_FIELD = "matrix_over_field"
QUATERNIONIC = "quaternionic"


@dataclass(frozen=True)
class EndAlgebraDescriptor:
    """Shape data of an endomorphism algebra M(n, D) acting on an abelian variety.

    division_degree is 1 when D is the center and 2 when D is a quaternion
    division algebra over it; maximal_field_degree and center_degree are the
    degrees over Q of a maximal subfield and of the center.
    """

    n: int
    division_degree: int
    center_degree: int
    maximal_field_degree: int
    abelian_variety_dim: int

    def validate(self):
        if self.n < 1 or self.division_degree not in (1, 2):
            raise InconsistentDescriptor("n must be >= 1 and the division degree 1 or 2")
        if self.center_degree < 1 or self.maximal_field_degree % self.center_degree:
            raise InconsistentDescriptor("center degree must divide the maximal field degree")
        if self.n * self.division_degree != self.maximal_field_degree // self.center_degree:
            raise InconsistentDescriptor("n * t must equal the relative degree [E:F]")
        if self.abelian_variety_dim < 1 or self.abelian_variety_dim % self.maximal_field_degree:
            raise InconsistentDescriptor("the maximal field degree must divide the dimension")


@dataclass(frozen=True)
class EndAlgebraClassification:
    primitivity: str  # PRIMITIVE or "non_primitive(n)"
    kind: str  # MATRIX_OVER_FIELD or QUATERNIONIC
    n: int


def classify_end_algebra(descriptor: EndAlgebraDescriptor) -> EndAlgebraClassification:
    """Primitivity (n = 1) and the matrix-versus-quaternion dichotomy (t)."""
    descriptor.validate()
    primitivity = PRIMITIVE if descriptor.n == 1 else f"non_primitive({descriptor.n})"
    kind = MATRIX_OVER_FIELD if descriptor.division_degree == 1 else QUATERNIONIC
    return EndAlgebraClassification(primitivity, kind, descriptor.n)
