"""Finite abelian groups as products of cyclic groups, and their characters.

Elements are exponent tuples with componentwise addition modulo the cyclic
orders; the identity is the zero tuple.  Iteration order over elements and
characters is the lexicographic product order, which every deterministic
construction in the package relies on.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from .radicals import RadicalElement

Element = tuple[int, ...]


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Direct product of cyclic groups of the given orders (each >= 2)."""

    cyclic_orders: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "cyclic_orders", tuple(int(n) for n in self.cyclic_orders))
        if any(n < 2 for n in self.cyclic_orders):
            raise ValueError("cyclic orders must be >= 2")

    @property
    def identity(self) -> Element:
        return (0,) * len(self.cyclic_orders)

    @property
    def order(self) -> int:
        return math.prod(self.cyclic_orders)

    @property
    def exponent(self) -> int:
        return reduce(math.lcm, self.cyclic_orders, 1)

    def elements(self) -> list[Element]:
        return [tuple(g) for g in itertools.product(*(range(n) for n in self.cyclic_orders))]

    def contains(self, g) -> bool:
        return (
            isinstance(g, tuple)
            and len(g) == len(self.cyclic_orders)
            and all(isinstance(x, int) and 0 <= x < n for x, n in zip(g, self.cyclic_orders))
        )

    def check_element(self, g) -> Element:
        g = tuple(int(x) for x in g)
        if not self.contains(g):
            raise ValueError(f"{g} is not an element of {self}")
        return g

    def add(self, g: Element, h: Element) -> Element:
        return tuple((a + b) % n for a, b, n in zip(g, h, self.cyclic_orders))

    def neg(self, g: Element) -> Element:
        return tuple((-a) % n for a, n in zip(g, self.cyclic_orders))

    def power(self, g: Element, k: int) -> Element:
        return tuple((a * k) % n for a, n in zip(g, self.cyclic_orders))

    def generator(self, i: int) -> Element:
        """The canonical generator of the i-th cyclic factor."""
        return tuple(1 if j == i else 0 for j in range(len(self.cyclic_orders)))

    def element_order(self, g: Element) -> int:
        return reduce(math.lcm, (n // math.gcd(a, n) for a, n in zip(g, self.cyclic_orders)), 1)

    def __repr__(self):
        if not self.cyclic_orders:
            return "Z/1"
        return " x ".join(f"Z/{n}" for n in self.cyclic_orders)


class GroupCharacter:
    """Multiplicative map from a finite abelian group to roots of unity."""

    __slots__ = ("group", "_values")

    def __init__(self, group: FiniteAbelianGroup, values: dict[Element, RadicalElement]):
        self.group = group
        table = {}
        for g in group.elements():
            try:
                v = values[g]
            except KeyError:
                raise ValueError(f"character table missing value at {g}") from None
            if not v.is_root_of_unity:
                raise ValueError(f"character value {v!r} at {g} is not a root of unity")
            table[g] = v
        if not table[group.identity].is_one:
            raise ValueError("character must send the identity to 1")
        for g in group.elements():
            for h in group.elements():
                if table[group.add(g, h)] != table[g] * table[h]:
                    raise ValueError(f"character table not multiplicative at ({g}, {h})")
        self._values = table

    @classmethod
    def from_index(cls, group: FiniteAbelianGroup, index: Element) -> "GroupCharacter":
        """Character g -> e(sum_j index_j * g_j / n_j); indices modulo the orders."""
        index = tuple(int(k) for k in index)
        values = {}
        for g in group.elements():
            t = sum(
                (Fraction(k * a, n) for k, a, n in zip(index, g, group.cyclic_orders)),
                Fraction(0),
            )
            values[g] = RadicalElement.root_of_unity(t)
        return cls(group, values)

    @classmethod
    def trivial(cls, group: FiniteAbelianGroup) -> "GroupCharacter":
        return cls.from_index(group, group.identity)

    def __call__(self, g: Element) -> RadicalElement:
        return self._values[g]

    def values(self) -> dict[Element, RadicalElement]:
        return dict(self._values)

    def __mul__(self, other: "GroupCharacter") -> "GroupCharacter":
        if self.group != other.group:
            raise ValueError("characters live on different groups")
        return GroupCharacter(
            self.group, {g: self._values[g] * other._values[g] for g in self._values}
        )

    @property
    def order(self) -> int:
        return reduce(math.lcm, (v.torsion.denominator for v in self._values.values()), 1)

    @property
    def is_trivial(self) -> bool:
        return all(v.is_one for v in self._values.values())

    def __eq__(self, other):
        if not isinstance(other, GroupCharacter):
            return NotImplemented
        return self.group == other.group and self._values == other._values

    def __hash__(self):
        return hash((self.group, tuple(sorted(self._values.items()))))

    def __repr__(self):
        return f"GroupCharacter({self.group}, {self._values})"


def all_characters(group: FiniteAbelianGroup) -> list[GroupCharacter]:
    """The full dual group, enumerated in the canonical element order."""
    return [GroupCharacter.from_index(group, idx) for idx in group.elements()]
