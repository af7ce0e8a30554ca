"""Exact arithmetic for monomial ideals of C[x, y] of finite colength.

A monomial x^a y^b is identified with the lattice point (a, b); an ideal is
stored by its minimal generating set, canonically sorted so equality is
structural.  All exponents are plain Python integers, so nothing overflows.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError

Exponent = tuple[int, int]


def minimal_generators(exponents) -> tuple[Exponent, ...]:
    """Divisibility-minimal subset of a nonempty set of exponent pairs.

    Idempotent, and membership in the generated ideal is unchanged.
    """
    points = sorted({(int(a), int(b)) for a, b in exponents})
    if not points:
        raise DomainError("a monomial ideal needs at least one generator")
    if points[0][0] < 0 or any(b < 0 for _, b in points):
        raise DomainError("exponents must be nonnegative")
    kept: list[Exponent] = []
    last_column = None
    best_height = None
    for a, b in points:
        if a == last_column:
            continue
        last_column = a
        if best_height is None or b < best_height:
            kept.append((a, b))
            best_height = b
    return tuple(kept)


def divides(d: Exponent, e: Exponent) -> bool:
    return d[0] <= e[0] and d[1] <= e[1]


class MonomialIdeal:
    """A monomial ideal, immutable, canonicalized to minimal generators.

    Generators are sorted by (a, b); for a finite-colength ideal the first
    one is the pure y-power (0, b0) and the last the pure x-power (a0, 0).
    """

    __slots__ = ("generators",)

    def __init__(self, generators):
        object.__setattr__(self, "generators", minimal_generators(generators))

    def __setattr__(self, name, value):
        raise AttributeError("MonomialIdeal is immutable")

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        return f"MonomialIdeal({list(self.generators)!r})"

    def __str__(self):
        from .expr import ideal_text

        return ideal_text(self)

    # -- structure ---------------------------------------------------------

    @property
    def is_unit(self) -> bool:
        return self.generators == ((0, 0),)

    @property
    def is_finite_colength(self) -> bool:
        """True iff pure powers of both variables occur among the generators."""
        return self.generators[0][0] == 0 and self.generators[-1][1] == 0

    @property
    def x_power(self) -> int:
        """Exponent a0 of the pure x-power generator."""
        self._require_finite()
        return self.generators[-1][0]

    @property
    def y_power(self) -> int:
        """Exponent b0 of the pure y-power generator."""
        self._require_finite()
        return self.generators[0][1]

    def _require_finite(self):
        if not self.is_finite_colength:
            raise DomainError(f"{self!r} does not have finite colength")

    def require_fat_point(self):
        """Raise unless the ideal cuts out a fat point (finite colength, not (1))."""
        self._require_finite()
        if self.is_unit:
            raise DomainError("the unit ideal does not define a fat point")
        return self

    # -- arithmetic ---------------------------------------------------------

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        sums = {
            (a1 + a2, b1 + b2)
            for a1, b1 in self.generators
            for a2, b2 in other.generators
        }
        return MonomialIdeal(sums)

    def __pow__(self, d: int) -> "MonomialIdeal":
        if d < 0:
            raise DomainError("negative ideal powers are undefined")
        result = UNIT_IDEAL
        base = self
        while d:
            if d & 1:
                result = result * base
            base = base * base
            d >>= 1
        return result

    def contains(self, exponent) -> bool:
        """Membership of the monomial x^a y^b in the ideal."""
        a, b = exponent
        if a < 0 or b < 0:
            return False
        return any(divides(g, (a, b)) for g in self.generators)

    def __contains__(self, exponent) -> bool:
        return self.contains(exponent)

    # -- the staircase -------------------------------------------------------

    def column_heights(self) -> list[int]:
        """Height of each staircase column a = 0..a0-1: min{b : (a, b) in the ideal}.

        One sweep over the sorted generators, O(a0 + #generators).
        """
        self._require_finite()
        gens = self.generators
        heights = []
        next_gen = 0
        current = None
        for a in range(self.x_power):
            while next_gen < len(gens) and gens[next_gen][0] <= a:
                b = gens[next_gen][1]
                current = b if current is None else min(current, b)
                next_gen += 1
            heights.append(current)
        return heights

    def colength(self) -> int:
        """dim_C of the quotient ring = number of boxes under the staircase."""
        return sum(self.column_heights())

    def ferrers(self) -> "FerrersDiagram":
        return FerrersDiagram(tuple(self.column_heights()))


@dataclass(frozen=True)
class FerrersDiagram:
    """Weakly decreasing column heights of a finite staircase complement."""

    column_heights: tuple[int, ...]

    def __post_init__(self):
        h = self.column_heights
        if any(h[i] < h[i + 1] for i in range(len(h) - 1)):
            raise DomainError("column heights must be weakly decreasing")
        if h and h[-1] <= 0:
            raise DomainError("column heights must be positive")

    def size(self) -> int:
        return sum(self.column_heights)

    def to_ideal(self) -> MonomialIdeal:
        """The monomial ideal whose staircase has these column heights."""
        h = self.column_heights
        gens = [(len(h), 0)]
        for a, height in enumerate(h):
            if a == 0 or height < h[a - 1]:
                gens.append((a, height))
        return MonomialIdeal(gens)


UNIT_IDEAL = MonomialIdeal([(0, 0)])
MAXIMAL_IDEAL = MonomialIdeal([(1, 0), (0, 1)])


def complete_intersection(a: int, b: int) -> MonomialIdeal:
    """The ideal (x^a, y^b)."""
    if a < 1 or b < 1:
        raise DomainError("pure-power exponents must be positive")
    return MonomialIdeal([(a, 0), (0, b)])
