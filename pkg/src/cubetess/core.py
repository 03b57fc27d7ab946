"""Exact scalar and geometric value types shared by the whole toolkit.

Every scalar quantity (coordinates, side lengths, the target side) is a
``fractions.Fraction``.  Nothing on any decision path touches floating
point; comparisons that would naively involve d-th roots are performed by
raising both sides to the d-th power elsewhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

#: The one scalar type used for geometry.  ``Fraction`` already maintains
#: the canonical form this package relies on: reduced terms and a strictly
#: positive denominator.
Rational = Fraction


class DimensionMismatchError(ValueError):
    """Two geometric objects disagree about the ambient dimension."""


def as_rational(value: int | str | Fraction) -> Fraction:
    """Coerce ``value`` to an exact Fraction.

    Accepts ints, Fractions, and strings of the form ``"p"`` or ``"p/q"``
    (both parts may be signed).  Floats are rejected on purpose: silently
    converting one would smuggle rounding error into an exact pipeline.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational scalar")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        num, slash, den = text.partition("/")
        if slash:
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


@dataclass(frozen=True)
class Cube:
    """Axis-aligned cube given by its minimal corner and side length."""

    corner: tuple[Fraction, ...]
    side: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "corner", tuple(as_rational(x) for x in self.corner))
        object.__setattr__(self, "side", as_rational(self.side))
        if self.side <= 0:
            raise ValueError(f"cube side must be positive, got {self.side}")

    @property
    def dimension(self) -> int:
        return len(self.corner)

    def interval(self, axis: int) -> tuple[Fraction, Fraction]:
        """Closed projection [lo, hi] of the cube onto a 0-based axis."""
        lo = self.corner[axis]
        return lo, lo + self.side


@dataclass(frozen=True)
class Tessellation:
    """A target cube [0, z]^d together with the list of small cubes.

    Construction only enforces structural invariants (dimensions agree,
    sides positive, at least one cube).  Whether the cubes actually tile
    [0, z]^d is certified separately by ``validation.validate``, which
    reports problems instead of refusing to build the value.
    """

    d: int
    z: Fraction
    cubes: tuple[Cube, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.d, int) or self.d < 2:
            raise ValueError(f"dimension must be an integer >= 2, got {self.d}")
        object.__setattr__(self, "z", as_rational(self.z))
        if self.z <= 0:
            raise ValueError(f"target side must be positive, got {self.z}")
        object.__setattr__(self, "cubes", tuple(self.cubes))
        if not self.cubes:
            raise ValueError("a tessellation needs at least one cube")
        for i, cube in enumerate(self.cubes):
            if cube.dimension != self.d:
                raise DimensionMismatchError(
                    f"cube {i} has dimension {cube.dimension}, expected {self.d}"
                )

    @property
    def n(self) -> int:
        return len(self.cubes)

    def sides(self) -> tuple[Fraction, ...]:
        return tuple(cube.side for cube in self.cubes)

    @property
    def max_side(self) -> Fraction:
        return max(self.sides())

    @property
    def min_side(self) -> Fraction:
        return min(self.sides())


def cube_volume(cube: Cube, d: int) -> Fraction:
    """Exact volume side**d of a cube in dimension d."""
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    return cube.side**d


def interiors_overlap(a: Cube, b: Cube, d: int) -> bool:
    """True iff the open cubes intersect.

    Boundary contact (shared facet, edge, or corner) does not count as
    overlap; all comparisons are exact.
    """
    if a.dimension != d or b.dimension != d:
        raise DimensionMismatchError(
            f"expected dimension {d}, got {a.dimension} and {b.dimension}"
        )
    for k in range(d):
        alo, ahi = a.interval(k)
        blo, bhi = b.interval(k)
        if max(alo, blo) >= min(ahi, bhi):
            return False
    return True


def scale_tessellation(t: Tessellation, factor: int | str | Fraction) -> Tessellation:
    """Scale the whole configuration by a positive rational factor."""
    f = as_rational(factor)
    if f <= 0:
        raise ValueError(f"scale factor must be positive, got {f}")
    cubes = tuple(
        Cube(tuple(x * f for x in cube.corner), cube.side * f) for cube in t.cubes
    )
    return Tessellation(t.d, t.z * f, cubes)


def normalized(t: Tessellation) -> Tessellation:
    """Rescale so the largest side length is exactly 1."""
    return scale_tessellation(t, 1 / t.max_side)
