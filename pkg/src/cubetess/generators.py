"""Constructors for the tessellation corpus.

All generators return cubes in lexicographic order of their minimal
corners, so serialization and test fixtures are stable.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .core import Cube, Tessellation, as_rational


def _lex_sorted(cubes: list[Cube]) -> tuple[Cube, ...]:
    return tuple(sorted(cubes, key=lambda c: c.corner))


def perfect_grid(d: int, m: int, s: int | str | Fraction) -> Tessellation:
    """m^d cubes of side s tiling [0, m*s]^d."""
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    if m < 1:
        raise ValueError(f"grid order must be >= 1, got {m}")
    s = as_rational(s)
    if s <= 0:
        raise ValueError(f"side must be positive, got {s}")
    cubes = [
        Cube(tuple(i * s for i in coords), s) for coords in product(range(m), repeat=d)
    ]
    return Tessellation(d, m * s, _lex_sorted(cubes))


def shell_construction(d: int, m: int) -> Tessellation:
    """Near-tight example: unit shell around a refilled hole.

    Start from the unit-cell grid of [0, m]^d, keep only the cells whose
    minimal corner touches a coordinate hyperplane through the origin
    (m^d - (m-1)^d of them), and fill the remaining hole [1, m]^d with an
    m-grid of cubes of side (m-1)/m.  Total count n = 2*m^d - (m-1)^d,
    side multiset {1, (m-1)/m}, minimal side ratio exactly 1 - 1/m.  The
    count is never a perfect d-th power, yet the ratio approaches the
    admissible interval as m grows, which is what makes the example
    nearly tight.
    """
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    if m < 2:
        raise ValueError(f"shell order must be >= 2, got {m}")
    cubes = [
        Cube(tuple(Fraction(i) for i in coords), Fraction(1))
        for coords in product(range(m), repeat=d)
        if min(coords) == 0
    ]
    inner = Fraction(m - 1, m)
    for coords in product(range(m), repeat=d):
        corner = tuple(1 + i * inner for i in coords)
        cubes.append(Cube(corner, inner))
    return Tessellation(d, Fraction(m), _lex_sorted(cubes))


def merged_block_grid(d: int, m: int, k: int) -> Tessellation:
    """Unit grid of [0, m]^d with the k-block at the origin merged into one cube.

    Realizes the composite count n = m^d - k^d + 1.
    """
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    if not 1 <= k <= m:
        raise ValueError(f"block order must satisfy 1 <= k <= m, got k={k}, m={m}")
    cubes = [Cube((Fraction(0),) * d, Fraction(k))]
    for coords in product(range(m), repeat=d):
        if all(i < k for i in coords):
            continue
        cubes.append(Cube(tuple(Fraction(i) for i in coords), Fraction(1)))
    return Tessellation(d, Fraction(m), _lex_sorted(cubes))


def refine(t: Tessellation, index: int, inner: Tessellation) -> Tessellation:
    """Replace the cube at ``index`` with a scaled copy of ``inner``.

    The inner tessellation is scaled by side/z_inner and translated onto
    the replaced cube's corner, so the piece count grows by inner.n - 1.
    """
    if t.d != inner.d:
        raise ValueError(f"dimension mismatch: {t.d} vs {inner.d}")
    if not 0 <= index < t.n:
        raise IndexError(f"cube index {index} out of range for n={t.n}")
    host = t.cubes[index]
    f = host.side / inner.z
    grafted = [
        Cube(
            tuple(host.corner[k] + c.corner[k] * f for k in range(t.d)),
            c.side * f,
        )
        for c in inner.cubes
    ]
    cubes = list(t.cubes[:index]) + grafted + list(t.cubes[index + 1 :])
    return Tessellation(t.d, t.z, _lex_sorted(cubes))
