"""Exact certification of tilings plus the near-equal-sides oracle.

``validate`` certifies that a Tessellation really is a decomposition of
[0, z]^d: containment, pairwise interior-disjointness, and the exact
volume identity sum(s_i^d) = z^d.  The three conditions together are
equivalent to coverage, so no arrangement computation is needed.

``stability_oracle`` then evaluates the rigidity statement this toolkit
is built around: if every side length, after normalizing the largest to
1, is strictly greater than 1 - 1/(n^(1/d) + 1), then n must equal m^d
for an integer m and all pieces must be congruent.  The irrational
threshold is never materialized; the interval test is decided by the
equivalent rational comparison n < (s / (1 - s))^d.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .core import Tessellation, interiors_overlap

OUT_OF_BOUNDS = "OUT_OF_BOUNDS"
OVERLAP = "OVERLAP"
VOLUME_MISMATCH = "VOLUME_MISMATCH"

_KIND_ORDER = {OUT_OF_BOUNDS: 0, OVERLAP: 1, VOLUME_MISMATCH: 2}


class InvalidInputError(ValueError):
    """An operation that requires a valid tiling was fed an invalid one."""


class StabilityViolationError(RuntimeError):
    """The near-equal hypothesis held but the conclusion failed.

    The implication is mathematically guaranteed, so seeing this error
    means the toolkit itself has a bug, not that a counterexample exists.
    """


class Violation(NamedTuple):
    kind: str
    indices: tuple[int, ...]


@dataclass(frozen=True)
class ValidationReport:
    is_valid: bool
    volume_target: Fraction
    volume_sum: Fraction
    violations: tuple[Violation, ...]


@dataclass(frozen=True)
class StabilityReport:
    n: int
    d: int
    s_max: Fraction
    hypothesis_holds: bool
    n_is_perfect_power: bool
    root_m: Optional[int]
    all_sides_equal: bool
    offending_side: Optional[Fraction]


def int_dth_root(n: int, d: int) -> Optional[int]:
    """Exact integer m with m**d == n, or None if no such integer exists."""
    if n < 1 or d < 1:
        return None
    lo, hi = 1, 1
    while hi**d < n:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**d < n:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo**d == n else None


def _overlap_pairs(t: Tessellation, prefilter: bool) -> list[tuple[int, int]]:
    pairs: list[tuple[int, int]] = []
    if prefilter:
        # Sweep over cubes ordered by first coordinate: once a later cube
        # starts at or beyond the current cube's far face on axis 0, no
        # further cube in the order can overlap it.
        order = sorted(range(t.n), key=lambda i: t.cubes[i].corner[0])
        for pos, i in enumerate(order):
            hi = t.cubes[i].corner[0] + t.cubes[i].side
            for j in order[pos + 1 :]:
                if t.cubes[j].corner[0] >= hi:
                    break
                if interiors_overlap(t.cubes[i], t.cubes[j], t.d):
                    pairs.append((min(i, j), max(i, j)))
    else:
        for i in range(t.n):
            for j in range(i + 1, t.n):
                if interiors_overlap(t.cubes[i], t.cubes[j], t.d):
                    pairs.append((i, j))
    return sorted(pairs)


def validate(t: Tessellation, prefilter: bool = True) -> ValidationReport:
    """Certify that ``t`` decomposes [0, z]^d; problems are reported, not raised.

    All violations are collected (no fail-fast) and listed in canonical
    order: out-of-bounds cubes by index, then overlapping pairs by index
    pair, then the volume mismatch if any.  ``prefilter`` toggles the
    axis-0 sweep used to cut down overlap candidates; it never changes
    the report.
    """
    violations: list[Violation] = []
    for i, cube in enumerate(t.cubes):
        for k in range(t.d):
            lo, hi = cube.interval(k)
            if lo < 0 or hi > t.z:
                violations.append(Violation(OUT_OF_BOUNDS, (i,)))
                break
    for i, j in _overlap_pairs(t, prefilter):
        violations.append(Violation(OVERLAP, (i, j)))
    volume_target = t.z**t.d
    volume_sum = sum((cube.side**t.d for cube in t.cubes), Fraction(0))
    if volume_sum != volume_target:
        violations.append(Violation(VOLUME_MISMATCH, ()))
    violations.sort(key=lambda v: (_KIND_ORDER[v.kind], v.indices))
    return ValidationReport(
        is_valid=not violations,
        volume_target=volume_target,
        volume_sum=volume_sum,
        violations=tuple(violations),
    )


def hypothesis_check(t: Tessellation) -> tuple[bool, Optional[Fraction]]:
    """Decide whether all normalized sides lie in the admissible interval.

    With s' = side / max_side, the requirement s' > 1 - 1/(n^(1/d) + 1)
    is equivalent to s' = 1 or n < (s' / (1 - s'))^d, which is decidable
    exactly.  The map s' -> (s'/(1-s'))^d is increasing, so the minimal
    side decides: if it passes, every side passes.  On failure the
    minimal normalized side is returned as the offending witness.
    """
    s_max = t.max_side
    r = t.min_side / s_max
    if r == 1:
        return True, None
    if t.n < (r / (1 - r)) ** t.d:
        return True, None
    return False, r


class ConclusionResult(NamedTuple):
    n_is_perfect_power: bool
    root_m: Optional[int]
    all_sides_equal: bool


def conclusion_check(t: Tessellation) -> ConclusionResult:
    """Is n a perfect d-th power, and are all pieces congruent?"""
    m = int_dth_root(t.n, t.d)
    all_equal = t.min_side == t.max_side
    return ConclusionResult(m is not None, m, all_equal)


def stability_oracle(t: Tessellation) -> StabilityReport:
    """Full rigidity report for a valid tessellation.

    Raises InvalidInputError when ``validate`` rejects the input, and
    StabilityViolationError if the hypothesis holds while the conclusion
    fails (which would indicate a bug in this package).
    """
    if not validate(t).is_valid:
        raise InvalidInputError("tessellation does not pass validation")
    hypothesis_holds, offending = hypothesis_check(t)
    conclusion = conclusion_check(t)
    if hypothesis_holds and not (
        conclusion.n_is_perfect_power and conclusion.all_sides_equal
    ):
        raise StabilityViolationError(
            f"hypothesis holds for n={t.n}, d={t.d} but the conclusion fails; "
            "this is a bug in cubetess"
        )
    return StabilityReport(
        n=t.n,
        d=t.d,
        s_max=t.max_side,
        hypothesis_holds=hypothesis_holds,
        n_is_perfect_power=conclusion.n_is_perfect_power,
        root_m=conclusion.root_m,
        all_sides_equal=conclusion.all_sides_equal,
        offending_side=offending,
    )
