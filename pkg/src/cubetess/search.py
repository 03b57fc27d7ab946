"""Exhaustive lattice search: an independent brute-force oracle.

The search enumerates tilings of the integer box [0, L]^d by cubes with
integer sides, which captures every rational tiling whose denominators
divide the chosen scale.  Any single run is therefore a bounded positive
oracle: it certifies which counts are achievable at that scale, but an
empty result never proves a count impossible for finer lattices.

Enumeration is corner-filling: repeatedly locate the lexicographically
least uncovered cell and try each side for a cube cornered there.  In a
finished tiling the cube covering that cell must be cornered exactly
there (its corner cell cannot lie in the already-covered lex-prefix), so
every tiling is produced exactly once and no symmetry quotienting is
applied.  Pruning is exact integer volume accounting.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Optional

from .core import Cube, Tessellation


class SearchLimitError(RuntimeError):
    """A node or tiling limit truncated a run whose caller needed exhaustion."""


@dataclass(frozen=True)
class SearchConfig:
    """Bounds for one lattice-scale run.

    ``L`` is the target side in lattice units; piece sides are integers in
    [side_min, side_max].  ``n`` demands an exact piece count, ``n_max``
    caps it.  ``node_limit`` bounds the number of search-tree nodes so
    worst cases stay bounded; the default is far beyond anything the
    desk-scale configurations here need.
    """

    d: int
    L: int
    n: Optional[int] = None
    n_max: Optional[int] = None
    side_min: int = 1
    side_max: Optional[int] = None
    tiling_limit: Optional[int] = None
    node_limit: int = 100_000_000

    def __post_init__(self) -> None:
        if self.d < 2:
            raise ValueError(f"dimension must be >= 2, got {self.d}")
        if self.L < 1:
            raise ValueError(f"lattice side must be >= 1, got {self.L}")
        if self.side_max is None:
            object.__setattr__(self, "side_max", self.L)
        if not 1 <= self.side_min <= self.side_max <= self.L:
            raise ValueError(
                f"need 1 <= side_min <= side_max <= L, got "
                f"[{self.side_min}, {self.side_max}] with L={self.L}"
            )
        if self.n is not None and self.n < 1:
            raise ValueError(f"exact count must be >= 1, got {self.n}")
        if self.n_max is not None and self.n_max < 1:
            raise ValueError(f"count cap must be >= 1, got {self.n_max}")


@dataclass(frozen=True)
class SearchOutcome:
    tilings: tuple[Tessellation, ...]
    exhausted: bool
    nodes_visited: int


@dataclass
class _SearchState:
    covered: bytearray
    placements: list[tuple[tuple[int, ...], int]] = field(default_factory=list)
    tilings: list[Tessellation] = field(default_factory=list)
    nodes: int = 0
    truncated: bool = False


def _run(cfg: SearchConfig) -> _SearchState:
    d, L = cfg.d, cfg.L
    total_cells = L**d
    strides = [L ** (d - 1 - k) for k in range(d)]
    smin: int = cfg.side_min
    smax: int = cfg.side_max  # type: ignore[assignment]  # filled in post_init
    vmax_piece = smax**d
    state = _SearchState(covered=bytearray(total_cells))

    def cell_coords(idx: int) -> tuple[int, ...]:
        coords = []
        for stride in strides:
            coords.append(idx // stride)
            idx %= stride
        return tuple(coords)

    def block_indices(coords: tuple[int, ...], s: int, shell_only: bool) -> list[int]:
        base = sum(c * stride for c, stride in zip(coords, strides))
        out = []
        for offsets in product(range(s), repeat=d):
            if shell_only and max(offsets) != s - 1:
                continue
            out.append(base + sum(o * stride for o, stride in zip(offsets, strides)))
        return out

    def emit() -> None:
        if cfg.tiling_limit is not None and len(state.tilings) >= cfg.tiling_limit:
            state.truncated = True
            return
        cubes = tuple(
            Cube(tuple(Fraction(c) for c in coords), Fraction(s))
            for coords, s in state.placements
        )
        state.tilings.append(Tessellation(d, Fraction(L), cubes))

    def rec(scan_from: int, used: int, uncovered_vol: int) -> None:
        if state.truncated:
            return
        state.nodes += 1
        if state.nodes > cfg.node_limit:
            state.truncated = True
            return
        idx = scan_from
        while idx < total_cells and state.covered[idx]:
            idx += 1
        if idx == total_cells:
            if cfg.n is None or used == cfg.n:
                emit()
            return
        coords = cell_coords(idx)
        hi = min(smax, L - max(coords))
        checked_to = 0  # side up to which the block is known free
        for s in range(smin, hi + 1):
            fresh = block_indices(coords, s, shell_only=checked_to == s - 1)
            if any(state.covered[i] for i in fresh):
                # A larger cube contains this blocked block, so stop growing.
                break
            checked_to = s
            used_after = used + 1
            vol_after = uncovered_vol - s**d
            if cfg.n is not None:
                pieces_left = cfg.n - used_after
                if pieces_left < 0:
                    break
                if vol_after < pieces_left * smin**d:
                    break  # even the smallest pieces overshoot; larger s is worse
                if vol_after > pieces_left * vmax_piece:
                    continue  # not enough pieces for the remaining volume
            if cfg.n_max is not None:
                min_more = -(-vol_after // vmax_piece)
                if used_after + min_more > cfg.n_max:
                    continue
            block = block_indices(coords, s, shell_only=False)
            for i in block:
                state.covered[i] = 1
            state.placements.append((coords, s))
            rec(idx + 1, used_after, vol_after)
            state.placements.pop()
            for i in block:
                state.covered[i] = 0
            if state.truncated:
                return

    rec(0, 0, total_cells)
    return state


def search_tilings(cfg: SearchConfig) -> SearchOutcome:
    """Enumerate all tilings allowed by ``cfg`` in canonical placement order.

    The output order and contents are deterministic.  ``exhausted`` is
    False whenever a node or tiling limit cut the run short; only an
    exhausted run certifies that nothing else exists at this scale.
    """
    state = _run(cfg)
    return SearchOutcome(
        tilings=tuple(state.tilings),
        exhausted=not state.truncated,
        nodes_visited=state.nodes,
    )


def feasible_counts(d: int, L: int, n_max: int) -> set[int]:
    """Piece counts <= n_max achieved by some tiling at any lattice scale <= L.

    Scales 1..L are searched in turn and the achieved counts are unioned,
    so a coarse-scale tiling (for example the 2x2 grid at scale 2) is
    reported even when a finer scale cannot express it.  The result
    contains positive certificates only: a count that is missing might
    still be achievable with denominators beyond every scale tried.
    """
    if L < 1:
        raise ValueError(f"lattice side must be >= 1, got {L}")
    if n_max < 1:
        raise ValueError(f"count cap must be >= 1, got {n_max}")
    counts: set[int] = set()
    for scale in range(1, L + 1):
        outcome = search_tilings(SearchConfig(d=d, L=scale, n_max=n_max))
        if not outcome.exhausted:
            raise SearchLimitError(
                f"scale {scale} run truncated after {outcome.nodes_visited} nodes"
            )
        counts.update(t.n for t in outcome.tilings)
    return counts


def extremal_ratio(d: int, L: int, n: int) -> Optional[Fraction]:
    """Best min-side/max-side ratio over all n-piece tilings at scale L.

    Returns None when no tiling with exactly n pieces exists at this
    scale.  Raises SearchLimitError if the run was truncated, since a
    maximum over a partial enumeration certifies nothing.
    """
    outcome = search_tilings(SearchConfig(d=d, L=L, n=n))
    if not outcome.exhausted:
        raise SearchLimitError(
            f"run truncated after {outcome.nodes_visited} nodes"
        )
    if not outcome.tilings:
        return None
    return max(t.min_side / t.max_side for t in outcome.tilings)
