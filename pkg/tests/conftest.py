"""Shared corpus fixtures.

The corpus mixes every generator family over parameter sweeps with the
complete set of planar lattice-search results at scales up to 4 and at
most 9 pieces; the property suites quantify over it.
"""

from fractions import Fraction

import pytest

from cubetess import (
    SearchConfig,
    Tessellation,
    merged_block_grid,
    perfect_grid,
    refine,
    search_tilings,
    shell_construction,
)


def build_generator_corpus() -> list[tuple[str, Tessellation]]:
    corpus = []
    for d in (2, 3):
        for m in (1, 2, 3, 4):
            for s in (Fraction(1), Fraction(1, 2), Fraction(2, 3)):
                corpus.append((f"grid(d={d},m={m},s={s})", perfect_grid(d, m, s)))
    for d in (2, 3):
        for m in range(2, 7):
            corpus.append((f"shell(d={d},m={m})", shell_construction(d, m)))
    for d in (2, 3):
        for m in (2, 3, 4):
            for k in range(1, m + 1):
                corpus.append(
                    (f"merged(d={d},m={m},k={k})", merged_block_grid(d, m, k))
                )
    corpus.append(
        ("refine(grid22,0,grid22)", refine(perfect_grid(2, 2, 1), 0, perfect_grid(2, 2, 1)))
    )
    corpus.append(
        (
            "refine(merged232,0,grid22)",
            refine(merged_block_grid(2, 3, 2), 0, perfect_grid(2, 2, 1)),
        )
    )
    corpus.append(
        (
            "refine(merged232,1,grid22)",
            refine(merged_block_grid(2, 3, 2), 1, perfect_grid(2, 2, 1)),
        )
    )
    corpus.append(
        (
            "refine(grid23,4,shell22)",
            refine(perfect_grid(2, 3, 1), 4, shell_construction(2, 2)),
        )
    )
    corpus.append(
        ("refine(grid32,0,grid32)", refine(perfect_grid(3, 2, 1), 0, perfect_grid(3, 2, 1)))
    )
    corpus.append(
        (
            "refine(shell22,0,merged222)",
            refine(shell_construction(2, 2), 0, merged_block_grid(2, 2, 2)),
        )
    )
    return corpus


def build_search_corpus() -> list[tuple[str, Tessellation]]:
    corpus = []
    for L in (1, 2, 3, 4):
        outcome = search_tilings(SearchConfig(d=2, L=L, n_max=9))
        assert outcome.exhausted
        for i, t in enumerate(outcome.tilings):
            corpus.append((f"search(L={L})[{i}]", t))
    return corpus


@pytest.fixture(scope="session")
def generator_corpus() -> list[tuple[str, Tessellation]]:
    return build_generator_corpus()


@pytest.fixture(scope="session")
def search_corpus() -> list[tuple[str, Tessellation]]:
    return build_search_corpus()


@pytest.fixture(scope="session")
def full_corpus(generator_corpus, search_corpus) -> list[tuple[str, Tessellation]]:
    return generator_corpus + search_corpus
