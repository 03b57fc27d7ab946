"""Generator constructions and their exact counting identities."""

from collections import Counter
from fractions import Fraction

import pytest

from cubetess import (
    Cube,
    hypothesis_check,
    merged_block_grid,
    perfect_grid,
    refine,
    shell_construction,
    validate,
)


class TestPerfectGrid:
    def test_two_by_two(self):
        t = perfect_grid(2, 2, 1)
        assert t.n == 4
        assert t.z == 2
        assert {c.corner for c in t.cubes} == {(0, 0), (0, 1), (1, 0), (1, 1)}

    def test_cubic_half_grid(self):
        t = perfect_grid(3, 2, Fraction(1, 2))
        assert t.n == 8
        assert t.z == 1
        assert set(t.sides()) == {Fraction(1, 2)}

    def test_single_cube(self):
        t = perfect_grid(2, 1, 5)
        assert t.n == 1
        assert t.cubes[0] == Cube((0, 0), 5)

    @pytest.mark.parametrize("bad", [(1, 2, 1), (2, 0, 1), (2, 2, 0), (2, 2, -1)])
    def test_domain_errors(self, bad):
        with pytest.raises(ValueError):
            perfect_grid(*bad)


class TestShellConstruction:
    def test_order_two(self):
        t = shell_construction(2, 2)
        assert t.n == 7
        units = [c for c in t.cubes if c.side == 1]
        halves = [c for c in t.cubes if c.side == Fraction(1, 2)]
        assert {c.corner for c in units} == {(0, 0), (0, 1), (1, 0)}
        assert len(halves) == 4
        assert all(c.corner[0] >= 1 and c.corner[1] >= 1 for c in halves)

    def test_order_three_counts(self):
        t = shell_construction(2, 3)
        assert t.n == 14
        sides = Counter(t.sides())
        assert sides[Fraction(1)] == 5
        assert sides[Fraction(2, 3)] == 9

    def test_three_dimensional_count(self):
        assert shell_construction(3, 2).n == 15

    @pytest.mark.parametrize("d,m", [(2, 2), (2, 5), (3, 3), (4, 2)])
    def test_count_formula(self, d, m):
        assert shell_construction(d, m).n == 2 * m**d - (m - 1) ** d

    def test_convexity_bound(self):
        # 2m^d - (m-1)^d < (m+1)^d: there is always room to be one order bigger.
        for d in (2, 3, 4):
            for m in range(2, 11):
                assert 2 * m**d - (m - 1) ** d < (m + 1) ** d

    def test_ratio_and_hypothesis(self):
        for d in (2, 3):
            for m in range(2, 7):
                t = shell_construction(d, m)
                assert t.min_side / t.max_side == 1 - Fraction(1, m)
                holds, offending = hypothesis_check(t)
                assert not holds
                assert offending == Fraction(m - 1, m)

    @pytest.mark.parametrize("bad", [(1, 2), (2, 1), (2, 0)])
    def test_domain_errors(self, bad):
        with pytest.raises(ValueError):
            shell_construction(*bad)


class TestMergedBlockGrid:
    def test_three_grid_two_block(self):
        t = merged_block_grid(2, 3, 2)
        assert t.n == 6
        sides = Counter(t.sides())
        assert sides[Fraction(2)] == 1
        assert sides[Fraction(1)] == 5

    def test_four_grid_three_block(self):
        assert merged_block_grid(2, 4, 3).n == 8

    def test_degenerate_full_block(self):
        t = merged_block_grid(2, 5, 5)
        assert t.n == 1
        assert t.cubes[0].side == 5

    def test_unit_block_is_plain_grid(self):
        assert merged_block_grid(2, 3, 1) == perfect_grid(2, 3, 1)

    @pytest.mark.parametrize("bad", [(2, 3, 0), (2, 3, 4), (1, 3, 1)])
    def test_domain_errors(self, bad):
        with pytest.raises(ValueError):
            merged_block_grid(*bad)


class TestRefine:
    def test_grid_into_grid_count(self):
        t = refine(perfect_grid(2, 2, 1), 0, perfect_grid(2, 2, 1))
        assert t.n == 7
        assert validate(t).is_valid

    def test_refining_the_merged_block_restores_the_grid(self):
        # Index 0 is the merged 2-block; grafting a 2x2 grid into it undoes
        # the merge exactly.
        t = refine(merged_block_grid(2, 3, 2), 0, perfect_grid(2, 2, 1))
        assert t.n == 9
        assert t == perfect_grid(2, 3, 1)

    def test_refining_a_unit_cell_gives_unequal_sides(self):
        t = refine(merged_block_grid(2, 3, 2), 1, perfect_grid(2, 2, 1))
        assert t.n == 9
        assert validate(t).is_valid
        assert len(set(t.sides())) == 3

    def test_index_out_of_range(self):
        g = perfect_grid(2, 2, 1)
        with pytest.raises(IndexError):
            refine(g, g.n, g)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            refine(perfect_grid(2, 2, 1), 0, perfect_grid(3, 2, 1))

    @pytest.mark.parametrize("index", [0, 3, 6])
    def test_count_arithmetic(self, index):
        host = shell_construction(2, 2)
        inner = perfect_grid(2, 3, 1)
        t = refine(host, index, inner)
        assert t.n == host.n + inner.n - 1
        assert validate(t).is_valid


def test_all_generator_outputs_are_valid(generator_corpus):
    for label, t in generator_corpus:
        assert validate(t).is_valid, label


def test_generator_outputs_are_lexicographically_ordered(generator_corpus):
    for label, t in generator_corpus:
        corners = [c.corner for c in t.cubes]
        assert corners == sorted(corners), label
