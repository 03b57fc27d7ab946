"""Text format: canonical serialization and exact round trips."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubetess import (
    BadHeaderError,
    BadRationalError,
    Cube,
    Tessellation,
    TessSyntaxError,
    parse,
    serialize,
    shell_construction,
)
from cubetess.tessfile import format_rational, parse_rational


def test_single_cube_file():
    text = "CUBETESS v1\nd 2\ntarget 2\ncubes 1\n0 0 2\n"
    t = parse(text)
    assert t.d == 2
    assert t.z == 2
    assert t.n == 1
    assert t.cubes[0] == Cube((0, 0), 2)
    assert serialize(t) == text


def test_round_trip_preserves_order(full_corpus):
    for label, t in full_corpus:
        assert parse(serialize(t)) == t, label


def test_serialize_canonicalizes_rationals():
    t = Tessellation(2, Fraction(4, 2), (Cube((0, 0), Fraction(2, 4)),))
    text = serialize(t)
    assert "target 2" in text
    assert text.splitlines()[-1] == "0 0 1/2"


def test_signed_denominator_survives_round_trip():
    text = "CUBETESS v1\nd 2\ntarget 2\ncubes 1\n0 0 -3/-6\n"
    t = parse(text)
    assert t.cubes[0].side == Fraction(1, 2)
    assert serialize(t).splitlines()[-1] == "0 0 1/2"


def test_grid_serialization_is_lexicographic():
    from cubetess import perfect_grid

    lines = serialize(perfect_grid(2, 2, 1)).splitlines()
    assert lines[4:] == ["0 0 1", "0 1 1", "1 0 1", "1 1 1"]


class TestParseErrors:
    def test_bad_header(self):
        with pytest.raises(BadHeaderError):
            parse("CUBETESS v2\nd 2\ntarget 1\ncubes 1\n0 0 1\n")
        with pytest.raises(BadHeaderError):
            parse("")

    def test_zero_denominator(self):
        with pytest.raises(BadRationalError):
            parse("CUBETESS v1\nd 2\ntarget 1\ncubes 1\n0 0 1/0\n")

    def test_bad_token(self):
        with pytest.raises(TessSyntaxError):
            parse("CUBETESS v1\nd 2\ntarget 1\ncubes 1\n0 0 abc\n")

    def test_wrong_value_count(self):
        with pytest.raises(TessSyntaxError):
            parse("CUBETESS v1\nd 2\ntarget 1\ncubes 1\n0 0 0 1\n")

    def test_cube_count_mismatch(self):
        with pytest.raises(TessSyntaxError):
            parse("CUBETESS v1\nd 2\ntarget 2\ncubes 2\n0 0 1\n")

    def test_missing_sections(self):
        with pytest.raises(TessSyntaxError):
            parse("CUBETESS v1\nd 2\n")

    def test_non_integer_dimension(self):
        with pytest.raises(TessSyntaxError):
            parse("CUBETESS v1\nd two\ntarget 1\ncubes 1\n0 0 1\n")

    def test_dimension_below_two(self):
        with pytest.raises(TessSyntaxError):
            parse("CUBETESS v1\nd 1\ntarget 1\ncubes 1\n0 1\n")

    def test_nonpositive_target(self):
        with pytest.raises(TessSyntaxError):
            parse("CUBETESS v1\nd 2\ntarget 0\ncubes 1\n0 0 1\n")

    def test_nonpositive_side(self):
        with pytest.raises(TessSyntaxError):
            parse("CUBETESS v1\nd 2\ntarget 1\ncubes 1\n0 0 -1\n")

    def test_zero_cubes(self):
        with pytest.raises(TessSyntaxError):
            parse("CUBETESS v1\nd 2\ntarget 1\ncubes 0\n")


def test_parse_tolerates_trailing_blank_lines():
    t = parse("CUBETESS v1\nd 2\ntarget 1\ncubes 1\n0 0 1\n\n\n")
    assert t.n == 1


def test_format_rational():
    assert format_rational(Fraction(3)) == "3"
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    assert parse_rational("7/14") == Fraction(1, 2)


coords = st.fractions(min_value=0, max_value=4, max_denominator=12)
sides = st.fractions(min_value=Fraction(1, 12), max_value=2, max_denominator=12)


@st.composite
def structural_tessellations(draw):
    d = draw(st.integers(min_value=2, max_value=3))
    n = draw(st.integers(min_value=1, max_value=6))
    cubes = tuple(
        Cube(tuple(draw(coords) for _ in range(d)), draw(sides)) for _ in range(n)
    )
    z = draw(sides) + 4
    return Tessellation(d, z, cubes)


@given(structural_tessellations())
def test_round_trip_on_arbitrary_structures(t):
    assert parse(serialize(t)) == t
