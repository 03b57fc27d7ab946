"""Plain-text tessellation files: bit-exact, human-diffable serialization.

Format (one record per line, whitespace-separated tokens)::

    CUBETESS v1
    d <dimension>
    target <rational>
    cubes <count>
    <x_1> ... <x_d> <side>          (one line per cube, in stored order)

Rationals are written canonically: reduced, positive denominator, and a
bare integer ``k`` instead of ``k/1``.  Parsing accepts signed
numerators and denominators, so ``-3/-6`` reads back as ``1/2``.
parse(serialize(t)) reproduces t exactly, including cube order.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .core import Cube, Tessellation

MAGIC = "CUBETESS v1"

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/[+-]?\d+)?$")


class TessFileError(ValueError):
    """Base class for tessellation-file problems."""


class BadHeaderError(TessFileError):
    pass


class BadRationalError(TessFileError):
    pass


class TessSyntaxError(TessFileError):
    pass


def format_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(token: str) -> Fraction:
    if not _RATIONAL_RE.match(token):
        raise TessSyntaxError(f"bad rational token {token!r}")
    num, slash, den = token.partition("/")
    if slash:
        if int(den) == 0:
            raise BadRationalError(f"zero denominator in {token!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(num))


def serialize(t: Tessellation) -> str:
    lines = [MAGIC, f"d {t.d}", f"target {format_rational(t.z)}", f"cubes {t.n}"]
    for cube in t.cubes:
        fields = [format_rational(x) for x in cube.corner]
        fields.append(format_rational(cube.side))
        lines.append(" ".join(fields))
    return "\n".join(lines) + "\n"


def _int_field(line: str, keyword: str) -> int:
    tokens = line.split()
    if len(tokens) != 2 or tokens[0] != keyword:
        raise TessSyntaxError(f"expected '{keyword} <integer>', got {line!r}")
    try:
        return int(tokens[1])
    except ValueError:
        raise TessSyntaxError(f"expected '{keyword} <integer>', got {line!r}") from None


def parse(text: str) -> Tessellation:
    """Parse a tessellation file exactly.

    Only structural invariants are enforced here (dimensions, positive
    sides, matching counts); whether the cubes actually tile the target
    is validate's job.
    """
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines or lines[0].strip() != MAGIC:
        found = lines[0].strip() if lines else "<empty>"
        raise BadHeaderError(f"expected header {MAGIC!r}, got {found!r}")
    if len(lines) < 4:
        raise TessSyntaxError("file ends before the cube lines")
    d = _int_field(lines[1], "d")
    if d < 2:
        raise TessSyntaxError(f"dimension must be >= 2, got {d}")
    target_tokens = lines[2].split()
    if len(target_tokens) != 2 or target_tokens[0] != "target":
        raise TessSyntaxError(f"expected 'target <rational>', got {lines[2]!r}")
    z = parse_rational(target_tokens[1])
    if z <= 0:
        raise TessSyntaxError(f"target side must be positive, got {z}")
    n = _int_field(lines[3], "cubes")
    if n < 1:
        raise TessSyntaxError(f"cube count must be >= 1, got {n}")
    cube_lines = lines[4:]
    if len(cube_lines) != n:
        raise TessSyntaxError(f"expected {n} cube lines, found {len(cube_lines)}")
    cubes = []
    for line_no, line in enumerate(cube_lines, start=5):
        tokens = line.split()
        if len(tokens) != d + 1:
            raise TessSyntaxError(
                f"line {line_no}: expected {d + 1} values, got {len(tokens)}"
            )
        values = [parse_rational(tok) for tok in tokens]
        if values[-1] <= 0:
            raise TessSyntaxError(f"line {line_no}: side must be positive")
        cubes.append(Cube(tuple(values[:-1]), values[-1]))
    return Tessellation(d, z, tuple(cubes))
