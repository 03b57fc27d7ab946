"""SVG rendering of planar tessellations.

The output contains exactly one <rect> per cube, drawn in the usual
mathematical orientation (origin bottom-left) inside a viewBox spanning
[0, z] on both axes.  Coordinates are decimal approximations with 12
significant digits; they exist for display only and are never fed back
into any computation.
"""

from __future__ import annotations

from fractions import Fraction

from .core import Tessellation

CANVAS_PX = 640


class UnsupportedDimensionError(ValueError):
    """Rendering is implemented for d = 2 only."""


def _dec(x: Fraction) -> str:
    return format(float(x), ".12g")


def _shades(sides: tuple[Fraction, ...]) -> dict[Fraction, str]:
    """Deterministic grayscale per distinct side, darkest for the smallest."""
    distinct = sorted(set(sides))
    lo, hi = 0x60, 0xD8
    if len(distinct) == 1:
        return {distinct[0]: f"#{0xC8:02x}{0xC8:02x}{0xC8:02x}"}
    out = {}
    for rank, side in enumerate(distinct):
        v = lo + (hi - lo) * rank // (len(distinct) - 1)
        out[side] = f"#{v:02x}{v:02x}{v:02x}"
    return out


def render_svg(t: Tessellation) -> str:
    """Well-formed SVG 1.1 text with one shaded rectangle per cube."""
    if t.d != 2:
        raise UnsupportedDimensionError(f"can only render d=2, got d={t.d}")
    fill = _shades(t.sides())
    z = _dec(t.z)
    stroke_width = _dec(t.z / 256)
    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{CANVAS_PX}" height="{CANVAS_PX}" viewBox="0 0 {z} {z}">',
        f'  <g stroke="#202020" stroke-width="{stroke_width}">',
    ]
    for cube in t.cubes:
        x = cube.corner[0]
        y_top = t.z - (cube.corner[1] + cube.side)  # flip: SVG y runs downward
        lines.append(
            f'    <rect x="{_dec(x)}" y="{_dec(y_top)}" '
            f'width="{_dec(cube.side)}" height="{_dec(cube.side)}" '
            f'fill="{fill[cube.side]}"/>'
        )
    lines.append("  </g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
