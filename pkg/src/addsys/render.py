"""Coverage strips: which integers of a window lie in ``A_0 + ... + A_j``.

Each covered integer is keyed by the index of its first nonzero term, so the
strips show how each new level fills in the gaps of the previous ones.  Text
output uses ``0-9a-z`` for that index, ``*`` for 0 itself (no nonzero term)
and ``·`` for gaps.  SVG output is plain string formatting, so identical
inputs give identical bytes.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from html import escape

from .canonical import LevelSpec, expand, materialize_prefix
from .sumsets import DEFAULT_BUDGET

GAP = None
ORIGIN = -1

GLYPHS = string.digits + string.ascii_lowercase
GAP_GLYPH = "·"
ORIGIN_GLYPH = "*"

PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)
ORIGIN_COLOR = "#000000"
GAP_COLOR = "#ffffff"


@dataclass(frozen=True)
class CoverageStrip:
    """Cells for ``lo..hi`` at one cumulative depth.

    A cell is the first nonzero term index, :data:`ORIGIN` for 0, or
    :data:`GAP` when the integer is outside ``A_0 + ... + A_depth``.
    """

    depth: int
    lo: int
    hi: int
    cells: tuple[int | None, ...]

    def covered(self, n: int) -> bool:
        return self.cells[n - self.lo] is not GAP

    def text(self) -> str:
        out = []
        for c in self.cells:
            if c is GAP:
                out.append(GAP_GLYPH)
            elif c == ORIGIN:
                out.append(ORIGIN_GLYPH)
            else:
                out.append(GLYPHS[c])
        return "".join(out)


def coverage_strips(
    spec: LevelSpec, depth: int, lo: int, hi: int, budget: int = DEFAULT_BUDGET
) -> list[CoverageStrip]:
    """One strip per cumulative depth ``0..depth`` over ``[lo, hi]``."""
    if lo > hi:
        raise ValueError(f"empty window [{lo}, {hi}]")
    if depth >= len(GLYPHS):
        raise ValueError(f"depth must be < {len(GLYPHS)}")
    materialize_prefix(spec, depth, budget)
    strips = []
    for j in range(depth + 1):
        cells = []
        for n in range(lo, hi + 1):
            e = expand(spec, n, j + 1)
            if not e.zeroed:
                cells.append(GAP)
            else:
                idx = e.nonzero_index()
                cells.append(ORIGIN if idx is None else idx)
        strips.append(CoverageStrip(j, lo, hi, tuple(cells)))
    return strips


def render_text(strips: list[CoverageStrip]) -> str:
    lo, hi = strips[0].lo, strips[0].hi
    lines = [f"window [{lo}, {hi}]  {GAP_GLYPH} gap  {ORIGIN_GLYPH} zero  0-9a-z first nonzero level"]
    for s in strips:
        lines.append(f"A0..A{s.depth:<3} {s.text()}")
    return "\n".join(lines) + "\n"


CELL = 14
ROW = 22
LEFT = 90
TOP = 30


def _fill(cell: int | None) -> str:
    if cell is GAP:
        return GAP_COLOR
    if cell == ORIGIN:
        return ORIGIN_COLOR
    return PALETTE[cell % len(PALETTE)]


def render_svg(strips: list[CoverageStrip], title: str = "") -> str:
    lo, hi = strips[0].lo, strips[0].hi
    ncells = hi - lo + 1
    width = LEFT + ncells * CELL + 20
    height = TOP + len(strips) * ROW + 30
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>\n',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="monospace" font-size="11">\n',
        f'<rect width="{width}" height="{height}" fill="#ffffff"/>\n',
    ]
    if title:
        parts.append(f'<text x="{LEFT}" y="18">{escape(title)}</text>\n')
    for row, s in enumerate(strips):
        y = TOP + row * ROW
        parts.append(f'<text x="8" y="{y + CELL - 3}">A0..A{s.depth}</text>\n')
        for col, c in enumerate(s.cells):
            x = LEFT + col * CELL
            stroke = ' stroke="#bbbbbb"' if c is GAP else ""
            parts.append(
                f'<rect x="{x}" y="{y}" width="{CELL - 2}" height="{CELL}" fill="{_fill(c)}"{stroke}>'
                f"<title>{lo + col}</title></rect>\n"
            )
    axis_y = TOP + len(strips) * ROW + 12
    for col in range(ncells):
        n = lo + col
        if n == lo or n == hi or n % 5 == 0:
            parts.append(f'<text x="{LEFT + col * CELL}" y="{axis_y}">{n}</text>\n')
    parts.append("</svg>\n")
    return "".join(parts)
