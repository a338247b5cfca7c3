"""CSV tables and SVG figures of an automorphism on a grid."""

from __future__ import annotations

import io
from fractions import Fraction
from typing import Callable, Iterable

from .minkowski import Event
from .verify import GridSpec

PANEL = 400
MARGIN = 20


def grid_csv(fmap: Callable[[Event], Event], grid: GridSpec) -> str:
    out = io.StringIO()
    out.write("x,y,x',y'\n")
    for p in grid.events():
        q = fmap(p)
        out.write(f"{p.x},{p.y},{q.x},{q.y}\n")
    return out.getvalue()


def _num(q: Fraction) -> str:
    # presentation only: 12 significant digits
    s = f"{float(q):.12g}"
    return "0" if s == "-0" else s


def _null_lines(grid: GridSpec) -> Iterable[tuple[str, list[Event]]]:
    """Segments of constant u and constant v clipped to the grid square."""
    a, b = grid.t_min, grid.t_max
    ax = grid.axis()
    n = max(grid.n, 2)
    for k in range(n):
        c = 2 * a + k * 2 * (b - a) / (n - 1)
        lo, hi = max(a, c - b), min(b, c - a)
        if lo < hi:
            xs = [lo] + [x for x in ax if lo < x < hi] + [hi]
            yield "u", [Event(x, c - x) for x in xs]
    for k in range(n):
        c = (a - b) + k * 2 * (b - a) / (n - 1)
        lo, hi = max(a, a + c), min(b, b + c)
        if lo < hi:
            xs = [lo] + [x for x in ax if lo < x < hi] + [hi]
            yield "v", [Event(x, x - c) for x in xs]


def _bounds(points: list[Event]) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    if x0 == x1:
        x0, x1 = x0 - 1, x1 + 1
    if y0 == y1:
        y0, y1 = y0 - 1, y1 + 1
    return x0, x1, y0, y1


def _panel(lines: list[tuple[str, list[Event]]], offset: int, title: str) -> list[str]:
    x0, x1, y0, y1 = _bounds([p for _, pts in lines for p in pts])
    scale = Fraction(PANEL - 2 * MARGIN) / max(x1 - x0, y1 - y0)

    def px(p: Event) -> str:
        sx = offset + MARGIN + (p.x - x0) * scale
        sy = PANEL - MARGIN - (p.y - y0) * scale
        return f"{_num(sx)},{_num(sy)}"

    out = [f'<g><text x="{offset + MARGIN}" y="14" font-size="12">{title}</text>']
    for kind, pts in lines:
        colour = "#c0392b" if kind == "u" else "#2c6fbb"
        out.append(f'<polyline fill="none" stroke="{colour}" stroke-width="1" '
                   f'points="{" ".join(px(p) for p in pts)}"/>')
    out.append("</g>")
    return out


def grid_svg(fmap: Callable[[Event], Event], grid: GridSpec) -> str:
    """Light-cone lattice of the grid square (left) and its image (right)."""
    source = list(_null_lines(grid))
    image = [(kind, [fmap(p) for p in pts]) for kind, pts in source]
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{2 * PANEL}" height="{PANEL}" '
        f'viewBox="0 0 {2 * PANEL} {PANEL}">',
        *_panel(source, 0, "null lattice"),
        *_panel(image, PANEL, "image"),
        "</svg>",
    ]
    return "\n".join(parts) + "\n"
