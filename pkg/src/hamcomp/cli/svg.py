"""Circular drawings of Hamilton cycles as SVG."""
from __future__ import annotations

import math

from ..verify import HamCycle

VALUE_COLORS = ["#e41a1c", "#ff7f00", "#ffdd33", "#4daf4a", "#377eb8", "#984ea3", "#a65628", "#f781bf",
                "#999999", "#66c2a5", "#fc8d62", "#8da0cb"]
GRAPH_EDGE_LIMIT = 200_000


def _angle(i: int, N: int) -> float:
    # vertex 0 at the top, clockwise
    return 2 * math.pi * i / N - math.pi / 2


def _pt(r: float, a: float, cx: float, cy: float):
    return round(cx + r * math.cos(a), 3), round(cy + r * math.sin(a), 3)


def _color(c: HamCycle, value: int) -> str:
    if c.graph.family in ("hypercube", "johnson", "middle_levels"):
        return "#000000" if value else "#ffffff"
    return VALUE_COLORS[(value - 1) % len(VALUE_COLORS)] if value >= 1 else VALUE_COLORS[value % len(VALUE_COLORS)]


def vertex_positions(N: int, radius: float = 200.0, center: float = 250.0) -> list:
    return [_pt(radius, _angle(i, N), center, center) for i in range(N)]


def render_rings(c: HamCycle, size: int = 500) -> str:
    """Each coordinate is one concentric ring; ring segment i shows the i-th word's entry."""
    N = len(c)
    L = c.graph.word_length
    cx = cy = size / 2
    outer = size * 0.46
    inner = size * 0.12
    width = (outer - inner) / max(L, 1)
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
             f'<rect width="{size}" height="{size}" fill="#ffffff"/>']
    words = c.words.tolist()
    for j in range(L):
        r0 = outer - (j + 1) * width
        r1 = r0 + width
        for i in range(N):
            a0, a1 = _angle(i, N), _angle(i + 1, N)
            p = [_pt(r1, a0, cx, cy), _pt(r1, a1, cx, cy), _pt(r0, a1, cx, cy), _pt(r0, a0, cx, cy)]
            d = (f"M{p[0][0]},{p[0][1]} A{r1:.3f},{r1:.3f} 0 0 1 {p[1][0]},{p[1][1]} "
                 f"L{p[2][0]},{p[2][1]} A{r0:.3f},{r0:.3f} 0 0 0 {p[3][0]},{p[3][1]} Z")
            parts.append(f'<path d="{d}" fill="{_color(c, words[i][j])}" stroke="#888888" stroke-width="0.2"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_graph(c: HamCycle, size: int = 500) -> str:
    """Vertices in cycle order on a circle; all graph edges as straight chords."""
    N = len(c)
    pos = vertex_positions(N, size * 0.42, size / 2)
    idx = {w: i for i, w in enumerate(map(tuple, c.words.tolist()))}
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
             f'<rect width="{size}" height="{size}" fill="#ffffff"/>']
    edges = 0
    for i, w in enumerate(map(tuple, c.words.tolist())):
        for u in c.graph.neighbors(w):
            j = idx[tuple(u)]
            if j <= i:
                continue
            edges += 1
            if edges > GRAPH_EDGE_LIMIT:
                raise ValueError(f"graph has more than {GRAPH_EDGE_LIMIT} edges; use ring mode")
            on_cycle = j - i in (1, N - 1)
            colour, width = ("#cc0000", 1.2) if on_cycle else ("#555555", 0.4)
            (x1, y1), (x2, y2) = pos[i], pos[j]
            parts.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{colour}" stroke-width="{width}"/>')
    for x, y in pos:
        parts.append(f'<circle cx="{x}" cy="{y}" r="2" fill="#000000"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render(c: HamCycle, mode: str = "rings", size: int = 500) -> str:
    if mode == "rings":
        return render_rings(c, size)
    if mode == "graph":
        return render_graph(c, size)
    raise ValueError(f"unknown drawing mode {mode!r}")
