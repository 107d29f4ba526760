"""Text and SVG pictures of realized stairs.

Both renderers draw the bounding rectangle of the boxes, top row first, and
label every box with its irrep in decimal.
"""

from __future__ import annotations

from .chambers import Chamber
from .stairs import RealizedStair, StepPath

UNIT = 40


def _realized(value) -> RealizedStair:
    if isinstance(value, Chamber):
        return value.chamber_stair
    if isinstance(value, StepPath):
        return value.realize()
    if isinstance(value, RealizedStair):
        return value
    raise TypeError(f"cannot render {type(value).__name__}")


def _grid(realized: RealizedStair):
    k = realized.stair.k
    labels = {m: str(m.irrep(k)) for m in realized.boxes}
    left = min(m.a for m in labels)
    top = max(m.b for m in labels)
    width = max(m.a for m in labels) - left + 1
    height = top - min(m.b for m in labels) + 1
    cells = {(m.a - left, top - m.b): label for m, label in labels.items()}
    return cells, width, height


def render_ascii(value) -> str:
    """One ``[r]`` cell per box; labels are right-aligned to a common width."""
    cells, width, height = _grid(_realized(value))
    pad = max(len(label) for label in cells.values())
    blank = " " * (pad + 2)
    rows = []
    for row in range(height):
        line = "".join(
            f"[{cells[col, row]:>{pad}}]" if (col, row) in cells else blank for col in range(width)
        )
        rows.append(line.rstrip())
    return "\n".join(rows) + "\n"


def render_svg(value) -> str:
    realized = _realized(value)
    cells, width, height = _grid(realized)
    # Boxes are emitted in path order so the output is byte-stable.
    order = [(m.a, m.b) for m in realized.boxes]
    left = min(a for a, _ in order)
    top = max(b for _, b in order)
    w, h = width * UNIT, height * UNIT
    out = [
        # One unit of margin keeps the outer strokes inside the viewBox.
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="-1 -1 {w + 2} {h + 2}" '
        f'width="{w + 2}" height="{h + 2}">',
        '<g fill="white" stroke="black" stroke-width="2">',
    ]
    for a, b in order:
        out.append(f'<rect x="{(a - left) * UNIT}" y="{(top - b) * UNIT}" width="{UNIT}" height="{UNIT}"/>')
    out.append("</g>")
    out.append(
        f'<g font-family="monospace" font-size="{UNIT // 2}" text-anchor="middle" dominant-baseline="central">'
    )
    for a, b in order:
        col, row = a - left, top - b
        x, y = col * UNIT + UNIT // 2, row * UNIT + UNIT // 2
        out.append(f'<text x="{x}" y="{y}">{cells[col, row]}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
