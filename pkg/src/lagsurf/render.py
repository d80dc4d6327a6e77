"""Deterministic SVG pictures of front words.

Strands run left to right along horizontal tracks, one column per event.
Left cusps open rightward, right cusps close leftward (quadratic tips), and
at a crossing the descending strand is drawn unbroken while the ascending
strand yields with a visual gap.  All coordinates are emitted with one fixed
decimal, so identical input and options give byte-identical output.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fronts import EventKind, FrontDiagram

L, X, R = EventKind.LEFT_CUSP, EventKind.CROSSING, EventKind.RIGHT_CUSP


@dataclass(frozen=True)
class RenderOptions:
    column_width: float = 48.0
    track_height: float = 28.0
    margin: float = 20.0
    stroke_width: float = 2.0
    crossing_gap: float = 0.18  # fraction of the column yielded by the under-strand
    stroke: str = "#16324f"
    background: str = "#ffffff"


def _fmt(value: float) -> str:
    return f"{value:.1f}"


def render_svg(diagram: FrontDiagram, options: RenderOptions = RenderOptions()) -> str:
    opt = options
    events = diagram.events
    columns = max(len(events), 1)
    tracks = max(diagram.max_strands, 2)
    width = 2 * opt.margin + columns * opt.column_width
    height = 2 * opt.margin + (tracks - 1) * opt.track_height

    def xat(i: float) -> float:
        return opt.margin + i * opt.column_width

    def yat(pos: int) -> float:
        return opt.margin + (pos - 1) * opt.track_height

    def line(x0, y0, x1, y1) -> str:
        return (
            f'<line x1="{_fmt(x0)}" y1="{_fmt(y0)}" '
            f'x2="{_fmt(x1)}" y2="{_fmt(y1)}"/>'
        )

    def tip(x_base: float, x_tip: float, pos: int) -> str:
        y0, y1 = yat(pos), yat(pos + 1)
        mid = (y0 + y1) / 2
        return (
            f'<path d="M {_fmt(x_base)} {_fmt(y0)} '
            f'Q {_fmt(x_tip)} {_fmt(mid)} {_fmt(x_base)} {_fmt(y1)}"/>'
        )

    shapes: list[str] = []
    strands = 0
    for index, event in enumerate(events):
        x0, x1 = xat(index), xat(index + 1)
        p = event.pos
        if event.kind is L:
            for q in range(1, strands + 1):
                shapes.append(line(x0, yat(q), x1, yat(q if q < p else q + 2)))
            shapes.append(tip(x1, x0 + 0.2 * opt.column_width, p))
            strands += 2
        elif event.kind is R:
            for q in range(1, strands + 1):
                if q in (p, p + 1):
                    continue
                shapes.append(line(x0, yat(q), x1, yat(q if q < p else q - 2)))
            shapes.append(tip(x0, x1 - 0.2 * opt.column_width, p))
            strands -= 2
        else:
            for q in range(1, strands + 1):
                if q in (p, p + 1):
                    continue
                shapes.append(line(x0, yat(q), x1, yat(q)))
            # ascending strand (drawn first) yields a gap around the centre
            half = 0.5 * opt.crossing_gap
            ya, yb = yat(p + 1), yat(p)
            shapes.append(line(x0, ya, x0 + (0.5 - half) * opt.column_width,
                               ya + (0.5 - half) * (yb - ya)))
            shapes.append(line(x0 + (0.5 + half) * opt.column_width,
                               ya + (0.5 + half) * (yb - ya), x1, yb))
            shapes.append(line(x0, yb, x1, ya))

    body = "\n".join(f"  {shape}" for shape in shapes)
    title = diagram.notation() or "(empty)"
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">\n'
        f"  <title>{title}</title>\n"
        f'  <rect width="100%" height="100%" fill="{opt.background}"/>\n'
        f'  <g fill="none" stroke="{opt.stroke}" '
        f'stroke-width="{_fmt(opt.stroke_width)}" stroke-linecap="round">\n'
        f"{body}\n"
        f"  </g>\n"
        f"</svg>\n"
    )
