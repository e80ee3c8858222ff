"""Deterministic SVG pictures of lattice curves over a colored grid."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .coloring import TwoColoring
from .invariant import InvariantSpec
from .winding import curve_points, winding_oracle
from .word import Word

DARK = "#9a9a9a"
LIGHT = "#ececec"
GRID = "#c8c8c8"
INK = "#1f3b73"


@dataclass(frozen=True)
class RenderConfig:
    cell_px: int = 24
    pad_cells: int = 1
    show_winding_numbers: bool = True
    coloring: InvariantSpec | None = field(default=None, repr=False)

    def __post_init__(self):
        if self.cell_px < 4:
            raise ValueError("cell_px must be at least 4")
        if self.pad_cells < 0:
            raise ValueError("pad_cells must be nonnegative")


def render_svg(w: Word, cfg: RenderConfig = RenderConfig()) -> str:
    pts = curve_points(w)
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    pad = cfg.pad_cells
    x_lo, x_hi = min(xs) - pad, max(xs) + pad
    y_lo, y_hi = min(ys) - pad, max(ys) + pad
    if x_hi == x_lo:
        x_hi += 1
    if y_hi == y_lo:
        y_hi += 1
    s = cfg.cell_px
    width, height = (x_hi - x_lo) * s, (y_hi - y_lo) * s

    # grid coordinates to picture coordinates; up is +y
    def px(i: int) -> int:
        return (i - x_lo) * s

    def py(j: int) -> int:
        return (y_hi - j) * s

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        "<defs>",
        '<marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" '
        'markerWidth="6" markerHeight="6" orient="auto">',
        f'<path d="M 0 0 L 10 5 L 0 10 z" fill="{INK}"/>',
        "</marker>",
        "</defs>",
    ]

    out.append('<g id="background">')
    for i in range(x_lo, x_hi):
        for j in range(y_lo, y_hi):
            fill = "#ffffff"
            label = None
            if cfg.coloring is not None:
                value = cfg.coloring.coloring(cfg.coloring.phi(i, j))
                if isinstance(cfg.coloring.coloring, TwoColoring):
                    fill = DARK if value.weight > 0 else LIGHT
                else:
                    label = str(value)
            out.append(
                f'<rect x="{px(i)}" y="{py(j + 1)}" width="{s}" height="{s}" '
                f'fill="{fill}" stroke="{GRID}" stroke-width="1"/>'
            )
            if label is not None:
                out.append(
                    f'<text x="{px(i) + 2}" y="{py(j + 1) + s // 3}" '
                    f'font-size="{max(s // 4, 3)}" fill="#666666">{label}</text>'
                )
    out.append("</g>")

    if len(pts) > 1:
        coords = " ".join(f"{px(a)},{py(b)}" for a, b in pts)
        out.append(
            f'<polyline id="curve" points="{coords}" fill="none" stroke="{INK}" '
            f'stroke-width="{max(s // 10, 1)}" marker-end="url(#arrow)"/>'
        )
        closed = pts[0] == pts[-1]
        if cfg.show_winding_numbers and closed:
            out.append('<g id="winding" text-anchor="middle" dominant-baseline="central">')
            for (i, j), c in sorted(winding_oracle(w).items()):
                out.append(
                    f'<text x="{px(i) + s // 2}" y="{py(j) - s // 2}" '
                    f'font-size="{max(s // 2, 4)}" fill="#000000">{c}</text>'
                )
            out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_svg(w: Word, path: str | Path, cfg: RenderConfig = RenderConfig()) -> Path:
    path = Path(path)
    try:
        path.write_text(render_svg(w, cfg), encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot write SVG to {path}: {exc}") from exc
    return path
