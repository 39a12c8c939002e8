"""Sampled-curve output: CSV tables and static SVG figures.

Both writers are deterministic: identical inputs produce byte-identical
files (fixed column order, fixed float formatting, no timestamps).
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

from .bspline import Polyline
from .curves import CurveBand, ReducedCurves
from .errors import SampleMismatch, T2SplineError

# 17 significant digits: locale-independent, round-trips doubles exactly.
_NUM_FORMAT = "{:.16e}"


def _normalize_series(series) -> list[tuple[str, Polyline]]:
    if isinstance(series, CurveBand):
        return list(series.items())
    if isinstance(series, Polyline):
        return [("curve", series)]
    pairs = list(series)
    if not pairs:
        raise T2SplineError("no series to write")
    for pair in pairs:
        if not (isinstance(pair, tuple) and len(pair) == 2 and isinstance(pair[1], Polyline)):
            raise T2SplineError("series must be (name, Polyline) pairs, a CurveBand, or a Polyline")
    return pairs


def write_csv(series, path_or_file) -> None:
    """Write sampled curves as CSV: t column, then x/y per named series.

    ``series`` may be a :class:`CurveBand`, a single :class:`Polyline`, or a
    sequence of ``(name, Polyline)`` pairs.  All series must be sampled at
    identical parameters.
    """
    pairs = _normalize_series(series)
    ref = pairs[0][1].params
    for name, line in pairs[1:]:
        if line.params.shape != ref.shape or np.any(line.params != ref):
            raise SampleMismatch(f"series {name!r} sampled at different parameters")

    header = ["t"]
    for name, _ in pairs:
        header += [f"{name}_x", f"{name}_y"]

    def emit(f):
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        for row_idx in range(ref.size):
            row = [_NUM_FORMAT.format(ref[row_idx])]
            for _, line in pairs:
                row.append(_NUM_FORMAT.format(line.points[row_idx, 0]))
                row.append(_NUM_FORMAT.format(line.points[row_idx, 1]))
            writer.writerow(row)

    if hasattr(path_or_file, "write"):
        emit(path_or_file)
    else:
        with open(path_or_file, "w", encoding="utf-8", newline="") as f:
            emit(f)


# ---------------------------------------------------------------------------
# SVG rendering

CANVAS_W = 800
CANVAS_H = 600
MARGIN_LEFT = 64
MARGIN_RIGHT = 168   # leaves room for the legend
MARGIN_TOP = 40
MARGIN_BOTTOM = 48
PAD_FRACTION = 0.05

#: (stroke colour, stroke width, draw point markers) per series name.
SERIES_STYLE = {
    "ll": ("#c6dbef", 1.0, False),
    "l": ("#9ecae1", 1.0, False),
    "rl": ("#6baed6", 1.0, False),
    "crisp": ("#d62728", 1.8, True),
    "lr": ("#6baed6", 1.0, False),
    "r": ("#9ecae1", 1.0, False),
    "rr": ("#c6dbef", 1.0, False),
    "tr_left": ("#2ca02c", 1.2, False),
    "tr_right": ("#2ca02c", 1.2, False),
    "defuzzified": ("#1f77b4", 1.8, True),
    "controls": ("#000000", 1.0, True),
}


@dataclass
class Scene:
    """What to draw: any subset of band, type-reduced pair, solution curves
    and the crisp control polygon."""

    band: CurveBand | None = None
    reduced: ReducedCurves | None = None
    defuzzified: Polyline | None = None
    crisp: Polyline | None = None
    controls: np.ndarray | None = None
    title: str = ""


def _scene_series(scene: Scene) -> list[tuple[str, Polyline]]:
    pairs: list[tuple[str, Polyline]] = []
    seen = set()

    def add(name, line):
        if name not in seen:
            seen.add(name)
            pairs.append((name, line))

    if scene.band is not None:
        for name, line in scene.band.items():
            add(name, line)
    if scene.reduced is not None:
        add("tr_left", scene.reduced.left)
        add("crisp", scene.reduced.crisp)
        add("tr_right", scene.reduced.right)
    if scene.crisp is not None:
        add("crisp", scene.crisp)
    if scene.defuzzified is not None:
        add("defuzzified", scene.defuzzified)
    return pairs


def _data_bounds(scene: Scene) -> tuple[float, float, float, float]:
    xs, ys = [], []
    for _, line in _scene_series(scene):
        xs.append(line.points[:, 0])
        ys.append(line.points[:, 1])
    if scene.controls is not None and len(scene.controls):
        pts = np.asarray(scene.controls, dtype=float)
        xs.append(pts[:, 0])
        ys.append(pts[:, 1])
    if not xs:
        return (0.0, 1.0, 0.0, 1.0)
    x = np.concatenate(xs)
    y = np.concatenate(ys)
    return (float(x.min()), float(x.max()), float(y.min()), float(y.max()))


def svg_document(scene: Scene) -> str:
    """Render a scene to an SVG 1.1 string (fixed canvas, 5% data padding)."""
    xmin, xmax, ymin, ymax = _data_bounds(scene)
    xspan = (xmax - xmin) or 1.0
    yspan = (ymax - ymin) or 1.0
    xmin -= xspan * PAD_FRACTION
    xmax += xspan * PAD_FRACTION
    ymin -= yspan * PAD_FRACTION
    ymax += yspan * PAD_FRACTION

    plot_x0, plot_x1 = MARGIN_LEFT, CANVAS_W - MARGIN_RIGHT
    plot_y0, plot_y1 = MARGIN_TOP, CANVAS_H - MARGIN_BOTTOM
    sx = (plot_x1 - plot_x0) / (xmax - xmin)
    sy = (plot_y1 - plot_y0) / (ymax - ymin)

    def to_px(p):
        return (plot_x0 + (p[0] - xmin) * sx, plot_y1 - (p[1] - ymin) * sy)

    def fmt(v):
        return f"{v:.3f}"

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{CANVAS_W}" height="{CANVAS_H}" viewBox="0 0 {CANVAS_W} {CANVAS_H}">',
        f'<rect x="0" y="0" width="{CANVAS_W}" height="{CANVAS_H}" fill="#ffffff"/>',
    ]
    if scene.title:
        out.append(
            f'<text x="{(plot_x0 + plot_x1) / 2:.1f}" y="24" text-anchor="middle" '
            f'font-family="sans-serif" font-size="15">{_escape(scene.title)}</text>'
        )

    # axes with min/max tick labels
    axis = 'stroke="#333333" stroke-width="1"'
    out.append(f'<line x1="{plot_x0}" y1="{plot_y1}" x2="{plot_x1}" y2="{plot_y1}" {axis}/>')
    out.append(f'<line x1="{plot_x0}" y1="{plot_y0}" x2="{plot_x0}" y2="{plot_y1}" {axis}/>')
    label = 'font-family="sans-serif" font-size="11" fill="#333333"'
    out.append(
        f'<text x="{plot_x0}" y="{plot_y1 + 16}" text-anchor="middle" {label}>{xmin:.4g}</text>'
    )
    out.append(
        f'<text x="{plot_x1}" y="{plot_y1 + 16}" text-anchor="middle" {label}>{xmax:.4g}</text>'
    )
    out.append(
        f'<text x="{plot_x0 - 6}" y="{plot_y1 + 4}" text-anchor="end" {label}>{ymin:.4g}</text>'
    )
    out.append(
        f'<text x="{plot_x0 - 6}" y="{plot_y0 + 4}" text-anchor="end" {label}>{ymax:.4g}</text>'
    )

    legend_entries = []
    for name, line in _scene_series(scene):
        colour, width, markers = SERIES_STYLE[name]
        pts = " ".join(f"{fmt(px)},{fmt(py)}" for px, py in (to_px(p) for p in line.points))
        out.append(
            f'<polyline class="series-{name}" fill="none" stroke="{colour}" '
            f'stroke-width="{width}" points="{pts}"/>'
        )
        if markers:
            circles = "".join(
                f'<circle cx="{fmt(px)}" cy="{fmt(py)}" r="2.5"/>'
                for px, py in (to_px(p) for p in line.points)
            )
            out.append(f'<g class="markers-{name}" fill="{colour}">{circles}</g>')
        legend_entries.append((name, colour))

    if scene.controls is not None and len(scene.controls):
        colour = SERIES_STYLE["controls"][0]
        circles = "".join(
            f'<circle cx="{fmt(px)}" cy="{fmt(py)}" r="4"/>'
            for px, py in (to_px(p) for p in np.asarray(scene.controls, dtype=float))
        )
        out.append(f'<g class="markers-controls" fill="{colour}">{circles}</g>')
        legend_entries.append(("controls", colour))

    lx = plot_x1 + 14
    for row, (name, colour) in enumerate(legend_entries):
        ly = plot_y0 + 10 + row * 18
        out.append(
            f'<line x1="{lx}" y1="{ly}" x2="{lx + 22}" y2="{ly}" stroke="{colour}" stroke-width="2"/>'
        )
        out.append(
            f'<text x="{lx + 28}" y="{ly + 4}" {label}>{_escape(name)}</text>'
        )

    out.append("</svg>")
    return "\n".join(out) + "\n"


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def render_svg(scene: Scene, path_or_file) -> None:
    """Write the scene as an SVG file."""
    doc = svg_document(scene)
    if hasattr(path_or_file, "write"):
        path_or_file.write(doc)
    else:
        with open(path_or_file, "w", encoding="utf-8", newline="") as f:
            f.write(doc)
