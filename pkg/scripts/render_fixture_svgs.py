#!/usr/bin/env python3
"""Regenerate the pre-rendered SVG fixtures used by the classifier tests.

Each fixture mirrors the mark structure a fitted chart template produces in
a browser (same mark elements, counts and attribute channels, plus realistic
axis groups), so the classifier's closed loop can run without one. Output is
deterministic.
"""

from __future__ import annotations

import math
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from importlib import resources

from vizsmith.datasets import Dataset, load_dataset, select_attributes
from vizsmith.templates import VizType

OUT_DIR = pathlib.Path(__file__).resolve().parents[1] / "tests" / "fixtures" / "svg"

WIDTH, HEIGHT = 560, 340
MARGIN = 50


def _num(row: dict, attr: str) -> float:
    try:
        return float(row[attr])
    except ValueError:
        return 0.0


def _axis_group(cls: str, transform: str | None, ticks: int, horizontal: bool) -> str:
    parts = [f'<g class="{cls}"' + (f' transform="{transform}"' if transform else "") + ">"]
    length = WIDTH if horizontal else HEIGHT
    parts.append(f'<path class="domain" d="M0,0L{length if horizontal else 0},{0 if horizontal else length}"/>')
    for t in range(ticks):
        offset = round(t * length / max(ticks - 1, 1), 2)
        translate = f"translate({offset},0)" if horizontal else f"translate(0,{offset})"
        tick_line = '<line y2="6"/>' if horizontal else '<line x2="-6"/>'
        parts.append(f'<g class="tick" transform="{translate}">{tick_line}<text>{t}</text></g>')
    parts.append("</g>")
    return "".join(parts)


def _document(body: list[str], axes: bool = True) -> str:
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH + 2 * MARGIN}" '
        f'height="{HEIGHT + 2 * MARGIN}">',
        f'<g transform="translate({MARGIN},{MARGIN})">',
    ]
    if axes:
        parts.append(_axis_group("x-axis", f"translate(0,{HEIGHT})", 6, True))
        parts.append(_axis_group("y-axis", None, 6, False))
    parts.extend(body)
    parts.append("</g></svg>")
    return "\n".join(parts) + "\n"


def render_scatterplot(dataset: Dataset) -> str:
    binding = select_attributes(dataset, VizType.SCATTERPLOT)
    xa, ya = binding.slots["X_ATTR"], binding.slots["Y_ATTR"]
    xmax = max(_num(r, xa) for r in dataset.rows) or 1.0
    ymax = max(_num(r, ya) for r in dataset.rows) or 1.0
    marks = ["<g>"]
    for row in dataset.rows:
        cx = round(_num(row, xa) / xmax * WIDTH, 2)
        cy = round(HEIGHT - _num(row, ya) / ymax * HEIGHT, 2)
        marks.append(f'<circle class="mark" cx="{cx}" cy="{cy}" r="4" fill="#69b3a2"/>')
    marks.append("</g>")
    return _document(marks)


def _rollup_means(dataset: Dataset, cat: str, val: str) -> list[tuple[str, float]]:
    order: list[str] = []
    sums: dict[str, list[float]] = {}
    for row in dataset.rows:
        key = row[cat]
        if key not in sums:
            sums[key] = []
            order.append(key)
        sums[key].append(_num(row, val))
    return [(key, sum(sums[key]) / len(sums[key])) for key in order]


def render_bar(dataset: Dataset) -> str:
    binding = select_attributes(dataset, VizType.BAR)
    cat, val = binding.slots["CAT_ATTR"], binding.slots["VAL_ATTR"]
    bars = _rollup_means(dataset, cat, val)
    vmax = max(v for _, v in bars) or 1.0
    band = WIDTH / len(bars)
    marks = ["<g>"]
    for index, (_, value) in enumerate(bars):
        h = round(value / vmax * HEIGHT, 2)
        x = round(index * band + band * 0.1, 2)
        marks.append(
            f'<rect class="mark" x="{x}" y="{round(HEIGHT - h, 2)}" '
            f'width="{round(band * 0.8, 2)}" height="{h}" fill="#69b3a2"/>'
        )
    marks.append("</g>")
    return _document(marks)


def _sorted_points(dataset: Dataset, xa: str, ya: str) -> list[tuple[float, float]]:
    rows = sorted(dataset.rows, key=lambda r: _num(r, xa))
    xs = [_num(r, xa) for r in rows]
    ys = [_num(r, ya) for r in rows]
    xmin, xmax = min(xs), max(xs)
    ymax = max(ys) or 1.0
    span = (xmax - xmin) or 1.0
    return [
        (round((x - xmin) / span * WIDTH, 2), round(HEIGHT - y / ymax * HEIGHT, 2))
        for x, y in zip(xs, ys)
    ]


def render_line(dataset: Dataset) -> str:
    binding = select_attributes(dataset, VizType.LINE)
    points = _sorted_points(dataset, binding.slots["X_ATTR"], binding.slots["Y_ATTR"])
    d = "M" + "L".join(f"{x},{y}" for x, y in points)
    mark = f'<path class="mark" fill="none" stroke="#69b3a2" stroke-width="1.5" d="{d}"/>'
    return _document([mark])


def render_area(dataset: Dataset) -> str:
    binding = select_attributes(dataset, VizType.AREA)
    points = _sorted_points(dataset, binding.slots["X_ATTR"], binding.slots["Y_ATTR"])
    top = "L".join(f"{x},{y}" for x, y in points)
    d = f"M{points[0][0]},{HEIGHT}L{top}L{points[-1][0]},{HEIGHT}Z"
    mark = f'<path class="mark" fill="#69b3a2" stroke="#69b3a2" d="{d}"/>'
    return _document([mark])


def render_pie(dataset: Dataset) -> str:
    binding = select_attributes(dataset, VizType.PIE)
    slices = _rollup_means(dataset, binding.slots["CAT_ATTR"], binding.slots["VAL_ATTR"])
    total = sum(v for _, v in slices) or 1.0
    radius = min(WIDTH, HEIGHT) / 2
    colors = ["#4e79a7", "#f28e2c", "#e15759", "#76b7b2", "#59a14f", "#edc949"]
    marks = [f'<g transform="translate({WIDTH / 2},{HEIGHT / 2})">']
    angle = -math.pi / 2
    for index, (_, value) in enumerate(slices):
        sweep = value / total * 2 * math.pi
        x0, y0 = radius * math.cos(angle), radius * math.sin(angle)
        angle += sweep
        x1, y1 = radius * math.cos(angle), radius * math.sin(angle)
        large = 1 if sweep > math.pi else 0
        d = (
            f"M{round(x0, 2)},{round(y0, 2)}"
            f"A{radius},{radius},0,{large},1,{round(x1, 2)},{round(y1, 2)}"
            f"L0,0Z"
        )
        color = colors[index % len(colors)]
        marks.append(f'<path class="mark" d="{d}" fill="{color}" stroke="white"/>')
    marks.append("</g>")
    return _document(marks, axes=False)


def render_graph(dataset: Dataset) -> str:
    binding = select_attributes(dataset, VizType.GRAPH)
    cat, val = binding.slots["CAT_ATTR"], binding.slots["VAL_ATTR"]
    values = [_num(r, val) for r in dataset.rows]
    vmin, vmax = min(values), max(values)
    vspan = (vmax - vmin) or 1.0
    colors = ["#4e79a7", "#f28e2c", "#e15759", "#76b7b2", "#59a14f", "#edc949"]
    categories: list[str] = []
    # Deterministic trail layout standing in for the force simulation.
    positions = []
    n = len(dataset.rows)
    for index in range(n):
        theta = index * 2.399963  # golden angle keeps nodes spread apart
        rho = 20 + (min(WIDTH, HEIGHT) / 2 - 30) * (index / max(n - 1, 1))
        positions.append(
            (
                round(WIDTH / 2 + rho * math.cos(theta), 2),
                round(HEIGHT / 2 + rho * math.sin(theta), 2),
            )
        )
    marks = ["<g>"]
    for (x0, y0), (x1, y1) in zip(positions, positions[1:]):
        marks.append(
            f'<line class="edge" x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" stroke="#999"/>'
        )
    marks.append("</g><g>")
    for row, (cx, cy) in zip(dataset.rows, positions):
        if row[cat] not in categories:
            categories.append(row[cat])
        color = colors[categories.index(row[cat]) % len(colors)]
        r = round(3 + (_num(row, val) - vmin) / vspan * 6, 2)
        marks.append(f'<circle class="mark" cx="{cx}" cy="{cy}" r="{r}" fill="{color}"/>')
    marks.append("</g>")
    return _document(marks, axes=False)


RENDERERS = {
    VizType.SCATTERPLOT: render_scatterplot,
    VizType.BAR: render_bar,
    VizType.LINE: render_line,
    VizType.AREA: render_area,
    VizType.PIE: render_pie,
    VizType.GRAPH: render_graph,
}


def main() -> None:
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    for name in ("iris", "cars"):
        payload = (resources.files("vizsmith.data") / f"{name}.csv").read_bytes()
        dataset = load_dataset(payload, "csv", name=name)
        for viz, renderer in RENDERERS.items():
            path = OUT_DIR / f"{viz.value}_{name}.svg"
            path.write_text(renderer(dataset), encoding="utf-8")
            print(f"wrote {path}")


if __name__ == "__main__":
    main()
