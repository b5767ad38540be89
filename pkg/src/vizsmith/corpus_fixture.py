"""Deterministic synthetic example corpus.

The original coded example collection is not redistributable, so the repo
ships a generator that reproduces every aggregate the reference analysis
reports: 1500 examples of which 1228 are viable, 1267 classified
visualization instances (bar 251, geographic 192, line 137, custom 271,
long-tail types down to one waffle chart), 659 interactive examples holding
859 interaction instances (hover 390, visualize 118, zoom 113, click 100,
drag 90, brush 48), 39 distinct per-visualization widget pairings, and a
click+hover pairing share of exactly 14% of all pair occurrences. Area
charts carry only brush/hover; line charts exhibit all six widgets.

Everything is table-driven and deterministic; regenerating the file always
yields identical bytes.
"""

from __future__ import annotations

import csv
import io

# (viz, interaction combination, example count); one row group per entry.
INTERACTIVE_GROUPS: tuple[tuple[str, tuple[str, ...], int], ...] = (
    ("scatterplot", ("hover",), 60),
    ("scatterplot", ("click",), 6),
    ("scatterplot", ("visualize",), 8),
    ("scatterplot", ("zoom",), 5),
    ("scatterplot", ("drag",), 4),
    ("scatterplot", ("brush",), 3),
    ("scatterplot", ("hover", "click"), 10),
    ("scatterplot", ("hover", "zoom"), 5),
    ("scatterplot", ("hover", "visualize"), 5),
    ("scatterplot", ("hover", "brush"), 2),
    ("scatterplot", ("hover", "drag"), 2),
    ("scatterplot", ("click", "visualize"), 2),
    ("bar", ("hover",), 70),
    ("bar", ("click",), 12),
    ("bar", ("visualize",), 14),
    ("bar", ("brush",), 5),
    ("bar", ("hover", "click"), 9),
    ("bar", ("hover", "visualize"), 6),
    ("bar", ("click", "visualize"), 2),
    ("bar", ("hover", "brush"), 1),
    ("line", ("hover",), 33),
    ("line", ("click",), 5),
    ("line", ("visualize",), 6),
    ("line", ("zoom",), 8),
    ("line", ("drag",), 3),
    ("line", ("brush",), 3),
    ("line", ("hover", "click"), 4),
    ("line", ("hover", "zoom"), 4),
    ("line", ("zoom", "brush"), 2),
    ("line", ("hover", "visualize"), 2),
    ("area", ("hover",), 6),
    ("area", ("brush",), 3),
    ("area", ("hover", "brush"), 2),
    ("graph", ("hover",), 18),
    ("graph", ("click",), 8),
    ("graph", ("zoom",), 12),
    ("graph", ("drag",), 16),
    ("graph", ("hover", "drag"), 8),
    ("graph", ("zoom", "drag"), 6),
    ("graph", ("hover", "click"), 3),
    ("graph", ("hover", "zoom"), 2),
    ("pie", ("hover",), 13),
    ("pie", ("click",), 4),
    ("pie", ("visualize",), 3),
    ("pie", ("hover", "click"), 2),
    ("pie", ("hover", "visualize"), 1),
    ("geographic", ("hover",), 20),
    ("geographic", ("zoom",), 15),
    ("geographic", ("click",), 2),
    ("geographic", ("hover", "zoom"), 12),
    ("geographic", ("zoom", "visualize"), 6),
    ("geographic", ("zoom", "brush"), 6),
    ("custom", ("hover",), 45),
    ("custom", ("click",), 5),
    ("custom", ("visualize",), 20),
    ("custom", ("zoom",), 5),
    ("custom", ("drag",), 3),
    ("custom", ("hover", "visualize"), 10),
    ("custom", ("hover", "drag"), 14),
    ("custom", ("hover", "zoom"), 3),
    ("custom", ("zoom", "visualize"), 8),
    ("custom", ("zoom", "drag"), 8),
    ("custom", ("hover", "brush"), 7),
    ("custom", ("click", "drag"), 10),
    ("custom", ("drag", "brush"), 6),
    ("custom", ("drag", "visualize"), 10),
    ("custom", ("click", "brush"), 6),
    ("heatmap", ("hover",), 2),
    ("heatmap", ("visualize",), 3),
    ("heatmap", ("hover", "visualize"), 2),
    ("voronoi", ("hover",), 2),
    ("voronoi", ("click", "zoom"), 6),
    ("tree", ("click", "visualize"), 2),
    ("sankey", ("click", "visualize"), 2),
    ("sunburst", ("brush", "visualize"), 2),
    ("donut", ("hover",), 2),
    ("donut", ("visualize",), 4),
    ("chord", ("hover",), 3),
)

# Static (no interaction) single-visualization examples per type.
STATIC_COUNTS: tuple[tuple[str, int], ...] = (
    ("scatterplot", 17),
    ("bar", 132),
    ("line", 67),
    ("area", 27),
    ("graph", 16),
    ("pie", 34),
    ("geographic", 92),
    ("custom", 72),
    ("heatmap", 6),
    ("voronoi", 3),
    ("tree", 8),
    ("sankey", 8),
    ("sunburst", 8),
    ("donut", 3),
    ("chord", 16),
    ("parallel_coordinates", 4),
    ("word_cloud", 4),
    ("box_plot", 3),
    ("hexbin", 3),
    ("radial", 3),
    ("stream", 3),
    ("waffle", 1),
)

# Static examples coded with two visualizations each.
DUAL_VIZ_STATIC: tuple[tuple[str, str, int], ...] = (
    ("geographic", "custom", 39),
)

NON_VIABLE_COUNT = 272


def generate_examples() -> list[tuple[str, str, str, str]]:
    """Rows (id, viz_type, viable, interactions) for the fixture corpus."""
    rows: list[tuple[str, str, str, str]] = []
    counter = 0

    def next_id() -> str:
        nonlocal counter
        counter += 1
        return f"ex{counter:04d}"

    for viz, interactions, count in INTERACTIVE_GROUPS:
        for _ in range(count):
            rows.append((next_id(), viz, "true", ";".join(interactions)))
    for viz, count in STATIC_COUNTS:
        for _ in range(count):
            rows.append((next_id(), viz, "true", ""))
    for viz_a, viz_b, count in DUAL_VIZ_STATIC:
        for _ in range(count):
            rows.append((next_id(), f"{viz_a};{viz_b}", "true", ""))
    for _ in range(NON_VIABLE_COUNT):
        rows.append((next_id(), "", "false", ""))
    return rows


def generate_csv() -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["id", "viz_type", "viable", "interactions"])
    writer.writerows(generate_examples())
    return out.getvalue()


def main() -> None:
    import pathlib
    import sys

    target = pathlib.Path(sys.argv[1]) if len(sys.argv) > 1 else pathlib.Path(
        __file__
    ).parent / "data" / "corpus_fixture.csv"
    target.write_text(generate_csv(), encoding="utf-8")
    print(f"wrote {target}")


if __name__ == "__main__":
    main()
