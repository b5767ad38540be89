"""Coded example corpus ingestion and aggregate statistics.

The corpus file is a CSV with columns ``id,viz_type,viable,interactions``.
``viz_type`` holds one or more ``;``-separated visualization labels (an
example can render several charts), ``interactions`` a ``;``-separated list
of widget tokens. Non-viable rows are kept but never enter the statistics.
The aggregates computed here seed the recommendation model.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from importlib import resources

from .errors import NoViableExamples, SchemaError

INTERACTION_TOKENS = ("hover", "visualize", "click", "brush", "zoom", "drag")

STANDARD_VIZ_TOKENS = (
    "bar", "geographic", "line", "scatterplot", "graph", "pie", "area",
    "chord", "heatmap", "voronoi", "tree", "sankey", "sunburst", "donut",
    "word_cloud", "parallel_coordinates", "box_plot", "hexbin", "radial",
    "stream", "waffle",
)

VIZ_TOKENS = STANDARD_VIZ_TOKENS + ("custom",)

_HEADER = ["id", "viz_type", "viable", "interactions"]


@dataclass(frozen=True)
class CodedExample:
    id: str
    visualizations: tuple[str, ...]
    interactions: frozenset[str]
    viable: bool

    @property
    def viz(self) -> str | None:
        """Primary visualization label (first coded)."""
        return self.visualizations[0] if self.visualizations else None


@dataclass
class CorpusStats:
    total_examples: int
    viable_count: int
    interactive_count: int
    viz_instance_counts: dict[str, int]
    interaction_counts: dict[str, int]
    pair_counts: dict[frozenset, int]
    per_viz_pairs: dict[str, set[frozenset]]
    per_viz_interactions: dict[str, set[str]]
    per_viz_example_counts: dict[str, int]
    state_tables: dict[str, dict[frozenset, int]] = field(default_factory=dict)

    @property
    def total_viz_instances(self) -> int:
        return sum(self.viz_instance_counts.values())

    def viz_percentage(self, viz: str) -> float:
        """Share of classified visualization instances, one decimal."""
        total = self.total_viz_instances
        if total == 0:
            return 0.0
        return round(100.0 * self.viz_instance_counts.get(viz, 0) / total, 1)

    @property
    def interactive_fraction(self) -> float:
        if self.total_examples == 0:
            return 0.0
        return round(100.0 * self.interactive_count / self.total_examples, 1)

    def pair_count(self, a: str, b: str) -> int:
        return self.pair_counts.get(frozenset((a, b)), 0)

    @property
    def total_pair_occurrences(self) -> int:
        return sum(self.pair_counts.values())

    @property
    def distinct_pair_count(self) -> int:
        """Distinct (visualization, widget-pair) combinations observed."""
        return sum(len(pairs) for pairs in self.per_viz_pairs.values())

    def pair_share(self, a: str, b: str) -> float:
        total = self.total_pair_occurrences
        if total == 0:
            return 0.0
        return round(100.0 * self.pair_count(a, b) / total, 1)


def ingest(payload: str | bytes) -> list[CodedExample]:
    """Parse a corpus CSV; raises SchemaError with the offending row number."""
    text = payload.decode("utf-8") if isinstance(payload, bytes) else payload
    reader = csv.reader(io.StringIO(text))
    table = list(reader)
    if not table or [h.strip() for h in table[0]] != _HEADER:
        raise SchemaError(f"missing or invalid header, expected {','.join(_HEADER)}")
    examples: list[CodedExample] = []
    for index, row in enumerate(table[1:], start=1):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != len(_HEADER):
            raise SchemaError(f"row {index} has {len(row)} columns, expected 4", row=index)
        ex_id, viz_field, viable_field, inter_field = (cell.strip() for cell in row)
        viable_text = viable_field.lower()
        if viable_text not in ("true", "false", "1", "0"):
            raise SchemaError(f"row {index}: viable must be true/false", row=index)
        viable = viable_text in ("true", "1")
        vizzes = tuple(tok for tok in (t.strip() for t in viz_field.split(";")) if tok)
        for token in vizzes:
            if token not in VIZ_TOKENS:
                raise SchemaError(f"row {index}: unknown viz token {token!r}", row=index)
        if viable and not vizzes:
            raise SchemaError(f"row {index}: viable row without viz_type", row=index)
        interactions = frozenset(
            tok for tok in (t.strip() for t in inter_field.split(";")) if tok
        )
        for token in interactions:
            if token not in INTERACTION_TOKENS:
                raise SchemaError(
                    f"row {index}: unknown interaction token {token!r}", row=index
                )
        examples.append(
            CodedExample(
                id=ex_id,
                visualizations=vizzes,
                interactions=interactions,
                viable=viable,
            )
        )
    return examples


def compute_stats(examples: list[CodedExample]) -> CorpusStats:
    """Marginals, pair co-occurrence, and per-state observation tables."""
    viable = [e for e in examples if e.viable]
    if not viable:
        raise NoViableExamples("corpus has no viable examples")

    viz_instances: dict[str, int] = {}
    per_viz_interactions: dict[str, set[str]] = {}
    per_viz_pairs: dict[str, set[frozenset]] = {}
    per_viz_examples: dict[str, int] = {}
    interaction_counts: dict[str, int] = {}
    pair_counts: dict[frozenset, int] = {}
    state_tables: dict[str, dict[frozenset, int]] = {"__all__": {}}
    interactive = 0

    for example in viable:
        if example.interactions:
            interactive += 1
        for token in example.interactions:
            interaction_counts[token] = interaction_counts.get(token, 0) + 1
        pairs = [
            frozenset((a, b))
            for i, a in enumerate(sorted(example.interactions))
            for b in sorted(example.interactions)[i + 1 :]
        ]
        for pair in pairs:
            pair_counts[pair] = pair_counts.get(pair, 0) + 1
        all_table = state_tables["__all__"]
        all_table[example.interactions] = all_table.get(example.interactions, 0) + 1
        for viz in example.visualizations:
            viz_instances[viz] = viz_instances.get(viz, 0) + 1
            per_viz_examples[viz] = per_viz_examples.get(viz, 0) + 1
            per_viz_interactions.setdefault(viz, set()).update(example.interactions)
            per_viz_pairs.setdefault(viz, set()).update(pairs)
            table = state_tables.setdefault(viz, {})
            table[example.interactions] = table.get(example.interactions, 0) + 1

    return CorpusStats(
        total_examples=len(examples),
        viable_count=len(viable),
        interactive_count=interactive,
        viz_instance_counts=viz_instances,
        interaction_counts=interaction_counts,
        pair_counts=pair_counts,
        per_viz_pairs={v: p for v, p in per_viz_pairs.items() if p},
        per_viz_interactions=per_viz_interactions,
        per_viz_example_counts=per_viz_examples,
        state_tables=state_tables,
    )


def emit_seed(stats: CorpusStats, viz: str | None = None) -> dict[frozenset, int]:
    """Exact interaction-set observation counts for the recommender seed.

    One count per observed interaction combination; ``viz=None`` pools every
    viable example, otherwise only examples coded with that visualization.
    """
    key = "__all__" if viz is None else viz
    return dict(stats.state_tables.get(key, {}))


def load_packaged_corpus() -> list[CodedExample]:
    """The synthetic fixture corpus shipped with the package."""
    data = resources.files("vizsmith.data") / "corpus_fixture.csv"
    return ingest(data.read_text("utf-8"))
