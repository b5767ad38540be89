"""Curated chart and interaction templates.

Template bodies are source files over the supported grammar subset with
``__NAME__`` placeholder slots. A manifest describes each template's slot
signature, mark shape, and anchor patterns; everything is parsed and
validated once at load. Which (interaction, visualization) pairs exist is
decided by the observation corpus: a pair is offered only if it was seen at
least once in coded examples.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from ..datasets import Attribute, AttributeType
from ..errors import UnsupportedPair, UnknownVizType
from ..jsast import Ast, NodeKind, NodePattern, SLOT_PATTERN_RE, find, parse


class VizType(enum.Enum):
    BAR = "bar"
    SCATTERPLOT = "scatterplot"
    LINE = "line"
    AREA = "area"
    PIE = "pie"
    GRAPH = "graph"


class InteractionType(enum.Enum):
    # Declaration order is the global tie-break order for rankings.
    HOVER = "hover"
    VISUALIZE = "visualize"
    CLICK = "click"
    BRUSH = "brush"
    ZOOM = "zoom"
    DRAG = "drag"


INTERACTION_ORDER = {i: n for n, i in enumerate(InteractionType)}


def viz_from_name(name: str) -> VizType:
    try:
        return VizType(name)
    except ValueError:
        raise UnknownVizType(f"unknown visualization type: {name!r}") from None


def interaction_from_name(name: str) -> InteractionType:
    try:
        return InteractionType(name)
    except ValueError:
        raise UnknownVizType(f"unknown interaction type: {name!r}") from None


@dataclass(frozen=True)
class Slot:
    name: str
    types: frozenset[AttributeType]
    accepts_discrete: bool
    role: str  # position | band | color | value


@dataclass(frozen=True)
class AnchorSpec:
    pattern: NodePattern
    mode: str  # prepend | replace | append
    description: str


@dataclass(frozen=True)
class MarkInfo:
    kind: str
    channel: str
    pos_x: str
    pos_y: str


@dataclass
class Template:
    id: str
    kind: str  # "viz" | "interaction"
    body: Ast
    summary: str
    # viz templates
    viz: VizType | None = None
    slots: list[Slot] = field(default_factory=list)
    mark: MarkInfo | None = None
    anchors: dict[str, AnchorSpec] = field(default_factory=dict)
    # interaction templates
    interaction: InteractionType | None = None
    applicable_viz: frozenset[VizType] = frozenset()
    anchor: AnchorSpec | None = None

    @property
    def slot_names(self) -> list[str]:
        """Slot names referenced anywhere in the body, in document order."""
        seen: list[str] = []
        for node in self.body.root.walk():
            names: list[str] = []
            if node.kind is NodeKind.PLACEHOLDER:
                names = [node.token]
            elif node.kind in (NodeKind.STRING_LITERAL, NodeKind.COMMENT):
                names = SLOT_PATTERN_RE.findall(node.token)
            for name in names:
                if name not in seen:
                    seen.append(name)
        return seen


def scale_kind_for(slot: Slot, attr: Attribute) -> str:
    """Scale constructor family for one bound slot."""
    if attr.inferred_type is AttributeType.TEMPORAL:
        return "time"
    if attr.inferred_type is AttributeType.QUANTITATIVE:
        return "band" if slot.role == "band" else "linear"
    # nominal / ordinal
    if slot.role == "band":
        return "band"
    if slot.role == "color":
        return "ordinal"
    return "point"


def _load_manifest() -> dict:
    root = resources.files("vizsmith.templates")
    return json.loads((root / "manifest.json").read_text("utf-8"))


def _read_body(rel_path: str) -> Ast:
    root = resources.files("vizsmith.templates")
    return parse((root / rel_path).read_text("utf-8"))


def _parse_slot(entry: dict) -> Slot:
    return Slot(
        name=entry["name"],
        types=frozenset(AttributeType(t) for t in entry["types"]),
        accepts_discrete=bool(entry.get("discrete", False)),
        role=entry["role"],
    )


class TemplateLibrary:
    """All shipped templates plus the corpus-observed applicability matrix."""

    def __init__(self, observed_pairs: dict[VizType, set[InteractionType]] | None = None):
        manifest = _load_manifest()
        self.viz_templates: dict[VizType, Template] = {}
        for name, entry in manifest["viz"].items():
            viz = VizType(name)
            body = _read_body(entry["file"])
            anchors = {
                anchor_name: AnchorSpec(
                    pattern=NodePattern.from_dict(spec["pattern"]),
                    mode="replace",
                    description=spec.get("description", anchor_name),
                )
                for anchor_name, spec in entry["anchors"].items()
            }
            template = Template(
                id=name,
                kind="viz",
                body=body,
                summary=entry["summary"],
                viz=viz,
                slots=[_parse_slot(s) for s in entry["slots"]],
                mark=MarkInfo(**entry["mark"]),
                anchors=anchors,
            )
            self._validate_viz_template(template)
            self.viz_templates[viz] = template

        self.interaction_variants: dict[tuple[InteractionType, VizType], Template] = {}
        self.interaction_summaries: dict[InteractionType, str] = {}
        for name, entry in manifest["interactions"].items():
            interaction = InteractionType(name)
            self.interaction_summaries[interaction] = entry["summary"]
            for variant in entry["variants"]:
                body = _read_body(variant["file"])
                viz_set = frozenset(VizType(v) for v in variant["viz"])
                for viz in viz_set:
                    anchor_spec = self.viz_templates[viz].anchors[variant["anchor"]]
                    template = Template(
                        id=variant["file"].rsplit("/", 1)[-1].removesuffix(".js"),
                        kind="interaction",
                        body=body,
                        summary=entry["summary"],
                        interaction=interaction,
                        applicable_viz=viz_set,
                        anchor=AnchorSpec(
                            pattern=anchor_spec.pattern,
                            mode=variant["mode"],
                            description=anchor_spec.description,
                        ),
                    )
                    if variant["mode"] == "replace":
                        self._validate_wrap_template(template)
                    self.interaction_variants[(interaction, viz)] = template

        if observed_pairs is None:
            observed_pairs = _observed_pairs_from_packaged_corpus()
        self.observed_pairs = observed_pairs

    @staticmethod
    def _validate_viz_template(template: Template) -> None:
        names = set(template.slot_names)
        for slot in template.slots:
            if slot.name not in names:
                raise ValueError(
                    f"template {template.id!r} never references slot {slot.name!r}"
                )
        for anchor_name, spec in template.anchors.items():
            matches = find(template.body, spec.pattern)
            if len(matches) != 1:
                raise ValueError(
                    f"anchor {anchor_name!r} matches {len(matches)} nodes "
                    f"in template {template.id!r}, expected exactly 1"
                )

    @staticmethod
    def _validate_wrap_template(template: Template) -> None:
        statements = [
            s
            for s in template.body.root.children
            if s.kind is not NodeKind.COMMENT
        ]
        if len(statements) != 1 or statements[0].kind is not NodeKind.EXPRESSION_STATEMENT:
            raise ValueError(
                f"wrap template {template.id!r} must be one expression statement"
            )
        if "ANCHOR" not in template.slot_names:
            raise ValueError(f"wrap template {template.id!r} has no ANCHOR slot")

    # --- queries ---

    def get_viz_template(self, viz: VizType) -> Template:
        return self.viz_templates[viz]

    def get_interaction_template(self, interaction: InteractionType, viz: VizType) -> Template:
        supported = self.observed_pairs.get(viz, set())
        if interaction not in supported:
            raise UnsupportedPair(
                f"{interaction.value} has not been observed on {viz.value} charts"
            )
        try:
            return self.interaction_variants[(interaction, viz)]
        except KeyError:
            raise UnsupportedPair(
                f"no {interaction.value} template ships for {viz.value} charts"
            ) from None

    def applicability(self, viz: VizType) -> list[InteractionType]:
        """Corpus-observed interactions for a chart type, in global order.

        Ranking among these is the recommender's job.
        """
        observed = self.observed_pairs.get(viz, set())
        return sorted(observed, key=INTERACTION_ORDER.get)


def _observed_pairs_from_packaged_corpus() -> dict[VizType, set[InteractionType]]:
    from ..corpus import compute_stats, load_packaged_corpus

    stats = compute_stats(load_packaged_corpus())
    pairs: dict[VizType, set[InteractionType]] = {}
    for viz in VizType:
        observed = stats.per_viz_interactions.get(viz.value, set())
        pairs[viz] = {InteractionType(i) for i in observed}
    return pairs


@lru_cache(maxsize=1)
def default_library() -> TemplateLibrary:
    return TemplateLibrary()


def get_viz_template(viz: VizType) -> Template:
    return default_library().get_viz_template(viz)


def get_interaction_template(interaction: InteractionType, viz: VizType) -> Template:
    return default_library().get_interaction_template(interaction, viz)


def applicability(viz: VizType) -> list[InteractionType]:
    return default_library().applicability(viz)
