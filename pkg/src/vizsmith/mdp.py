"""Interaction recommendation model.

States are sets of already-implemented interaction types. The model is
seeded from corpus observation counts and adjusted online by user reactions.
For a state ``s`` and a recommended interaction ``i`` with ``s' = s + {i}``:

  accept(s, i)  = observations(s') / observations(s)
  export(s)     = export_count(s)  / observations(s)
  undo(s)       = undo_count(s)    / observations(s)
  ignore(s)     = 1 - sum(accept over all out-edges) - export(s) - undo(s)

``observations(s)`` counts corpus examples whose interaction set contains
``s``. When the subtracted mass exceeds one, the accept/export/undo terms
are scaled down proportionally so the four reaction probabilities always sum
to exactly one. An interaction is only ever offered if its target state was
observed at least once.

Reactions additionally accumulate a reward per (state, interaction):
accepting adds a small positive reward, exporting a large positive one,
undoing a large negative one, ignoring nothing. Ranking scores blend the
normalized accept probability with a squashed reward term so live feedback
reorders near-ties without drowning out the corpus statistics.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field

from .corpus import CodedExample, CorpusStats, compute_stats, emit_seed
from .errors import CorruptModel, EmptyCorpus, NotRecommended, UnknownState, UnknownVizType
from .templates import INTERACTION_ORDER, InteractionType, VizType

InteractionState = frozenset[InteractionType]

EMPTY_STATE: InteractionState = frozenset()

ALL_KEY = "__all__"

# Per-visualization tables below this many examples fall back to the pooled table.
FALLBACK_MIN_EXAMPLES = 10

SCORE_LAMBDA = 0.1


class Reaction(enum.Enum):
    ACCEPT = "accept"
    EXPORT = "export"
    UNDO = "undo"
    IGNORE = "ignore"


@dataclass(frozen=True)
class RewardParams:
    accept: float = 1.0
    export: float = 5.0
    undo: float = -5.0
    ignore: float = 0.0

    def for_reaction(self, reaction: Reaction) -> float:
        return {
            Reaction.ACCEPT: self.accept,
            Reaction.EXPORT: self.export,
            Reaction.UNDO: self.undo,
            Reaction.IGNORE: self.ignore,
        }[reaction]


@dataclass(frozen=True)
class Recommendation:
    interaction: InteractionType
    score: float
    rank: int


def state_from_names(names: str | list[str]) -> InteractionState:
    if isinstance(names, str):
        names = [n for n in (t.strip() for t in names.replace("+", ",").split(",")) if n]
    return frozenset(InteractionType(n) for n in names)


def state_key(state: InteractionState) -> str:
    return "+".join(sorted(i.value for i in state))


def _sigmoid(x: float) -> float:
    return 1.0 / (1.0 + math.exp(-x))


@dataclass
class StateTable:
    """Observation and reaction counts for one corpus slice."""

    exact_counts: dict[InteractionState, int] = field(default_factory=dict)
    export_counts: dict[InteractionState, int] = field(default_factory=dict)
    undo_counts: dict[InteractionState, int] = field(default_factory=dict)
    q_adjust: dict[tuple[InteractionState, InteractionType], float] = field(
        default_factory=dict
    )

    def observations(self, state: InteractionState) -> int:
        return sum(c for s, c in self.exact_counts.items() if state <= s)

    def interactions_seen(self) -> set[InteractionType]:
        seen: set[InteractionType] = set()
        for s in self.exact_counts:
            seen |= s
        return seen

    def out_edges(self, state: InteractionState) -> list[InteractionType]:
        """Interactions whose target state has been observed, global order."""
        edges = [
            i
            for i in InteractionType
            if i not in state and self.observations(state | {i}) > 0
        ]
        return edges

    def distribution(self, state: InteractionState) -> dict:
        """Normalized reaction probabilities from ``state``.

        Returns accept probabilities per out-edge plus the shared export,
        undo and ignore probabilities; all terms together sum to one.
        """
        total = self.observations(state)
        if total <= 0:
            raise UnknownState(f"state {state_key(state) or 'empty'} was never observed")
        accepts = {
            i: self.observations(state | {i}) / total for i in self.out_edges(state)
        }
        export = self.export_counts.get(state, 0) / total
        undo = self.undo_counts.get(state, 0) / total
        mass = sum(accepts.values()) + export + undo
        scale = 1.0 / mass if mass > 1.0 else 1.0
        accepts = {i: p * scale for i, p in accepts.items()}
        export *= scale
        undo *= scale
        ignore = 1.0 - sum(accepts.values()) - export - undo
        return {"accepts": accepts, "export": export, "undo": undo, "ignore": ignore}


@dataclass
class MdpModel:
    tables: dict[str, StateTable]
    per_viz_observed: dict[str, set[InteractionType]]
    example_counts: dict[str, int]
    reward_params: RewardParams = field(default_factory=RewardParams)
    score_lambda: float = SCORE_LAMBDA
    fallback_min: int = FALLBACK_MIN_EXAMPLES

    # --- table selection ---

    def table_key_for(self, viz_key: str | None) -> str:
        if viz_key is None or viz_key == ALL_KEY:
            return ALL_KEY
        if viz_key not in self.tables:
            return ALL_KEY
        if self.example_counts.get(viz_key, 0) < self.fallback_min:
            return ALL_KEY
        return viz_key

    def table_for(self, viz_key: str | None) -> StateTable:
        return self.tables[self.table_key_for(viz_key)]

    def observed_interactions(self, viz_key: str | None) -> set[InteractionType]:
        if viz_key is None or viz_key == ALL_KEY:
            return self.tables[ALL_KEY].interactions_seen()
        return set(self.per_viz_observed.get(viz_key, set()))

    # --- probability queries ---

    def observations(self, state: InteractionState, viz_key: str | None = None) -> int:
        return self.table_for(viz_key).observations(state)

    def reaction_probabilities(
        self, state: InteractionState, viz_key: str | None = None
    ) -> dict:
        return self.table_for(viz_key).distribution(state)

    def accept_probability(
        self, state: InteractionState, interaction: InteractionType,
        viz_key: str | None = None,
    ) -> float:
        dist = self.reaction_probabilities(state, viz_key)
        return dist["accepts"].get(interaction, 0.0)


def seed(
    corpus: list[CodedExample] | CorpusStats,
    reward_params: RewardParams | None = None,
) -> MdpModel:
    """Build a model from corpus observations.

    One table per visualization label plus a pooled table; raises
    EmptyCorpus when there is nothing viable to count.
    """
    if isinstance(corpus, CorpusStats):
        stats = corpus
    else:
        if not any(e.viable for e in corpus):
            raise EmptyCorpus("no viable examples to seed from")
        stats = compute_stats(corpus)
    tables: dict[str, StateTable] = {}
    for key in stats.state_tables:
        exact = {
            frozenset(InteractionType(t) for t in state): count
            for state, count in emit_seed(stats, None if key == ALL_KEY else key).items()
        }
        tables[key] = StateTable(exact_counts=exact)
    per_viz_observed = {
        viz: {InteractionType(t) for t in tokens}
        for viz, tokens in stats.per_viz_interactions.items()
    }
    return MdpModel(
        tables=tables,
        per_viz_observed=per_viz_observed,
        example_counts=dict(stats.per_viz_example_counts),
        reward_params=reward_params or RewardParams(),
    )


def from_tables(
    exact_counts: dict[frozenset, int],
    export_counts: dict[frozenset, int] | None = None,
    undo_counts: dict[frozenset, int] | None = None,
    reward_params: RewardParams | None = None,
) -> MdpModel:
    """Build a single-table model directly from constructed counts."""

    def to_state(s) -> InteractionState:
        return frozenset(i if isinstance(i, InteractionType) else InteractionType(i) for i in s)

    table = StateTable(
        exact_counts={to_state(s): c for s, c in exact_counts.items()},
        export_counts={to_state(s): c for s, c in (export_counts or {}).items()},
        undo_counts={to_state(s): c for s, c in (undo_counts or {}).items()},
    )
    observed = table.interactions_seen()
    return MdpModel(
        tables={ALL_KEY: table},
        per_viz_observed={},
        example_counts={},
        reward_params=reward_params or RewardParams(),
    )


def transition_probability(
    model: MdpModel,
    state: InteractionState,
    interaction: InteractionType,
    next_state: InteractionState | None = None,
    viz_key: str | None = None,
) -> float:
    """Normalized accept probability for the edge state -> state + {i}."""
    if next_state is not None and next_state != state | {interaction}:
        return 0.0
    return model.accept_probability(state, interaction, viz_key)


def _recommend_key(
    model: MdpModel, state: InteractionState, viz_key: str | None
) -> list[Recommendation]:
    table_key = model.table_key_for(viz_key)
    table = model.tables[table_key]
    if table.observations(state) <= 0:
        return []
    allowed = model.observed_interactions(viz_key)
    dist = table.distribution(state)
    candidates = [i for i in dist["accepts"] if i in allowed]
    scored = []
    for i in candidates:
        q = table.q_adjust.get((state, i), 0.0)
        score = dist["accepts"][i] + model.score_lambda * _sigmoid(q)
        scored.append((score, i))
    scored.sort(key=lambda pair: (-pair[0], INTERACTION_ORDER[pair[1]]))
    return [
        Recommendation(interaction=i, score=score, rank=rank)
        for rank, (score, i) in enumerate(scored, start=1)
    ]


def recommend(
    model: MdpModel, state: InteractionState, viz: VizType | str | None = None
) -> list[Recommendation]:
    """Ranked interactions for ``state``; empty at terminal states.

    Never returns an interaction already in the state, an unobserved edge,
    or a pair outside the visualization's observed set.
    """
    if isinstance(viz, VizType):
        viz_key = viz.value
    elif viz is None:
        viz_key = None
    else:
        if viz != ALL_KEY and viz not in model.tables and viz not in model.per_viz_observed:
            raise UnknownVizType(f"no observations for visualization {viz!r}")
        viz_key = viz
    return _recommend_key(model, state, viz_key)


def record_feedback(
    model: MdpModel,
    state: InteractionState,
    interaction: InteractionType | None,
    reaction: Reaction,
    viz_key: str | None = None,
) -> MdpModel:
    """Apply one user reaction and update counts and rewards in place.

    Accept adds an observation of the new state; export and undo bump their
    per-state counters (counts never go negative: reactions only add).
    Ignore changes nothing. All outgoing probabilities of the state are
    recomputed from counts on the next query, renormalized as needed.
    """
    keys = [ALL_KEY]
    if viz_key is not None and viz_key != ALL_KEY and viz_key in model.tables:
        keys.append(viz_key)
    if reaction is not Reaction.IGNORE:
        if interaction is None:
            raise NotRecommended("reaction requires the recommended interaction")
        if interaction in state:
            raise NotRecommended(
                f"{interaction.value} is already part of the state"
            )
        check_table = model.table_for(viz_key)
        if check_table.observations(state | {interaction}) <= 0:
            raise NotRecommended(
                f"{interaction.value} was never recommended from this state"
            )
    reward = model.reward_params.for_reaction(reaction)
    for key in keys:
        table = model.tables[key]
        if reaction is Reaction.ACCEPT:
            target = state | {interaction}
            table.exact_counts[target] = table.exact_counts.get(target, 0) + 1
        elif reaction is Reaction.EXPORT:
            table.export_counts[state] = table.export_counts.get(state, 0) + 1
        elif reaction is Reaction.UNDO:
            table.undo_counts[state] = table.undo_counts.get(state, 0) + 1
        if reaction is not Reaction.IGNORE and interaction is not None:
            edge = (state, interaction)
            table.q_adjust[edge] = table.q_adjust.get(edge, 0.0) + reward
    return model


def cross_validate(examples: list[CodedExample], k: int = 3) -> dict:
    """Leave-one-out accuracy of empty-state recommendations.

    An example counts as correct when every interaction it implements
    appears within the top ``k`` recommendations of a model seeded on the
    remaining examples. Examples without interactions are skipped. Reports
    overall and per-interaction accuracy.
    """
    viable = [e for e in examples if e.viable]
    if len(viable) < 2:
        raise EmptyCorpus("need at least two viable examples to cross-validate")
    interactive = [e for e in viable if e.interactions]
    total = 0
    correct = 0
    per_interaction: dict[str, list[int]] = {}
    for index, example in enumerate(interactive):
        remainder = [e for e in viable if e is not example]
        model = seed(remainder)
        viz_key = example.viz
        if viz_key is not None and viz_key not in model.tables:
            viz_key = None
        recs = _recommend_key(model, EMPTY_STATE, viz_key)
        top = {r.interaction.value for r in recs[:k]}
        hit = all(token in top for token in example.interactions)
        total += 1
        correct += int(hit)
        for token in example.interactions:
            per_interaction.setdefault(token, []).append(int(hit))
    return {
        "k": k,
        "evaluated": total,
        "overall": correct / total if total else 0.0,
        "per_interaction": {
            token: sum(hits) / len(hits) for token, hits in sorted(per_interaction.items())
        },
    }


# --- persistence ---------------------------------------------------------------

_FORMAT_VERSION = 1


def persist(model: MdpModel) -> str:
    """Serialize to a versioned JSON document."""

    def dump_table(table: StateTable) -> dict:
        return {
            "observations": [
                {"state": sorted(i.value for i in s), "count": c}
                for s, c in sorted(table.exact_counts.items(), key=lambda kv: state_key(kv[0]))
            ],
            "export_counts": [
                {"state": sorted(i.value for i in s), "count": c}
                for s, c in sorted(table.export_counts.items(), key=lambda kv: state_key(kv[0]))
            ],
            "undo_counts": [
                {"state": sorted(i.value for i in s), "count": c}
                for s, c in sorted(table.undo_counts.items(), key=lambda kv: state_key(kv[0]))
            ],
            "q_adjust": [
                {"state": sorted(i.value for i in s), "interaction": i_r.value, "value": v}
                for (s, i_r), v in sorted(
                    table.q_adjust.items(), key=lambda kv: (state_key(kv[0][0]), kv[0][1].value)
                )
            ],
        }

    doc = {
        "version": _FORMAT_VERSION,
        "reward_params": {
            "accept": model.reward_params.accept,
            "export": model.reward_params.export,
            "undo": model.reward_params.undo,
            "ignore": model.reward_params.ignore,
        },
        "score_lambda": model.score_lambda,
        "fallback_min": model.fallback_min,
        "tables": {key: dump_table(t) for key, t in sorted(model.tables.items())},
        "per_viz_observed": {
            viz: sorted(i.value for i in seen)
            for viz, seen in sorted(model.per_viz_observed.items())
        },
        "example_counts": dict(sorted(model.example_counts.items())),
    }
    return json.dumps(doc, indent=2, sort_keys=True)


def restore(payload: str | bytes) -> MdpModel:
    """Rebuild a model from ``persist`` output; raises CorruptModel."""
    text = payload.decode("utf-8") if isinstance(payload, bytes) else payload
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CorruptModel(f"not valid json: {exc}") from exc
    try:
        if doc["version"] != _FORMAT_VERSION:
            raise CorruptModel(f"unsupported model version {doc['version']!r}")

        def to_state(names: list[str]) -> InteractionState:
            return frozenset(InteractionType(n) for n in names)

        tables: dict[str, StateTable] = {}
        for key, raw in doc["tables"].items():
            tables[key] = StateTable(
                exact_counts={
                    to_state(e["state"]): int(e["count"]) for e in raw["observations"]
                },
                export_counts={
                    to_state(e["state"]): int(e["count"]) for e in raw["export_counts"]
                },
                undo_counts={
                    to_state(e["state"]): int(e["count"]) for e in raw["undo_counts"]
                },
                q_adjust={
                    (to_state(e["state"]), InteractionType(e["interaction"])): float(
                        e["value"]
                    )
                    for e in raw["q_adjust"]
                },
            )
        if ALL_KEY not in tables:
            raise CorruptModel("model is missing the pooled table")
        params = doc["reward_params"]
        return MdpModel(
            tables=tables,
            per_viz_observed={
                viz: {InteractionType(n) for n in names}
                for viz, names in doc["per_viz_observed"].items()
            },
            example_counts={k: int(v) for k, v in doc["example_counts"].items()},
            reward_params=RewardParams(
                accept=float(params["accept"]),
                export=float(params["export"]),
                undo=float(params["undo"]),
                ignore=float(params["ignore"]),
            ),
            score_lambda=float(doc["score_lambda"]),
            fallback_min=int(doc["fallback_min"]),
        )
    except CorruptModel:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise CorruptModel(f"malformed model document: {exc}") from exc
