"""Session and model state behind the HTTP API.

Sessions are in-memory: dataset, current source, interaction state, and a
snapshot history for undo. All sessions share one recommendation model;
feedback is applied under a lock so concurrent sessions never observe a
half-updated distribution. Every operation appends to the session's
append-only event log (optionally mirrored to a JSONL file).
"""

from __future__ import annotations

import json
import pathlib
import threading
import time
import uuid
from dataclasses import dataclass, field

from ..augment import SessionHistory, augment
from ..corpus import ingest, load_packaged_corpus
from ..datasets import Dataset, load_dataset, select_attributes
from ..errors import NotRecommended, UnknownVizType, VizsmithError
from ..fitting import FittedProgram, fit_template
from ..mdp import (
    MdpModel,
    Reaction,
    Recommendation,
    persist,
    recommend,
    record_feedback,
    restore,
    seed,
)
from ..svgfeatures import Classification, classify, extract_features
from ..templates import InteractionType, TemplateLibrary, VizType, default_library

MAX_UPLOAD_BYTES = 10 * 1024 * 1024


@dataclass
class SessionEvent:
    ts: float
    session: str
    kind: str
    payload: dict

    def to_dict(self) -> dict:
        return {"ts": self.ts, "session": self.session, "kind": self.kind, "payload": self.payload}


@dataclass
class Session:
    id: str
    dataset: Dataset
    source: str | None = None
    viz: VizType | None = None
    state: frozenset[InteractionType] = frozenset()
    history: SessionHistory = field(default_factory=SessionHistory)
    events: list[SessionEvent] = field(default_factory=list)
    fitted: FittedProgram | None = None
    fitted_source: str | None = None
    classification_stale: bool = False
    last_recommendations: list[Recommendation] | None = None
    lock: threading.Lock = field(default_factory=threading.Lock)

    @property
    def data_url(self) -> str:
        return f"/v1/sessions/{self.id}/data"


class Engine:
    def __init__(
        self,
        corpus_path: str | None = None,
        model_path: str | None = None,
        event_log_path: str | None = None,
        model_save_interval: float | None = None,
    ):
        if corpus_path:
            examples = ingest(pathlib.Path(corpus_path).read_text("utf-8"))
            from ..corpus import compute_stats

            stats = compute_stats(examples)
            observed = {}
            for viz in VizType:
                tokens = stats.per_viz_interactions.get(viz.value, set())
                observed[viz] = {InteractionType(t) for t in tokens}
            self.library = TemplateLibrary(observed_pairs=observed)
        else:
            examples = load_packaged_corpus()
            self.library = default_library()

        self.model_path = pathlib.Path(model_path) if model_path else None
        if self.model_path and self.model_path.exists():
            self.model: MdpModel = restore(self.model_path.read_text("utf-8"))
        else:
            self.model = seed(examples)
        self.model_lock = threading.Lock()
        self.sessions: dict[str, Session] = {}
        self.sessions_lock = threading.Lock()
        self.event_log_path = pathlib.Path(event_log_path) if event_log_path else None
        self._stop_saver = threading.Event()
        self._saver: threading.Thread | None = None
        if self.model_path and model_save_interval:
            self._saver = threading.Thread(
                target=self._save_periodically, args=(model_save_interval,), daemon=True
            )
            self._saver.start()

    # --- model ---

    def save_model(self) -> None:
        if self.model_path:
            with self.model_lock:
                blob = persist(self.model)
            self.model_path.parent.mkdir(parents=True, exist_ok=True)
            self.model_path.write_text(blob, encoding="utf-8")

    def _save_periodically(self, interval: float) -> None:
        while not self._stop_saver.wait(interval):
            self.save_model()

    def shutdown(self) -> None:
        self._stop_saver.set()
        self.save_model()

    def _feedback(
        self,
        session: Session,
        state: frozenset[InteractionType],
        interaction: InteractionType | None,
        reaction: Reaction,
    ) -> bool:
        """Serialized model update; returns False when the edge is unknown."""
        viz_key = session.viz.value if session.viz else None
        try:
            with self.model_lock:
                record_feedback(self.model, state, interaction, reaction, viz_key)
            return True
        except NotRecommended:
            return False

    # --- events ---

    def log(self, session: Session, kind: str, payload: dict) -> None:
        event = SessionEvent(ts=time.time(), session=session.id, kind=kind, payload=payload)
        session.events.append(event)
        if self.event_log_path:
            with self.event_log_path.open("a", encoding="utf-8") as handle:
                handle.write(json.dumps(event.to_dict()) + "\n")

    # --- session operations ---

    def create_session(self, name: str, format: str, data: str) -> Session:
        dataset = load_dataset(data, format, name=name)
        session = Session(id=uuid.uuid4().hex[:12], dataset=dataset)
        with self.sessions_lock:
            self.sessions[session.id] = session
        self.log(session, "created", {"dataset": name, "rows": len(dataset.rows)})
        return session

    def get(self, session_id: str) -> Session:
        try:
            return self.sessions[session_id]
        except KeyError:
            raise LookupError(session_id) from None

    def select_template(self, session: Session, viz: VizType) -> FittedProgram:
        with session.lock:
            template = self.library.get_viz_template(viz)
            binding = select_attributes(session.dataset, viz)
            fitted = fit_template(template, session.dataset, binding, data_url=session.data_url)
            session.source = fitted.source
            session.viz = viz
            session.state = frozenset()
            session.history = SessionHistory()
            session.fitted = fitted
            session.fitted_source = fitted.source
            session.classification_stale = False
            session.last_recommendations = None
            self.log(session, "template_selected", {"viz": viz.value})
            self.log(session, "fitted", {"binding": fitted.binding.slots, "dropped": fitted.dropped_rows})
            return fitted

    def recommendations(self, session: Session) -> list[Recommendation]:
        with session.lock:
            if session.viz is None:
                raise UnknownVizType(
                    "session has no visualization type; select a template or classify the output"
                )
            with self.model_lock:
                recs = recommend(self.model, session.state, session.viz)
            session.last_recommendations = recs
            self.log(
                session,
                "recommended",
                {"interactions": [r.interaction.value for r in recs]},
            )
            return recs

    def accept(self, session: Session, interaction: InteractionType):
        with session.lock:
            if session.source is None or session.viz is None:
                raise UnknownVizType("session has no program to augment yet")
            prior_state = session.state
            result = augment(session.source, interaction, session.viz, prior_state)
            session.history.push(session.source, prior_state, interaction)
            session.source = result.source
            session.state = result.new_state
            recommended = session.last_recommendations or []
            if any(r.interaction is interaction for r in recommended):
                self._feedback(session, prior_state, interaction, Reaction.ACCEPT)
            session.last_recommendations = None
            self.log(session, "accept", {"interaction": interaction.value})
            return result

    def undo(self, session: Session) -> Session:
        with session.lock:
            entry = session.history.undo()
            session.source = entry.source
            session.state = entry.state
            self._feedback(session, entry.state, entry.interaction, Reaction.UNDO)
            session.last_recommendations = None
            self.log(session, "undo", {"interaction": entry.interaction.value})
            return session

    def ignore(self, session: Session) -> None:
        with session.lock:
            recs = session.last_recommendations or []
            top = recs[0].interaction if recs else None
            self._feedback(session, session.state, top, Reaction.IGNORE)
            self.log(
                session,
                "ignore",
                {"interactions": [r.interaction.value for r in recs]},
            )

    def set_source(self, session: Session, source: str) -> Session:
        with session.lock:
            session.source = source
            session.state = frozenset()
            session.history = SessionHistory()
            session.fitted_source = source
            session.classification_stale = True
            session.last_recommendations = None
            self.log(session, "edit", {"bytes": len(source)})
            return session

    def classify_svg(self, session: Session, svg: str) -> Classification:
        with session.lock:
            result = classify(extract_features(svg))
            session.viz = result.viz
            session.classification_stale = False
            self.log(
                session,
                "classify",
                {"viz": result.viz.value if result.viz else "unknown", "confidence": result.confidence},
            )
            return result

    def export(self, session: Session, svg: str | None = None) -> list[dict]:
        with session.lock:
            if session.source is None:
                raise UnknownVizType("session has no program to export")
            script = session.source.replace(f'"{session.data_url}"', '"data.csv"')
            files = [
                {"name": "chart.js", "content": script},
                {"name": "data.csv", "content": session.dataset.to_csv()},
            ]
            if svg:
                files.append({"name": "chart.svg", "content": svg})
            recs = session.last_recommendations or []
            top = recs[0].interaction if recs else None
            if top is not None:
                self._feedback(session, session.state, top, Reaction.EXPORT)
            self.log(session, "export", {"files": [f["name"] for f in files]})
            return files
