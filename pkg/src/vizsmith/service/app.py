"""HTTP surface over the engine: sessions, fitting, recommendations,
augmentation, classification, export, and event logs."""

from __future__ import annotations

import os
from contextlib import asynccontextmanager

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, PlainTextResponse

from ..errors import VizsmithError
from ..templates import InteractionType, VizType, interaction_from_name, viz_from_name
from .engine import MAX_UPLOAD_BYTES, Engine, Session
from . import schemas


def _session_out(session: Session) -> schemas.SessionOut:
    return schemas.SessionOut(
        id=session.id,
        dataset_name=session.dataset.name,
        attributes=[
            schemas.AttributeOut(
                name=a.name,
                type=a.inferred_type.value,
                distinct_count=a.distinct_count,
                null_count=a.null_count,
            )
            for a in session.dataset.attributes
        ],
        row_count=len(session.dataset.rows),
        viz=session.viz.value if session.viz else None,
        state=sorted(i.value for i in session.state),
        source=session.source,
        can_undo=session.history.depth > 0,
        classification_stale=session.classification_stale,
    )


def create_app(
    corpus_path: str | None = None,
    model_path: str | None = None,
    event_log_path: str | None = None,
) -> FastAPI:
    corpus_path = corpus_path or os.environ.get("VIZSMITH_CORPUS")
    model_path = model_path or os.environ.get("VIZSMITH_MODEL_PATH")
    event_log_path = event_log_path or os.environ.get("VIZSMITH_EVENT_LOG")
    interval_text = os.environ.get("VIZSMITH_MODEL_SAVE_INTERVAL")
    engine = Engine(
        corpus_path=corpus_path,
        model_path=model_path,
        event_log_path=event_log_path,
        model_save_interval=float(interval_text) if interval_text else None,
    )

    @asynccontextmanager
    async def lifespan(app: FastAPI):
        yield
        engine.shutdown()

    app = FastAPI(title="vizsmith", version="0.1.0", lifespan=lifespan)
    app.state.engine = engine

    @app.exception_handler(VizsmithError)
    async def engine_error(request: Request, exc: VizsmithError):
        return JSONResponse(status_code=422, content=exc.to_dict())

    @app.exception_handler(LookupError)
    async def not_found(request: Request, exc: LookupError):
        return JSONResponse(
            status_code=404,
            content={"code": "SessionNotFound", "message": f"no session {exc}", "detail": {}},
        )

    @app.post("/v1/sessions", response_model=schemas.SessionOut, status_code=201)
    def create_session(body: schemas.CreateSessionRequest):
        if len(body.data.encode("utf-8")) > MAX_UPLOAD_BYTES:
            return JSONResponse(
                status_code=413,
                content={
                    "code": "PayloadTooLarge",
                    "message": f"dataset exceeds {MAX_UPLOAD_BYTES} bytes",
                    "detail": {},
                },
            )
        session = engine.create_session(body.name, body.format, body.data)
        return _session_out(session)

    @app.get("/v1/sessions/{session_id}", response_model=schemas.SessionOut)
    def get_session(session_id: str):
        return _session_out(engine.get(session_id))

    @app.get("/v1/sessions/{session_id}/data")
    def get_data(session_id: str):
        session = engine.get(session_id)
        return PlainTextResponse(session.dataset.to_csv(), media_type="text/csv")

    @app.post("/v1/sessions/{session_id}/template", response_model=schemas.FitOut)
    def select_template(session_id: str, body: schemas.SelectTemplateRequest):
        session = engine.get(session_id)
        fitted = engine.select_template(session, viz_from_name(body.viz))
        return schemas.FitOut(
            source=fitted.source,
            viz=fitted.viz.value,
            binding=fitted.binding.slots,
            scales=fitted.binding.scales,
            dropped_rows=fitted.dropped_rows,
        )

    @app.get(
        "/v1/sessions/{session_id}/recommendations",
        response_model=schemas.RecommendationsOut,
    )
    def get_recommendations(session_id: str):
        session = engine.get(session_id)
        recs = engine.recommendations(session)
        return schemas.RecommendationsOut(
            viz=session.viz.value,
            state=sorted(i.value for i in session.state),
            recommendations=[
                schemas.RecommendationOut(
                    interaction=r.interaction.value,
                    score=r.score,
                    rank=r.rank,
                    summary=engine.library.interaction_summaries[r.interaction],
                )
                for r in recs
            ],
        )

    @app.post("/v1/sessions/{session_id}/accept", response_model=schemas.AugmentOut)
    def accept(session_id: str, body: schemas.AcceptRequest):
        session = engine.get(session_id)
        result = engine.accept(session, interaction_from_name(body.interaction))
        return schemas.AugmentOut(
            source=result.source,
            inserted_ranges=result.inserted_ranges,
            summary=result.summary,
            state=sorted(i.value for i in result.new_state),
        )

    @app.post("/v1/sessions/{session_id}/undo", response_model=schemas.UndoOut)
    def undo(session_id: str):
        session = engine.get(session_id)
        engine.undo(session)
        return schemas.UndoOut(
            source=session.source, state=sorted(i.value for i in session.state)
        )

    @app.post("/v1/sessions/{session_id}/feedback")
    def feedback(session_id: str, body: schemas.FeedbackRequest):
        session = engine.get(session_id)
        engine.ignore(session)
        return {"ok": True}

    @app.put("/v1/sessions/{session_id}/source", response_model=schemas.SessionOut)
    def set_source(session_id: str, body: schemas.SetSourceRequest):
        session = engine.get(session_id)
        engine.set_source(session, body.source)
        return _session_out(session)

    @app.post("/v1/sessions/{session_id}/classify", response_model=schemas.ClassifyOut)
    def classify_svg(session_id: str, body: schemas.ClassifyRequest):
        session = engine.get(session_id)
        result = engine.classify_svg(session, body.svg)
        return schemas.ClassifyOut(
            viz=result.viz.value if result.viz else "unknown",
            confidence=result.confidence,
        )

    @app.post("/v1/sessions/{session_id}/export", response_model=schemas.ExportOut)
    def export(session_id: str, body: schemas.ExportRequest | None = None):
        session = engine.get(session_id)
        files = engine.export(session, svg=body.svg if body else None)
        return schemas.ExportOut(files=[schemas.FileOut(**f) for f in files])

    @app.get("/v1/sessions/{session_id}/events", response_model=list[schemas.EventOut])
    def get_events(session_id: str):
        session = engine.get(session_id)
        return [schemas.EventOut(**e.to_dict()) for e in session.events]

    @app.get("/v1/meta")
    def meta():
        return {
            "version": app.version,
            "viz_types": [v.value for v in VizType],
            "interactions": [i.value for i in InteractionType],
        }

    return app
