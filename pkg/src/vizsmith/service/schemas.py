"""Request and response bodies for the /v1 API."""

from __future__ import annotations

from pydantic import BaseModel, Field


class CreateSessionRequest(BaseModel):
    name: str = "dataset"
    format: str = Field("csv", pattern="^(csv|json)$")
    data: str


class AttributeOut(BaseModel):
    name: str
    type: str
    distinct_count: int
    null_count: int


class SessionOut(BaseModel):
    id: str
    dataset_name: str
    attributes: list[AttributeOut]
    row_count: int
    viz: str | None
    state: list[str]
    source: str | None
    can_undo: bool
    classification_stale: bool


class SelectTemplateRequest(BaseModel):
    viz: str


class FitOut(BaseModel):
    source: str
    viz: str
    binding: dict[str, str]
    scales: dict[str, str]
    dropped_rows: int


class RecommendationOut(BaseModel):
    interaction: str
    score: float
    rank: int
    summary: str


class RecommendationsOut(BaseModel):
    viz: str
    state: list[str]
    recommendations: list[RecommendationOut]


class AcceptRequest(BaseModel):
    interaction: str


class AugmentOut(BaseModel):
    source: str
    inserted_ranges: list[tuple[int, int]]
    summary: str
    state: list[str]


class UndoOut(BaseModel):
    source: str
    state: list[str]


class FeedbackRequest(BaseModel):
    reaction: str = Field(pattern="^ignore$")


class SetSourceRequest(BaseModel):
    source: str


class ClassifyRequest(BaseModel):
    svg: str


class ClassifyOut(BaseModel):
    viz: str
    confidence: float


class ExportRequest(BaseModel):
    svg: str | None = None


class FileOut(BaseModel):
    name: str
    content: str


class ExportOut(BaseModel):
    files: list[FileOut]


class EventOut(BaseModel):
    ts: float
    session: str
    kind: str
    payload: dict


class ErrorOut(BaseModel):
    code: str
    message: str
    detail: dict = Field(default_factory=dict)
