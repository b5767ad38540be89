"""Error hierarchy shared across the engine.

Every error carries a stable machine-readable ``code`` that the HTTP layer
and the CLI surface verbatim, so clients can dispatch without parsing
messages.
"""

from __future__ import annotations

from typing import Any


class VizsmithError(Exception):
    """Base class for all engine errors."""

    code = "VizsmithError"

    def __init__(self, message: str, **detail: Any):
        super().__init__(message)
        self.message = message
        self.detail = detail

    def to_dict(self) -> dict[str, Any]:
        return {"code": self.code, "message": self.message, "detail": self.detail}


# --- source parsing ---------------------------------------------------------

class SourceSyntaxError(VizsmithError):
    code = "SyntaxError"

    def __init__(self, message: str, line: int, col: int, lexeme: str = ""):
        super().__init__(message, line=line, col=col, lexeme=lexeme)
        self.line = line
        self.col = col
        self.lexeme = lexeme


class UnsupportedConstruct(VizsmithError):
    code = "UnsupportedConstruct"

    def __init__(self, message: str, line: int = 0, col: int = 0):
        super().__init__(message, line=line, col=col)
        self.line = line
        self.col = col


class PlaceholderRemaining(VizsmithError):
    code = "PlaceholderRemaining"

    def __init__(self, slot: str):
        super().__init__(f"unfilled template slot: {slot}", slot=slot)
        self.slot = slot


class TargetNotInTree(VizsmithError):
    code = "TargetNotInTree"


# --- datasets ----------------------------------------------------------------

class DatasetParseError(VizsmithError):
    code = "ParseError"

    def __init__(self, message: str, row: int | None = None):
        super().__init__(message, row=row)
        self.row = row


class EmptyDataset(VizsmithError):
    code = "EmptyDataset"


class AllValuesMissing(VizsmithError):
    code = "AllValuesMissing"


class NoCompatibleAttribute(VizsmithError):
    code = "NoCompatibleAttribute"

    def __init__(self, slot: str, required: str):
        super().__init__(
            f"no unused attribute satisfies slot {slot!r} (requires {required})",
            slot=slot,
            required=required,
        )
        self.slot = slot
        self.required = required


# --- templates and fitting ---------------------------------------------------

class UnsupportedPair(VizsmithError):
    code = "UnsupportedPair"


class SlotTypeMismatch(VizsmithError):
    code = "SlotTypeMismatch"

    def __init__(self, slot: str, message: str):
        super().__init__(message, slot=slot)
        self.slot = slot


class UnknownAttribute(VizsmithError):
    code = "UnknownAttribute"


# --- augmentation --------------------------------------------------------------

class NoMarkFound(VizsmithError):
    code = "NoMarkFound"


class AnchorNotFound(VizsmithError):
    code = "AnchorNotFound"


class AnchorAmbiguous(VizsmithError):
    code = "AnchorAmbiguous"

    def __init__(self, count: int, locations: list[tuple[int, int]]):
        super().__init__(
            f"anchor pattern matched {count} nodes, expected exactly 1",
            count=count,
            locations=locations,
        )
        self.count = count
        self.locations = locations


class AlreadyImplemented(VizsmithError):
    code = "AlreadyImplemented"


class NothingToUndo(VizsmithError):
    code = "NothingToUndo"


# --- corpus and recommendation --------------------------------------------------

class SchemaError(VizsmithError):
    code = "SchemaError"

    def __init__(self, message: str, row: int | None = None):
        super().__init__(message, row=row)
        self.row = row


class NoViableExamples(VizsmithError):
    code = "NoViableExamples"


class EmptyCorpus(VizsmithError):
    code = "EmptyCorpus"


class UnknownState(VizsmithError):
    code = "UnknownState"


class UnknownVizType(VizsmithError):
    code = "UnknownVizType"


class NotRecommended(VizsmithError):
    code = "NotRecommended"


class CorruptModel(VizsmithError):
    code = "CorruptModel"


# --- classifier ------------------------------------------------------------------

class MalformedSvg(VizsmithError):
    code = "MalformedSvg"
