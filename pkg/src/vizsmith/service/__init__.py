"""HTTP service over the engine."""

from .app import create_app
from .engine import Engine, Session, SessionEvent

__all__ = ["create_app", "Engine", "Session", "SessionEvent"]
