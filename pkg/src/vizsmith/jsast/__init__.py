"""Parsing, printing, search and rewriting for the scripting-language subset."""

from .lexer import tokenize
from .nodes import (
    COMPUTED,
    Ast,
    Node,
    NodeKind,
    PLACEHOLDER_RE,
    SLOT_PATTERN_RE,
    structural_equal,
)
from .parser import parse
from .pattern import ChainLink, NodePattern, find
from .printer import decompose_chain, print_source
from .rewrite import rewrite

__all__ = [
    "Ast",
    "ChainLink",
    "COMPUTED",
    "Node",
    "NodeKind",
    "NodePattern",
    "PLACEHOLDER_RE",
    "SLOT_PATTERN_RE",
    "decompose_chain",
    "find",
    "parse",
    "print_source",
    "rewrite",
    "structural_equal",
    "tokenize",
]
