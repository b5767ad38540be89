"""Tree model for the supported scripting-language subset.

Nodes are immutable; rewriting builds new trees that share untouched
subtrees. ``span`` records the half-open offset range of the node in the
text it was parsed from and is ``None`` for synthesized nodes. Spans are
excluded from equality so that reparsing printed output yields trees equal
to the original.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Iterator


class NodeKind(enum.Enum):
    PROGRAM = "Program"
    VARIABLE_DECLARATION = "VariableDeclaration"
    EXPRESSION_STATEMENT = "ExpressionStatement"
    RETURN_STATEMENT = "ReturnStatement"
    BLOCK_STATEMENT = "BlockStatement"
    CALL_EXPRESSION = "CallExpression"
    MEMBER_EXPRESSION = "MemberExpression"
    IDENTIFIER = "Identifier"
    STRING_LITERAL = "StringLiteral"
    NUMBER_LITERAL = "NumberLiteral"
    BOOLEAN_LITERAL = "BooleanLiteral"
    ARROW_FUNCTION = "ArrowFunction"
    FUNCTION_EXPRESSION = "FunctionExpression"
    OBJECT_LITERAL = "ObjectLiteral"
    ARRAY_LITERAL = "ArrayLiteral"
    PROPERTY = "Property"
    BINARY_EXPRESSION = "BinaryExpression"
    UNARY_EXPRESSION = "UnaryExpression"
    CONDITIONAL_EXPRESSION = "ConditionalExpression"
    COMMENT = "Comment"
    PLACEHOLDER = "Placeholder"


# Identifier spelling that the parser turns into a Placeholder node.
PLACEHOLDER_RE = re.compile(r"^__([A-Z][A-Z0-9_]*?)__$")

# Marker for slot references embedded in string literals and comments.
SLOT_PATTERN_RE = re.compile(r"__([A-Z][A-Z0-9_]*?)__")

COMPUTED = "computed"

_STATEMENT_KINDS = frozenset(
    {
        NodeKind.VARIABLE_DECLARATION,
        NodeKind.EXPRESSION_STATEMENT,
        NodeKind.RETURN_STATEMENT,
        NodeKind.COMMENT,
    }
)


@dataclass(frozen=True)
class Node:
    kind: NodeKind
    token: str | None = None
    children: tuple["Node", ...] = ()
    span: tuple[int, int] | None = field(default=None, compare=False)

    def with_children(self, children: tuple["Node", ...]) -> "Node":
        # Rebuilt nodes are synthesized: the original span no longer applies.
        return Node(self.kind, self.token, children, None)

    @property
    def is_statement(self) -> bool:
        return self.kind in _STATEMENT_KINDS

    def walk(self) -> Iterator["Node"]:
        """Pre-order traversal (document order)."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def __repr__(self) -> str:  # compact, debugging-oriented
        tok = f"({self.token!r})" if self.token is not None else ""
        return f"{self.kind.value}{tok}[{len(self.children)}]"


@dataclass
class Ast:
    """A parsed program plus the text it came from.

    ``source`` is ``None`` for trees produced by rewriting.
    """

    root: Node
    source: str | None = None
    _parents: dict[int, Node] | None = field(default=None, repr=False)

    def parents(self) -> dict[int, Node]:
        if self._parents is None:
            parents: dict[int, Node] = {}
            for node in self.root.walk():
                for child in node.children:
                    parents[id(child)] = node
            self._parents = parents
        return self._parents

    def parent_of(self, node: Node) -> Node | None:
        return self.parents().get(id(node))

    def contains(self, node: Node) -> bool:
        if node is self.root:
            return True
        return id(node) in self.parents()

    def source_map(self) -> dict[int, tuple[int, int]]:
        """Offset ranges into the original text, keyed by node identity.

        Synthesized nodes (span ``None``) are omitted.
        """
        return {id(n): n.span for n in self.root.walk() if n.span is not None}

    def statement_of(self, node: Node) -> Node:
        """The enclosing child of the nearest statement list."""
        current = node
        parent = self.parent_of(current)
        while parent is not None and parent.kind not in (
            NodeKind.PROGRAM,
            NodeKind.BLOCK_STATEMENT,
        ):
            current = parent
            parent = self.parent_of(current)
        return current


def structural_equal(a: Node, b: Node) -> bool:
    """Equality over (kind, token, children), ignoring spans."""
    return a == b


# --- builders for synthesized subtrees ---------------------------------------

def ident(name: str) -> Node:
    return Node(NodeKind.IDENTIFIER, name)


def string(value: str) -> Node:
    return Node(NodeKind.STRING_LITERAL, value)


def number(value: float | int | str) -> Node:
    text = value if isinstance(value, str) else repr(value)
    return Node(NodeKind.NUMBER_LITERAL, text)


def boolean(value: bool) -> Node:
    return Node(NodeKind.BOOLEAN_LITERAL, "true" if value else "false")


def placeholder(slot: str) -> Node:
    return Node(NodeKind.PLACEHOLDER, slot)


def member(obj: Node, prop: str) -> Node:
    return Node(NodeKind.MEMBER_EXPRESSION, None, (obj, ident(prop)))


def computed_member(obj: Node, index: Node) -> Node:
    return Node(NodeKind.MEMBER_EXPRESSION, COMPUTED, (obj, index))


def call(callee: Node, *args: Node) -> Node:
    return Node(NodeKind.CALL_EXPRESSION, None, (callee, *args))


def method_call(obj: Node, name: str, *args: Node) -> Node:
    return call(member(obj, name), *args)


def arrow(params: list[str], body: Node) -> Node:
    return Node(NodeKind.ARROW_FUNCTION, None, (*map(ident, params), body))


def array(*items: Node) -> Node:
    return Node(NodeKind.ARRAY_LITERAL, None, items)


def binary(op: str, left: Node, right: Node) -> Node:
    return Node(NodeKind.BINARY_EXPRESSION, op, (left, right))


def unary(op: str, operand: Node) -> Node:
    return Node(NodeKind.UNARY_EXPRESSION, op, (operand,))


def expression_statement(expr: Node) -> Node:
    return Node(NodeKind.EXPRESSION_STATEMENT, None, (expr,))


def const_declaration(name: str, init: Node) -> Node:
    return Node(NodeKind.VARIABLE_DECLARATION, "const", (ident(name), init))


def comment(text: str) -> Node:
    return Node(NodeKind.COMMENT, text)
