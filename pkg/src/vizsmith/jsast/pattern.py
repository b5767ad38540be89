"""Structural search over parsed trees.

Patterns describe method-chain shapes: a chain suffix (the given links end a
chain at the matched node) or a contained link run (the matched node is the
head of a maximal chain containing the links). Literal argument constraints
compare string and numeric literals by value. Matches come back in document
order and matching is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .nodes import Ast, Node, NodeKind
from .printer import decompose_chain


@dataclass(frozen=True)
class ChainLink:
    method: str
    # Literal constraints for leading arguments; None entries match anything.
    args: tuple[str | int | float | None, ...] = ()

    def matches(self, name: str, call_args: tuple[Node, ...]) -> bool:
        if name != self.method:
            return False
        if len(call_args) < len(self.args):
            return False
        for constraint, arg in zip(self.args, call_args):
            if constraint is None:
                continue
            if isinstance(constraint, str):
                if arg.kind is not NodeKind.STRING_LITERAL or arg.token != constraint:
                    return False
            else:
                if arg.kind is not NodeKind.NUMBER_LITERAL:
                    return False
                if float(arg.token) != float(constraint):
                    return False
        return True


@dataclass(frozen=True)
class NodePattern:
    kind: NodeKind | None = None
    chain_suffix: tuple[ChainLink, ...] = ()
    chain_contains: tuple[ChainLink, ...] = ()
    head: bool = False

    @classmethod
    def from_dict(cls, data: dict) -> "NodePattern":
        def links(key: str) -> tuple[ChainLink, ...]:
            return tuple(
                ChainLink(entry["method"], tuple(entry.get("args", ())))
                for entry in data.get(key, ())
            )

        kind = NodeKind(data["kind"]) if "kind" in data else None
        return cls(
            kind=kind,
            chain_suffix=links("chain_suffix"),
            chain_contains=links("chain_contains"),
            head=bool(data.get("head", False)),
        )

    def _links_of(self, node: Node) -> list[tuple[str, tuple[Node, ...]]] | None:
        if node.kind is not NodeKind.CALL_EXPRESSION:
            return None
        base, links = decompose_chain(node)
        if not links:
            return None
        return [(name, args) for name, args, _ in links]

    def matches(self, node: Node, ast: Ast) -> bool:
        if self.kind is not None and node.kind is not self.kind:
            return False
        if not self.chain_suffix and not self.chain_contains and not self.head:
            return self.kind is not None and node.kind is self.kind
        links = self._links_of(node)
        if links is None:
            return False
        if self.head and not _is_chain_head(node, ast):
            return False
        if self.chain_suffix:
            k = len(self.chain_suffix)
            if len(links) < k:
                return False
            tail = links[-k:]
            if not all(p.matches(n, a) for p, (n, a) in zip(self.chain_suffix, tail)):
                return False
        if self.chain_contains:
            if not _contains_run(links, self.chain_contains):
                return False
        return True


def _is_chain_head(node: Node, ast: Ast) -> bool:
    """True when no enclosing member call extends this chain upward."""
    parent = ast.parent_of(node)
    if parent is None:
        return True
    if parent.kind is NodeKind.MEMBER_EXPRESSION and parent.children[0] is node:
        grand = ast.parent_of(parent)
        if (
            grand is not None
            and grand.kind is NodeKind.CALL_EXPRESSION
            and grand.children[0] is parent
        ):
            return False
    return True


def _contains_run(
    links: list[tuple[str, tuple[Node, ...]]], run: tuple[ChainLink, ...]
) -> bool:
    k = len(run)
    for i in range(len(links) - k + 1):
        if all(p.matches(n, a) for p, (n, a) in zip(run, links[i : i + k])):
            return True
    return False


def find(ast: Ast, pattern: NodePattern) -> list[Node]:
    """All nodes matching ``pattern`` in document order; [] when none."""
    matches: list[Node] = []
    for node in ast.root.walk():
        if pattern.matches(node, ast):
            matches.append(node)
    return matches
