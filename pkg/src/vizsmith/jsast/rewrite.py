"""Persistent tree rewriting.

Rewrites return a new Ast and never mutate the input; untouched subtrees are
shared between the old and new trees, so a history of prior versions stays
cheap. Rebuilt spine nodes and inserted nodes carry no span (they are
synthesized relative to the original text).
"""

from __future__ import annotations

from typing import Iterable, Literal

from ..errors import TargetNotInTree
from .nodes import Ast, Node, NodeKind

RewriteMode = Literal["prepend", "replace", "append"]


def _path_to(ast: Ast, target: Node) -> list[Node]:
    if not ast.contains(target):
        raise TargetNotInTree("rewrite target is not part of the tree")
    path = [target]
    parent = ast.parent_of(target)
    while parent is not None:
        path.append(parent)
        parent = ast.parent_of(parent)
    path.reverse()  # root .. target
    return path


def _rebuild(path: list[Node], new_children_of_last_parent: tuple[Node, ...]) -> Node:
    """Rebuild the spine root..parent with the parent's children replaced."""
    parent = path[-1]
    rebuilt = parent.with_children(new_children_of_last_parent)
    for ancestor, child in zip(reversed(path[:-1]), reversed(path[1:])):
        children = tuple(rebuilt if c is child else c for c in ancestor.children)
        rebuilt = ancestor.with_children(children)
    return rebuilt


def rewrite(
    ast: Ast,
    target: Node,
    replacement: Node | Iterable[Node],
    mode: RewriteMode = "replace",
) -> Ast:
    """Insert or substitute a subtree at ``target``.

    ``replace`` swaps the target for the replacement in place. ``prepend``
    and ``append`` insert the replacement (a statement, or several) into the
    statement list around the statement enclosing the target.
    """
    if mode == "replace":
        if not isinstance(replacement, Node):
            raise ValueError("replace mode takes a single replacement node")
        path = _path_to(ast, target)
        if len(path) == 1:
            return Ast(root=replacement, source=None)
        parent = path[-2]
        children = tuple(replacement if c is target else c for c in parent.children)
        new_root = _rebuild(path[:-1], children)
        return Ast(root=new_root, source=None)

    inserted = (replacement,) if isinstance(replacement, Node) else tuple(replacement)
    if not ast.contains(target):
        raise TargetNotInTree("rewrite target is not part of the tree")
    stmt = ast.statement_of(target)
    parent = ast.parent_of(stmt)
    if parent is None:
        # Target is the root program itself; treat its child list directly.
        raise TargetNotInTree("cannot insert relative to the program root")
    index = next(i for i, c in enumerate(parent.children) if c is stmt)
    if mode == "prepend":
        children = parent.children[:index] + inserted + parent.children[index:]
    elif mode == "append":
        children = parent.children[: index + 1] + inserted + parent.children[index + 1 :]
    else:
        raise ValueError(f"unknown rewrite mode: {mode}")
    path = _path_to(ast, parent)
    new_root = _rebuild(path, children)
    return Ast(root=new_root, source=None)
