"""Deterministic source printer.

Formatting rules: two-space indent, one statement per line, statements
terminated with ';', method chains broken one call per line once a chain
grows past two links (the first link stays with its base), block-bodied
function arguments expand in place. Equal trees always print to identical
bytes.
"""

from __future__ import annotations

from ..errors import PlaceholderRemaining
from .nodes import COMPUTED, Ast, Node, NodeKind

_INDENT = "  "

_PREC_CONDITIONAL = 1
_PREC_UNARY = 8
_PREC_POSTFIX = 9
_PREC_PRIMARY = 10

_BINARY_PREC = {
    "||": 2,
    "&&": 3,
    "===": 4, "!==": 4, "==": 4, "!=": 4,
    "<": 5, ">": 5, "<=": 5, ">=": 5,
    "+": 6, "-": 6,
    "*": 7, "/": 7, "%": 7,
}


def _prec(node: Node) -> int:
    if node.kind is NodeKind.CONDITIONAL_EXPRESSION:
        return _PREC_CONDITIONAL
    if node.kind is NodeKind.ARROW_FUNCTION:
        return _PREC_CONDITIONAL
    if node.kind is NodeKind.BINARY_EXPRESSION:
        return _BINARY_PREC[node.token]
    if node.kind is NodeKind.UNARY_EXPRESSION:
        return _PREC_UNARY
    if node.kind in (NodeKind.CALL_EXPRESSION, NodeKind.MEMBER_EXPRESSION):
        return _PREC_POSTFIX
    return _PREC_PRIMARY


def _quote(value: str) -> str:
    out = value.replace("\\", "\\\\").replace('"', '\\"')
    out = out.replace("\n", "\\n").replace("\t", "\\t").replace("\r", "\\r")
    return f'"{out}"'


def decompose_chain(node: Node) -> tuple[Node, list[tuple[str, tuple[Node, ...], Node]]]:
    """Split a member-call chain into (base, [(method, args, call_node), ...]).

    Only dotted method calls count as links; computed access and plain calls
    terminate the chain.
    """
    links: list[tuple[str, tuple[Node, ...], Node]] = []
    current = node
    while (
        current.kind is NodeKind.CALL_EXPRESSION
        and current.children[0].kind is NodeKind.MEMBER_EXPRESSION
        and current.children[0].token != COMPUTED
        and current.children[0].children[1].kind is NodeKind.IDENTIFIER
    ):
        callee = current.children[0]
        links.append((callee.children[1].token, current.children[1:], current))
        current = callee.children[0]
    links.reverse()
    return current, links


class _Printer:
    def __init__(self, allow_placeholders: bool):
        self.allow_placeholders = allow_placeholders

    def program(self, root: Node) -> str:
        lines = [self.statement(stmt, 0) for stmt in root.children]
        return "\n".join(lines) + ("\n" if lines else "")

    def statement(self, node: Node, indent: int) -> str:
        pad = _INDENT * indent
        if node.kind is NodeKind.COMMENT:
            return pad + node.token
        if node.kind is NodeKind.VARIABLE_DECLARATION:
            name, init = node.children
            return f"{pad}{node.token} {self.expr(name, indent)} = {self.expr(init, indent)};"
        if node.kind is NodeKind.EXPRESSION_STATEMENT:
            return f"{pad}{self.expr(node.children[0], indent)};"
        if node.kind is NodeKind.RETURN_STATEMENT:
            if node.children:
                return f"{pad}return {self.expr(node.children[0], indent)};"
            return f"{pad}return;"
        raise ValueError(f"not a statement node: {node.kind}")

    def block(self, node: Node, indent: int) -> str:
        if not node.children:
            return "{}"
        inner = "\n".join(self.statement(s, indent + 1) for s in node.children)
        return "{\n" + inner + "\n" + _INDENT * indent + "}"

    def expr(self, node: Node, indent: int) -> str:
        kind = node.kind
        if kind is NodeKind.IDENTIFIER:
            return node.token
        if kind is NodeKind.PLACEHOLDER:
            if not self.allow_placeholders:
                raise PlaceholderRemaining(node.token)
            return f"__{node.token}__"
        if kind is NodeKind.NUMBER_LITERAL or kind is NodeKind.BOOLEAN_LITERAL:
            return node.token
        if kind is NodeKind.STRING_LITERAL:
            return _quote(node.token)
        if kind is NodeKind.ARRAY_LITERAL:
            return "[" + ", ".join(self.expr(c, indent) for c in node.children) + "]"
        if kind is NodeKind.OBJECT_LITERAL:
            if not node.children:
                return "{}"
            parts = []
            for prop in node.children:
                key, value = prop.children
                key_text = key.token if key.kind is NodeKind.IDENTIFIER else _quote(key.token)
                parts.append(f"{key_text}: {self.expr(value, indent)}")
            return "{ " + ", ".join(parts) + " }"
        if kind is NodeKind.MEMBER_EXPRESSION:
            return self.member(node, indent)
        if kind is NodeKind.CALL_EXPRESSION:
            return self.call(node, indent)
        if kind is NodeKind.ARROW_FUNCTION:
            return self.arrow(node, indent)
        if kind is NodeKind.FUNCTION_EXPRESSION:
            *params, body = node.children
            heads = ", ".join(self.expr(p, indent) for p in params)
            return f"function({heads}) " + self.block(body, indent)
        if kind is NodeKind.UNARY_EXPRESSION:
            operand = node.children[0]
            text = self.expr(operand, indent)
            if _prec(operand) < _PREC_UNARY or operand.kind is NodeKind.UNARY_EXPRESSION:
                text = f"({text})"
            return node.token + text
        if kind is NodeKind.BINARY_EXPRESSION:
            my = _BINARY_PREC[node.token]
            left, right = node.children
            left_text = self.expr(left, indent)
            if _prec(left) < my:
                left_text = f"({left_text})"
            right_text = self.expr(right, indent)
            if _prec(right) <= my:
                right_text = f"({right_text})"
            return f"{left_text} {node.token} {right_text}"
        if kind is NodeKind.CONDITIONAL_EXPRESSION:
            test, cons, alt = node.children
            test_text = self.expr(test, indent)
            if _prec(test) <= _PREC_CONDITIONAL:
                test_text = f"({test_text})"
            cons_text = self.expr(cons, indent)
            if cons.kind is NodeKind.CONDITIONAL_EXPRESSION:
                cons_text = f"({cons_text})"
            alt_text = self.expr(alt, indent)
            return f"{test_text} ? {cons_text} : {alt_text}"
        raise ValueError(f"not an expression node: {node.kind}")

    def arrow(self, node: Node, indent: int) -> str:
        *params, body = node.children
        if len(params) == 1 and params[0].kind is NodeKind.IDENTIFIER:
            head = self.expr(params[0], indent)
        else:
            head = "(" + ", ".join(self.expr(p, indent) for p in params) + ")"
        if body.kind is NodeKind.BLOCK_STATEMENT:
            return f"{head} => " + self.block(body, indent)
        body_text = self.expr(body, indent)
        if body.kind is NodeKind.OBJECT_LITERAL:
            body_text = f"({body_text})"
        return f"{head} => {body_text}"

    def member(self, node: Node, indent: int) -> str:
        obj, prop = node.children
        obj_text = self.expr(obj, indent)
        if _prec(obj) < _PREC_POSTFIX:
            obj_text = f"({obj_text})"
        if node.token == COMPUTED:
            return f"{obj_text}[{self.expr(prop, indent)}]"
        return f"{obj_text}.{self.expr(prop, indent)}"

    def call(self, node: Node, indent: int) -> str:
        base, links = decompose_chain(node)
        if len(links) > 2:
            base_text = self.expr(base, indent)
            if _prec(base) < _PREC_POSTFIX:
                base_text = f"({base_text})"
            first = links[0]
            parts = [base_text + "." + self.link(first, indent)]
            pad = "\n" + _INDENT * (indent + 1)
            for link in links[1:]:
                parts.append(pad + "." + self.link(link, indent + 1))
            return "".join(parts)
        if links:
            base_text = self.expr(base, indent)
            if _prec(base) < _PREC_POSTFIX:
                base_text = f"({base_text})"
            return base_text + "".join("." + self.link(link, indent) for link in links)
        callee = node.children[0]
        callee_text = self.expr(callee, indent)
        if _prec(callee) < _PREC_POSTFIX:
            callee_text = f"({callee_text})"
        args = ", ".join(self.expr(a, indent) for a in node.children[1:])
        return f"{callee_text}({args})"

    def link(self, link: tuple[str, tuple[Node, ...], Node], indent: int) -> str:
        name, args, _ = link
        arg_text = ", ".join(self.expr(a, indent) for a in args)
        return f"{name}({arg_text})"


def print_source(ast: Ast | Node, allow_placeholders: bool = False) -> str:
    """Print a tree back to source text.

    Raises PlaceholderRemaining when the tree still carries Placeholder nodes
    unless ``allow_placeholders`` is set (used for inspecting raw templates).
    """
    root = ast.root if isinstance(ast, Ast) else ast
    if not allow_placeholders:
        for node in root.walk():
            if node.kind is NodeKind.PLACEHOLDER:
                raise PlaceholderRemaining(node.token)
    return _Printer(allow_placeholders).program(root)
