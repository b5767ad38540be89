"""Recursive-descent parser for the supported scripting-language subset.

The subset covers what visualization scaffolding and interaction snippets
need: variable declarations, expression statements, call/member chains,
arrow functions and function expressions, object/array/string/number/boolean
literals, binary, unary and conditional expressions, return statements, and
comments. Anything else raises ``UnsupportedConstruct``.

Comments are kept as first-class statement nodes placed before the statement
they precede. Identifiers spelled ``__NAME__`` become Placeholder nodes.
"""

from __future__ import annotations

from ..errors import SourceSyntaxError, UnsupportedConstruct
from .lexer import UNSUPPORTED_KEYWORDS, Token, tokenize
from .nodes import COMPUTED, PLACEHOLDER_RE, Ast, Node, NodeKind

_EQUALITY = ("===", "!==", "==", "!=")
_RELATIONAL = ("<=", ">=", "<", ">")
_ADDITIVE = ("+", "-")
_MULTIPLICATIVE = ("*", "/", "%")
_UNARY = ("!", "-", "+")


class _Parser:
    def __init__(self, source: str):
        self.source = source
        self.tokens = tokenize(source)
        self.pos = 0

    # --- token helpers ---

    def peek(self, offset: int = 0) -> Token:
        i = self.pos + offset
        while self.tokens[i].kind == "comment":
            i += 1
        return self.tokens[i]

    def peek_raw(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        while self.tokens[self.pos].kind == "comment":
            self.pos += 1
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def at_punct(self, value: str) -> bool:
        tok = self.peek()
        return tok.kind == "punct" and tok.value == value

    def eat_punct(self, value: str) -> Token:
        tok = self.peek()
        if tok.kind != "punct" or tok.value != value:
            raise self.error(f"expected {value!r}", tok)
        return self.advance()

    def error(self, message: str, tok: Token) -> SourceSyntaxError:
        lexeme = tok.value if tok.kind != "eof" else "<eof>"
        return SourceSyntaxError(f"{message}, found {lexeme!r}", tok.line, tok.col, lexeme)

    def unsupported(self, what: str, tok: Token) -> UnsupportedConstruct:
        return UnsupportedConstruct(f"{what} is outside the supported subset", tok.line, tok.col)

    # --- statements ---

    def parse_program(self) -> Node:
        statements = self.parse_statements(end=None)
        end = self.tokens[-1].end
        return Node(NodeKind.PROGRAM, None, tuple(statements), (0, end))

    def parse_statements(self, end: str | None) -> list[Node]:
        statements: list[Node] = []
        while True:
            tok = self.peek_raw()
            if tok.kind == "comment":
                self.pos += 1
                statements.append(
                    Node(NodeKind.COMMENT, tok.value, (), (tok.start, tok.end))
                )
                continue
            tok = self.peek()
            if tok.kind == "eof":
                if end is not None:
                    raise self.error(f"expected {end!r}", tok)
                break
            if end is not None and tok.kind == "punct" and tok.value == end:
                break
            if tok.kind == "punct" and tok.value == ";":
                self.advance()
                continue
            statements.append(self.parse_statement())
        return statements

    def parse_statement(self) -> Node:
        tok = self.peek()
        if tok.kind == "keyword" and tok.value in ("const", "let", "var"):
            return self.parse_declaration()
        if tok.kind == "keyword" and tok.value == "return":
            return self.parse_return()
        if tok.kind == "keyword" and tok.value == "function":
            raise self.unsupported("function declaration statement", tok)
        if tok.kind == "ident" and tok.value in UNSUPPORTED_KEYWORDS:
            raise self.unsupported(f"{tok.value!r} statement", tok)
        start = tok.start
        expr = self.parse_expression()
        if self.at_punct("="):
            raise self.unsupported("assignment expression", self.peek())
        end = self.maybe_semicolon(expr)
        return Node(NodeKind.EXPRESSION_STATEMENT, None, (expr,), (start, end))

    def parse_declaration(self) -> Node:
        kw = self.advance()
        name = self.peek()
        if name.kind != "ident":
            raise self.error("expected identifier after declaration keyword", name)
        self.advance()
        if self.at_punct(","):
            raise self.unsupported("multiple declarators in one declaration", self.peek())
        if not self.at_punct("="):
            raise self.unsupported("declaration without initializer", self.peek())
        self.advance()
        init = self.parse_expression()
        if self.at_punct(","):
            raise self.unsupported("multiple declarators in one declaration", self.peek())
        end = self.maybe_semicolon(init)
        name_node = self.make_identifier(name)
        if name_node.kind is NodeKind.PLACEHOLDER:
            raise self.error("placeholder cannot be declared", name)
        return Node(
            NodeKind.VARIABLE_DECLARATION, kw.value, (name_node, init), (kw.start, end)
        )

    def parse_return(self) -> Node:
        kw = self.advance()
        if self.at_punct(";"):
            end = self.advance().end
            return Node(NodeKind.RETURN_STATEMENT, None, (), (kw.start, end))
        if self.at_punct("}"):
            return Node(NodeKind.RETURN_STATEMENT, None, (), (kw.start, kw.end))
        expr = self.parse_expression()
        end = self.maybe_semicolon(expr)
        return Node(NodeKind.RETURN_STATEMENT, None, (expr,), (kw.start, end))

    def maybe_semicolon(self, last: Node) -> int:
        if self.at_punct(";"):
            return self.advance().end
        return last.span[1] if last.span else self.peek().start

    def parse_block(self) -> Node:
        open_tok = self.eat_punct("{")
        statements = self.parse_statements(end="}")
        close = self.eat_punct("}")
        return Node(
            NodeKind.BLOCK_STATEMENT, None, tuple(statements), (open_tok.start, close.end)
        )

    # --- expressions ---

    def parse_expression(self) -> Node:
        return self.parse_arrow_or_conditional()

    def parse_arrow_or_conditional(self) -> Node:
        tok = self.peek()
        if tok.kind == "ident" and self._punct_at(1, "=>"):
            return self.parse_arrow([tok], tok)
        if tok.kind == "punct" and tok.value == "(" and self._is_arrow_params():
            return self.parse_arrow(None, tok)
        return self.parse_conditional()

    def _punct_at(self, offset: int, value: str) -> bool:
        tok = self.peek(self._skip(offset))
        return tok.kind == "punct" and tok.value == value

    def _skip(self, logical_offset: int) -> int:
        # Translate a comment-skipping logical offset into a raw offset.
        count = 0
        raw = 0
        while True:
            tok = self.tokens[min(self.pos + raw, len(self.tokens) - 1)]
            if tok.kind != "comment":
                if count == logical_offset:
                    return raw
                count += 1
            if self.pos + raw >= len(self.tokens) - 1:
                return raw
            raw += 1

    def _is_arrow_params(self) -> bool:
        # Look ahead from '(' to the matching ')' and test for '=>'.
        depth = 0
        i = self.pos
        while i < len(self.tokens):
            tok = self.tokens[i]
            if tok.kind == "comment":
                i += 1
                continue
            if tok.kind == "punct" and tok.value == "(":
                depth += 1
            elif tok.kind == "punct" and tok.value == ")":
                depth -= 1
                if depth == 0:
                    j = i + 1
                    while j < len(self.tokens) and self.tokens[j].kind == "comment":
                        j += 1
                    nxt = self.tokens[j]
                    return nxt.kind == "punct" and nxt.value == "=>"
            elif tok.kind == "eof":
                return False
            i += 1
        return False

    def parse_arrow(self, single_param: list[Token] | None, start_tok: Token) -> Node:
        params: list[Node] = []
        if single_param is not None:
            tok = self.advance()
            params.append(self.make_identifier(tok))
        else:
            self.eat_punct("(")
            while not self.at_punct(")"):
                tok = self.peek()
                if tok.kind != "ident":
                    raise self.error("expected parameter name", tok)
                self.advance()
                params.append(self.make_identifier(tok))
                if self.at_punct(","):
                    self.advance()
                elif not self.at_punct(")"):
                    raise self.error("expected ',' or ')' in parameter list", self.peek())
            self.eat_punct(")")
        self.eat_punct("=>")
        if self.at_punct("{"):
            body = self.parse_block()
        else:
            body = self.parse_expression()
        end = body.span[1] if body.span else start_tok.end
        return Node(NodeKind.ARROW_FUNCTION, None, (*params, body), (start_tok.start, end))

    def parse_conditional(self) -> Node:
        test = self.parse_logical_or()
        if self.at_punct("?"):
            self.advance()
            consequent = self.parse_expression()
            self.eat_punct(":")
            alternate = self.parse_expression()
            span = (test.span[0], alternate.span[1]) if test.span and alternate.span else None
            return Node(
                NodeKind.CONDITIONAL_EXPRESSION, None, (test, consequent, alternate), span
            )
        return test

    def _binary_level(self, operators: tuple[str, ...], next_level) -> Node:
        left = next_level()
        while True:
            tok = self.peek()
            if tok.kind == "punct" and tok.value in operators:
                self.advance()
                right = next_level()
                span = (left.span[0], right.span[1]) if left.span and right.span else None
                left = Node(NodeKind.BINARY_EXPRESSION, tok.value, (left, right), span)
            else:
                return left

    def parse_logical_or(self) -> Node:
        return self._binary_level(("||",), self.parse_logical_and)

    def parse_logical_and(self) -> Node:
        return self._binary_level(("&&",), self.parse_equality)

    def parse_equality(self) -> Node:
        return self._binary_level(_EQUALITY, self.parse_relational)

    def parse_relational(self) -> Node:
        return self._binary_level(_RELATIONAL, self.parse_additive)

    def parse_additive(self) -> Node:
        return self._binary_level(_ADDITIVE, self.parse_multiplicative)

    def parse_multiplicative(self) -> Node:
        return self._binary_level(_MULTIPLICATIVE, self.parse_unary)

    def parse_unary(self) -> Node:
        tok = self.peek()
        if tok.kind == "punct" and tok.value in _UNARY:
            self.advance()
            operand = self.parse_unary()
            span = (tok.start, operand.span[1]) if operand.span else None
            return Node(NodeKind.UNARY_EXPRESSION, tok.value, (operand,), span)
        return self.parse_postfix()

    def parse_postfix(self) -> Node:
        expr = self.parse_primary()
        while True:
            if self.at_punct("."):
                self.advance()
                prop = self.peek()
                if prop.kind not in ("ident", "keyword"):
                    raise self.error("expected property name after '.'", prop)
                self.advance()
                prop_node = self.make_identifier(prop)
                span = (expr.span[0], prop.end) if expr.span else None
                expr = Node(NodeKind.MEMBER_EXPRESSION, None, (expr, prop_node), span)
            elif self.at_punct("["):
                self.advance()
                index = self.parse_expression()
                close = self.eat_punct("]")
                span = (expr.span[0], close.end) if expr.span else None
                expr = Node(NodeKind.MEMBER_EXPRESSION, COMPUTED, (expr, index), span)
            elif self.at_punct("("):
                self.advance()
                args: list[Node] = []
                while not self.at_punct(")"):
                    args.append(self.parse_expression())
                    if self.at_punct(","):
                        self.advance()
                    elif not self.at_punct(")"):
                        raise self.error("expected ',' or ')' in argument list", self.peek())
                close = self.eat_punct(")")
                span = (expr.span[0], close.end) if expr.span else None
                expr = Node(NodeKind.CALL_EXPRESSION, None, (expr, *args), span)
            else:
                return expr

    def parse_primary(self) -> Node:
        tok = self.peek()
        if tok.kind == "ident":
            if tok.value in UNSUPPORTED_KEYWORDS:
                raise self.unsupported(f"{tok.value!r} expression", tok)
            self.advance()
            return self.make_identifier(tok)
        if tok.kind == "number":
            self.advance()
            return Node(NodeKind.NUMBER_LITERAL, tok.value, (), (tok.start, tok.end))
        if tok.kind == "string":
            self.advance()
            return Node(NodeKind.STRING_LITERAL, tok.value, (), (tok.start, tok.end))
        if tok.kind == "keyword" and tok.value in ("true", "false"):
            self.advance()
            return Node(NodeKind.BOOLEAN_LITERAL, tok.value, (), (tok.start, tok.end))
        if tok.kind == "keyword" and tok.value == "function":
            return self.parse_function_expression()
        if tok.kind == "keyword":
            raise self.unsupported(f"{tok.value!r} in expression position", tok)
        if tok.kind == "punct" and tok.value == "(":
            self.advance()
            inner = self.parse_expression()
            self.eat_punct(")")
            return inner
        if tok.kind == "punct" and tok.value == "[":
            return self.parse_array()
        if tok.kind == "punct" and tok.value == "{":
            return self.parse_object()
        raise self.error("unexpected token", tok)

    def parse_function_expression(self) -> Node:
        kw = self.advance()
        if self.peek().kind == "ident":
            # Named function expressions add a scope binding the subset does
            # not model; reject them explicitly.
            raise self.unsupported("named function expression", self.peek())
        self.eat_punct("(")
        params: list[Node] = []
        while not self.at_punct(")"):
            tok = self.peek()
            if tok.kind != "ident":
                raise self.error("expected parameter name", tok)
            self.advance()
            params.append(self.make_identifier(tok))
            if self.at_punct(","):
                self.advance()
        self.eat_punct(")")
        body = self.parse_block()
        end = body.span[1] if body.span else kw.end
        return Node(NodeKind.FUNCTION_EXPRESSION, None, (*params, body), (kw.start, end))

    def parse_array(self) -> Node:
        open_tok = self.eat_punct("[")
        items: list[Node] = []
        while not self.at_punct("]"):
            items.append(self.parse_expression())
            if self.at_punct(","):
                self.advance()
            elif not self.at_punct("]"):
                raise self.error("expected ',' or ']' in array literal", self.peek())
        close = self.eat_punct("]")
        return Node(NodeKind.ARRAY_LITERAL, None, tuple(items), (open_tok.start, close.end))

    def parse_object(self) -> Node:
        open_tok = self.eat_punct("{")
        props: list[Node] = []
        while not self.at_punct("}"):
            key_tok = self.peek()
            if key_tok.kind == "ident" or key_tok.kind == "keyword":
                self.advance()
                key = Node(NodeKind.IDENTIFIER, key_tok.value, (), (key_tok.start, key_tok.end))
            elif key_tok.kind == "string":
                self.advance()
                key = Node(
                    NodeKind.STRING_LITERAL, key_tok.value, (), (key_tok.start, key_tok.end)
                )
            else:
                raise self.error("expected property key", key_tok)
            if not self.at_punct(":"):
                raise self.unsupported("shorthand object property", self.peek())
            self.advance()
            value = self.parse_expression()
            span = (key_tok.start, value.span[1]) if value.span else None
            props.append(Node(NodeKind.PROPERTY, None, (key, value), span))
            if self.at_punct(","):
                self.advance()
            elif not self.at_punct("}"):
                raise self.error("expected ',' or '}' in object literal", self.peek())
        close = self.eat_punct("}")
        return Node(NodeKind.OBJECT_LITERAL, None, tuple(props), (open_tok.start, close.end))

    def make_identifier(self, tok: Token) -> Node:
        m = PLACEHOLDER_RE.match(tok.value)
        if m:
            return Node(NodeKind.PLACEHOLDER, m.group(1), (), (tok.start, tok.end))
        return Node(NodeKind.IDENTIFIER, tok.value, (), (tok.start, tok.end))


def parse(source: str) -> Ast:
    """Parse source text into an Ast; raises SourceSyntaxError or
    UnsupportedConstruct."""
    parser = _Parser(source)
    root = parser.parse_program()
    return Ast(root=root, source=source)
