"""Tokenizer for the supported scripting-language subset."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import SourceSyntaxError

KEYWORDS = frozenset({"const", "let", "var", "function", "return", "true", "false"})

# Keywords of the full language that are outside the supported subset; seeing
# one produces a targeted UnsupportedConstruct rather than a bare syntax error.
UNSUPPORTED_KEYWORDS = frozenset(
    {
        "if", "else", "for", "while", "do", "switch", "case", "class", "new",
        "import", "export", "async", "await", "yield", "try", "catch",
        "finally", "throw", "delete", "typeof", "in", "of", "instanceof",
        "void", "with",
    }
)

PUNCTUATION = (
    "===", "!==", "=>", "==", "!=", "<=", ">=", "&&", "||",
    "(", ")", "[", "]", "{", "}", ",", ";", ":", ".", "?",
    "+", "-", "*", "/", "%", "<", ">", "!", "=",
)


@dataclass(frozen=True)
class Token:
    kind: str  # ident | keyword | number | string | punct | comment | eof
    value: str
    start: int
    end: int
    line: int
    col: int


def _is_ident_start(c: str) -> bool:
    return c.isalpha() or c in "_$"


def _is_ident_char(c: str) -> bool:
    return c.isalnum() or c in "_$"


def tokenize(source: str) -> list[Token]:
    tokens: list[Token] = []
    i = 0
    line = 1
    line_start = 0
    n = len(source)

    def loc(pos: int) -> tuple[int, int]:
        return line, pos - line_start + 1

    while i < n:
        c = source[i]
        if c == "\n":
            line += 1
            i += 1
            line_start = i
            continue
        if c in " \t\r":
            i += 1
            continue
        start = i
        ln, col = loc(i)
        if c == "/" and i + 1 < n and source[i + 1] == "/":
            while i < n and source[i] != "\n":
                i += 1
            tokens.append(Token("comment", source[start:i], start, i, ln, col))
            continue
        if c == "/" and i + 1 < n and source[i + 1] == "*":
            end = source.find("*/", i + 2)
            if end < 0:
                raise SourceSyntaxError("unterminated block comment", ln, col, "/*")
            text = source[start : end + 2]
            line += text.count("\n")
            if "\n" in text:
                line_start = start + text.rfind("\n") + 1
            i = end + 2
            tokens.append(Token("comment", text, start, i, ln, col))
            continue
        if c in "\"'":
            quote = c
            i += 1
            buf: list[str] = []
            while i < n and source[i] != quote:
                if source[i] == "\n":
                    raise SourceSyntaxError("unterminated string literal", ln, col, quote)
                if source[i] == "\\":
                    if i + 1 >= n:
                        raise SourceSyntaxError("unterminated string literal", ln, col, quote)
                    esc = source[i + 1]
                    buf.append({"n": "\n", "t": "\t", "r": "\r"}.get(esc, esc))
                    i += 2
                else:
                    buf.append(source[i])
                    i += 1
            if i >= n:
                raise SourceSyntaxError("unterminated string literal", ln, col, quote)
            i += 1
            tokens.append(Token("string", "".join(buf), start, i, ln, col))
            continue
        if c == "`":
            raise SourceSyntaxError("template literals are not supported", ln, col, "`")
        if c.isdigit():
            while i < n and source[i].isdigit():
                i += 1
            if i < n and source[i] == "." and i + 1 < n and source[i + 1].isdigit():
                i += 1
                while i < n and source[i].isdigit():
                    i += 1
            if i < n and source[i] in "eE":
                j = i + 1
                if j < n and source[j] in "+-":
                    j += 1
                if j < n and source[j].isdigit():
                    i = j
                    while i < n and source[i].isdigit():
                        i += 1
            tokens.append(Token("number", source[start:i], start, i, ln, col))
            continue
        if _is_ident_start(c):
            while i < n and _is_ident_char(source[i]):
                i += 1
            word = source[start:i]
            kind = "keyword" if word in KEYWORDS else "ident"
            tokens.append(Token(kind, word, start, i, ln, col))
            continue
        for p in PUNCTUATION:
            if source.startswith(p, i):
                i += len(p)
                tokens.append(Token("punct", p, start, i, ln, col))
                break
        else:
            raise SourceSyntaxError(f"unexpected character {c!r}", ln, col, c)
    tokens.append(Token("eof", "", n, n, line, n - line_start + 1))
    return tokens
