"""Tokenizer for the mini-HDL language.

Bit-vector literals are written ``<width>'b<bits>`` and must spell out
exactly ``width`` binary digits; there is no implicit zero extension
anywhere in the language. ``//`` starts a line comment.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import DesignError
from .source import Diagnostic, SourceUnit, Span

KEYWORDS = frozenset(
    {
        "design",
        "end",
        "in",
        "out",
        "wire",
        "reg",
        "assign",
        "always",
        "if",
        "else",
        "case",
        "default",
    }
)

# reserved signal names that may be read but never declared
RESERVED_SIGNALS = frozenset({"rst"})

_PUNCT = (
    "<=",
    "==",
    ";",
    "=",
    "&",
    "|",
    "^",
    "~",
    "(",
    ")",
    "{",
    "}",
    "[",
    "]",
    ":",
    ",",
)


@dataclass(frozen=True)
class Token:
    kind: str  # keyword text, punctuation text, or IDENT/LITERAL/INT/EOF
    text: str
    span: Span
    # decoded payload for LITERAL (width, value) and INT (value)
    value: int | None = None
    width: int | None = None


def _fail(source: SourceUnit, start: int, end: int, message: str) -> None:
    raise DesignError([Diagnostic(message, source.span(start, end))])


def tokenize(source: SourceUnit) -> list[Token]:
    text = source.text
    n = len(text)
    tokens: list[Token] = []
    i = 0
    while i < n:
        ch = text[i]
        if ch in " \t\r\n":
            i += 1
            continue
        if text.startswith("//", i):
            j = text.find("\n", i)
            i = n if j < 0 else j + 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j < n and text[j] == "'":
                if j + 1 >= n or text[j + 1] != "b":
                    _fail(source, i, min(j + 2, n), "malformed literal: expected 'b after width")
                k = j + 2
                while k < n and text[k] in "01":
                    k += 1
                width = int(text[i:j])
                bits = text[j + 2 : k]
                if width < 1:
                    _fail(source, i, k, "literal width must be >= 1")
                if not bits:
                    _fail(source, i, k, "malformed literal: missing binary digits")
                if len(bits) != width:
                    _fail(
                        source,
                        i,
                        k,
                        f"literal spells {len(bits)} bits but declares width {width}",
                    )
                tokens.append(
                    Token("LITERAL", text[i:k], source.span(i, k), value=int(bits, 2), width=width)
                )
                i = k
                continue
            tokens.append(Token("INT", text[i:j], source.span(i, j), value=int(text[i:j])))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            kind = word if word in KEYWORDS else "IDENT"
            tokens.append(Token(kind, word, source.span(i, j)))
            i = j
            continue
        for p in _PUNCT:
            if text.startswith(p, i):
                tokens.append(Token(p, p, source.span(i, i + len(p))))
                i += len(p)
                break
        else:
            _fail(source, i, i + 1, f"unexpected character {ch!r}")
    tokens.append(Token("EOF", "", source.span(n, n)))
    return tokens
