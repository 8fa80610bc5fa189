"""Minimal S-expression reader and printer.

Lists use ``( )``, vectors use ``[ ]`` and read back as ``Vector`` instances,
double-quoted strings read back as ``Quoted`` and anything else is a bare
symbol (``str``).
"""

from __future__ import annotations

from typing import Union

from .errors import ParseError


class Vector(list):
    pass


class Quoted(str):
    pass


SExpr = Union[str, list]


def _tokenize(text: str) -> list[str]:
    toks: list[str] = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
        elif c in "()[]":
            toks.append(c)
            i += 1
        elif c == '"':
            j = i + 1
            buf = []
            while j < n and text[j] != '"':
                if text[j] == "\\" and j + 1 < n:
                    j += 1
                buf.append(text[j])
                j += 1
            if j >= n:
                raise ParseError("unterminated string")
            toks.append('"' + "".join(buf))
            i = j + 1
        elif c == ";":
            while i < n and text[i] != "\n":
                i += 1
        else:
            j = i
            while j < n and not text[j].isspace() and text[j] not in '()[]";':
                j += 1
            toks.append(text[i:j])
            i = j
    return toks


def loads(text: str) -> SExpr:
    toks = _tokenize(text)
    pos = 0

    def read() -> SExpr:
        nonlocal pos
        if pos >= len(toks):
            raise ParseError("unexpected end of input")
        t = toks[pos]
        pos += 1
        if t in ("(", "["):
            close = ")" if t == "(" else "]"
            items: list = Vector() if t == "[" else []
            while True:
                if pos >= len(toks):
                    raise ParseError(f"missing {close!r}")
                if toks[pos] == close:
                    pos += 1
                    return items
                if toks[pos] in (")", "]"):
                    raise ParseError(f"mismatched {toks[pos]!r}")
                items.append(read())
        if t in (")", "]"):
            raise ParseError(f"unexpected {t!r}")
        if t.startswith('"'):
            return Quoted(t[1:])
        return t

    expr = read()
    if pos != len(toks):
        raise ParseError("trailing input after expression")
    return expr


def dumps(expr: SExpr) -> str:
    if isinstance(expr, Quoted):
        return '"' + expr.replace("\\", "\\\\").replace('"', '\\"') + '"'
    if isinstance(expr, str):
        return expr
    inner = " ".join(dumps(x) for x in expr)
    return f"[{inner}]" if isinstance(expr, Vector) else f"({inner})"


def atom_text(x: SExpr) -> str:
    if not isinstance(x, str):
        raise ParseError(f"expected an atom, got {dumps(x)}")
    return str(x)
