"""Formulas of multiplicative-additive linear logic without units.

ASCII syntax: atoms ``[A-Za-z][A-Za-z0-9]*``, postfix ``^`` for duality,
binary ``*`` (tensor), ``@`` (par), ``&`` (with) and ``+`` (plus).  All binary
connectives share one precedence level and associate to the right, so
``A * B @ C`` reads ``A * (B @ C)``; the printer always parenthesizes compound
arguments.  The Unicode symbols ⊗ ⅋ ⊕ and ⊥ are accepted on input.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .errors import ParseError

MULTIPLICATIVE = ("*", "@")
ADDITIVE = ("&", "+")
_DUAL_OP = {"*": "@", "@": "*", "&": "+", "+": "&"}
_UNICODE = {"⊗": "*", "⅋": "@", "⊕": "+", "⊥": "^"}


@dataclass(frozen=True, order=True)
class Atom:
    name: str
    neg: bool = False

    def __str__(self) -> str:
        return self.name + ("^" if self.neg else "")


@dataclass(frozen=True, order=True)
class Bin:
    op: str
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return f"{_arg(self.left)} {self.op} {_arg(self.right)}"


Formula = Union[Atom, Bin]


def _arg(f: Formula) -> str:
    return str(f) if isinstance(f, Atom) else f"({f})"


def tensor(a: Formula, b: Formula) -> Bin:
    return Bin("*", a, b)


def par(a: Formula, b: Formula) -> Bin:
    return Bin("@", a, b)


def with_(a: Formula, b: Formula) -> Bin:
    return Bin("&", a, b)


def plus(a: Formula, b: Formula) -> Bin:
    return Bin("+", a, b)


def dual(f: Formula) -> Formula:
    if isinstance(f, Atom):
        return Atom(f.name, not f.neg)
    return Bin(_DUAL_OP[f.op], dual(f.left), dual(f.right))


def is_multiplicative(f: Formula) -> bool:
    if isinstance(f, Atom):
        return True
    return f.op in MULTIPLICATIVE and is_multiplicative(f.left) and is_multiplicative(f.right)


def size(f: Formula) -> int:
    return 1 if isinstance(f, Atom) else 1 + size(f.left) + size(f.right)


def render(f: Formula) -> str:
    return str(f)


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:([A-Za-z][A-Za-z0-9_]*)|(.))")


def _tokens(text: str) -> list[str]:
    for u, a in _UNICODE.items():
        text = text.replace(u, a)
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # pragma: no cover - the pattern matches any char
            raise ParseError(f"unexpected input at {pos}")
        out.append(m.group(1) or m.group(2))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens: list[str]) -> None:
        self.toks = tokens
        self.i = 0

    def peek(self) -> str | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expected: str | None = None) -> str:
        t = self.peek()
        if t is None or (expected is not None and t != expected):
            raise ParseError(f"expected {expected or 'a token'}, got {t!r}")
        self.i += 1
        return t

    def formula(self) -> Formula:
        left = self.unary()
        op = self.peek()
        if op in _DUAL_OP:
            self.take()
            return Bin(op, left, self.formula())
        return left

    def unary(self) -> Formula:
        t = self.peek()
        if t == "(":
            self.take()
            f = self.formula()
            self.take(")")
        elif t is not None and t[0].isalpha():
            self.take()
            f = Atom(t)
        else:
            raise ParseError(f"unexpected token {t!r}")
        while self.peek() == "^":
            self.take()
            f = dual(f)
        return f


def parse_formula(text: str) -> Formula:
    p = _Parser(_tokens(text))
    f = p.formula()
    if p.peek() is not None:
        raise ParseError(f"trailing input {p.peek()!r} in {text!r}")
    return f


def parse_sequent(text: str) -> list[Formula]:
    """Comma separated formulas; the empty string is the empty sequent."""
    p = _Parser(_tokens(text))
    out: list[Formula] = []
    if p.peek() is None:
        return out
    while True:
        out.append(p.formula())
        if p.peek() is None:
            return out
        p.take(",")


__all__ = [
    "Atom",
    "Bin",
    "Formula",
    "dual",
    "is_multiplicative",
    "par",
    "parse_formula",
    "parse_sequent",
    "plus",
    "render",
    "size",
    "tensor",
    "with_",
]
