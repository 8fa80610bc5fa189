"""Derivations of multiplicative linear logic with mix and hypotheses.

Every formula occurrence is an ``Occ`` carrying a process-unique integer id;
rules name their active occurrences by identity rather than by position, so
that substitution can grow a premise's sequent without disturbing the rules
below it.  Conclusions are ordered: principal formula first, then the
remaining conclusions of the first premise, then those of the second.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from ..errors import LocationClash, NoSuchHypothesis, ParseError, RuleMismatch, TypeMismatch
from ..formula import Atom, Formula, dual, par, parse_formula, tensor
from ..sexpr import Quoted, Vector, atom_text, dumps, loads

_ids = itertools.count(1)

RULES = ("ax", "hyp", "tensor", "par", "cut", "mix2", "mix0")


@dataclass(frozen=True)
class Occ:
    id: int
    formula: Formula

    @staticmethod
    def fresh(formula: Formula) -> Occ:
        return Occ(next(_ids), formula)

    def __repr__(self) -> str:
        return f"{self.formula}#{self.id}"


@dataclass(frozen=True)
class Derivation:
    rule: str
    premises: tuple["Derivation", ...]
    active: tuple[Occ, ...]
    principal: tuple[Occ, ...]
    concl: tuple[Occ, ...]
    hyps: tuple[Occ, ...]

    # -- inspection ----------------------------------------------------------
    def nodes(self) -> Iterator[Derivation]:
        yield self
        for p in self.premises:
            yield from p.nodes()

    def count(self, rule: str) -> int:
        return sum(1 for n in self.nodes() if n.rule == rule)

    def size(self) -> int:
        return sum(1 for _ in self.nodes())

    def occurrences(self) -> frozenset[Occ]:
        out: set[Occ] = set()
        for n in self.nodes():
            out.update(n.principal)
        return frozenset(out)

    def sequent(self) -> str:
        left = ", ".join(str(o.formula) for o in self.hyps)
        right = ", ".join(str(o.formula) for o in self.concl)
        return f"{left} |- {right}".strip()

    def __str__(self) -> str:
        return to_sexpr(self)


def _without(seq: tuple[Occ, ...], o: Occ) -> tuple[Occ, ...]:
    return tuple(x for x in seq if x != o)


def _disjoint(d1: Derivation, d2: Derivation) -> None:
    clash = d1.occurrences() & d2.occurrences()
    if clash:
        raise LocationClash(f"occurrence {min(clash, key=lambda o: o.id)!r} used twice", sorted(o.id for o in clash))


def _member(o: Occ, d: Derivation, rule: str) -> None:
    if o not in d.concl:
        raise RuleMismatch(f"{rule}: {o!r} is not a conclusion of its premise", o)


# ---------------------------------------------------------------------------
# rule constructors


def ax(a: Formula, principal: tuple[Occ, Occ] | None = None) -> Derivation:
    """``|- A^, A``."""
    p = principal or (Occ.fresh(dual(a)), Occ.fresh(a))
    if p[0].formula != dual(p[1].formula):
        raise TypeMismatch("axiom conclusions must be dual", p)
    return Derivation("ax", (), (), p, p, ())


def hyp(a: Formula, occ: Occ | None = None) -> Derivation:
    """``A |- A``: one occurrence serving as hypothesis and conclusion."""
    o = occ or Occ.fresh(a)
    return Derivation("hyp", (), (), (o,), (o,), (o,))


def tensor_rule(d1: Derivation, a: Occ, d2: Derivation, b: Occ, principal: Occ | None = None) -> Derivation:
    _member(a, d1, "tensor")
    _member(b, d2, "tensor")
    _disjoint(d1, d2)
    c = principal or Occ.fresh(tensor(a.formula, b.formula))
    if c.formula != tensor(a.formula, b.formula):
        raise TypeMismatch("tensor conclusion type", c)
    concl = (c,) + _without(d1.concl, a) + _without(d2.concl, b)
    return Derivation("tensor", (d1, d2), (a, b), (c,), concl, d1.hyps + d2.hyps)


def par_rule(d: Derivation, a: Occ, b: Occ, principal: Occ | None = None) -> Derivation:
    _member(a, d, "par")
    _member(b, d, "par")
    if a == b:
        raise RuleMismatch("par needs two distinct occurrences", a)
    c = principal or Occ.fresh(par(a.formula, b.formula))
    if c.formula != par(a.formula, b.formula):
        raise TypeMismatch("par conclusion type", c)
    concl = (c,) + _without(_without(d.concl, a), b)
    return Derivation("par", (d,), (a, b), (c,), concl, d.hyps)


def cut_rule(d1: Derivation, a: Occ, d2: Derivation, b: Occ) -> Derivation:
    _member(a, d1, "cut")
    _member(b, d2, "cut")
    _disjoint(d1, d2)
    if b.formula != dual(a.formula):
        raise TypeMismatch("cut formulas must be dual", (a, b))
    concl = _without(d1.concl, a) + _without(d2.concl, b)
    return Derivation("cut", (d1, d2), (a, b), (), concl, d1.hyps + d2.hyps)


def mix2(d1: Derivation, d2: Derivation) -> Derivation:
    _disjoint(d1, d2)
    return Derivation("mix2", (d1, d2), (), (), d1.concl + d2.concl, d1.hyps + d2.hyps)


def mix0() -> Derivation:
    return Derivation("mix0", (), (), (), (), ())


def _rebuild(node: Derivation, premises: tuple[Derivation, ...], ren: dict[Occ, Occ]) -> Derivation:
    act = tuple(ren.get(o, o) for o in node.active)
    r = node.rule
    if r == "tensor":
        return tensor_rule(premises[0], act[0], premises[1], act[1], node.principal[0])
    if r == "par":
        return par_rule(premises[0], act[0], act[1], node.principal[0])
    if r == "cut":
        return cut_rule(premises[0], act[0], premises[1], act[1])
    if r == "mix2":
        return mix2(premises[0], premises[1])
    return node


def substitute(pi1: Derivation, a: Occ, pi2: Derivation, h: Occ) -> Derivation:
    """Replace the hypothesis ``h`` of ``pi2`` by ``pi1``, a derivation with
    conclusion ``a``."""
    if h not in pi2.hyps:
        raise NoSuchHypothesis(f"{h!r} is not a hypothesis", h)
    if a not in pi1.concl:
        raise NoSuchHypothesis(f"{a!r} is not a conclusion of the substituted derivation", a)
    if a.formula != h.formula:
        raise TypeMismatch("substituted conclusion and hypothesis differ", (a, h))
    clash = (pi1.occurrences() & pi2.occurrences()) - {h}
    if clash:
        raise LocationClash("the two derivations share occurrences", sorted(o.id for o in clash))
    ren = {h: a}

    def go(n: Derivation) -> Derivation:
        if n.rule == "hyp" and n.principal[0] == h:
            return pi1
        if not n.premises:
            return n
        return _rebuild(n, tuple(go(p) for p in n.premises), ren)

    return go(pi2)


def mixretore_normalize(d: Derivation) -> Derivation:
    """Erase every ``mix2`` with a ``mix0`` premise."""
    if not d.premises:
        return d
    ps = tuple(mixretore_normalize(p) for p in d.premises)
    if d.rule == "mix2":
        if ps[0].rule == "mix0":
            return ps[1]
        if ps[1].rule == "mix0":
            return ps[0]
    return _rebuild(d, ps, {})


def is_mixretore_normal(d: Derivation) -> bool:
    if d.rule == "mix0":
        return True
    return all(n.rule != "mix0" for n in d.nodes())


# ---------------------------------------------------------------------------
# S-expressions

_DEFAULT_IDX = {"tensor": [0, 0], "cut": [0, 0], "par": [0, 1]}


def _fmt(f: Formula) -> str:
    return str(f) if isinstance(f, Atom) else Quoted(str(f))


def to_sexpr_tree(d: Derivation):
    r = d.rule
    if r == "ax":
        return ["ax", _fmt(d.principal[1].formula)]
    if r == "hyp":
        return ["hyp", _fmt(d.principal[0].formula)]
    if r == "mix0":
        return ["mix0"]
    if r == "mix2":
        return ["mix2"] + [to_sexpr_tree(p) for p in d.premises]
    if r == "par":
        idx = [d.premises[0].concl.index(a) for a in d.active]
    else:
        idx = [p.concl.index(a) for p, a in zip(d.premises, d.active)]
    head: list = [r]
    if idx != _DEFAULT_IDX[r]:
        head.append(Vector(str(i) for i in idx))
    return head + [to_sexpr_tree(p) for p in d.premises]


def to_sexpr(d: Derivation) -> str:
    return dumps(to_sexpr_tree(d))


def _idx(items: list, rule: str) -> tuple[list[int], list]:
    if items and isinstance(items[0], Vector):
        try:
            return [int(x) for x in items[0]], items[1:]
        except ValueError as exc:
            raise ParseError(f"{rule}: bad index vector") from exc
    return list(_DEFAULT_IDX[rule]), items


def _pick(d: Derivation, i: int, rule: str) -> Occ:
    if not 0 <= i < len(d.concl):
        raise RuleMismatch(f"{rule}: index {i} out of range for {d.sequent()}")
    return d.concl[i]


def from_sexpr_tree(x) -> Derivation:
    if not isinstance(x, list) or isinstance(x, Vector) or not x:
        raise ParseError(f"expected a rule, got {dumps(x) if isinstance(x, list) else x!r}")
    r = atom_text(x[0])
    args = x[1:]
    if r in ("ax", "hyp"):
        if len(args) != 1:
            raise ParseError(f"{r} takes one formula")
        f = parse_formula(atom_text(args[0]))
        return ax(f) if r == "ax" else hyp(f)
    if r == "mix0":
        if args:
            raise ParseError("mix0 takes no argument")
        return mix0()
    if r == "mix2":
        if len(args) != 2:
            raise ParseError("mix2 takes two derivations")
        return mix2(from_sexpr_tree(args[0]), from_sexpr_tree(args[1]))
    if r in ("tensor", "cut", "par"):
        idx, rest = _idx(list(args), r)
        subs = [from_sexpr_tree(a) for a in rest]
        if r == "par":
            if len(subs) != 1 or len(idx) != 2:
                raise ParseError("par takes [i j] and one derivation")
            return par_rule(subs[0], _pick(subs[0], idx[0], r), _pick(subs[0], idx[1], r))
        if len(subs) != 2 or len(idx) != 2:
            raise ParseError(f"{r} takes [i j] and two derivations")
        a, b = _pick(subs[0], idx[0], r), _pick(subs[1], idx[1], r)
        return tensor_rule(subs[0], a, subs[1], b) if r == "tensor" else cut_rule(subs[0], a, subs[1], b)
    raise ParseError(f"unknown rule {r!r}")


def from_sexpr(text: str) -> Derivation:
    return from_sexpr_tree(loads(text))


def to_text(d: Derivation, indent: int = 0) -> str:
    """Indented rule tree, conclusion sequent on each line."""
    lines = [f"{'  ' * indent}{d.rule}: {d.sequent()}"]
    for p in d.premises:
        lines.append(to_text(p, indent + 1))
    return "\n".join(lines)

