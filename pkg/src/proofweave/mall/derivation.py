"""Cut-free derivations of MALL with mix and shared hypotheses, and their
translation into sets of linkings.

Occurrences are ``Occ`` objects as in the multiplicative case.  The & rule
shares its context: the context occurrences of the second premise are renamed
to those of the first.  Locations are assigned top-down from the conclusion,
so two occurrences in different &-branches that stand for the same
subformula of the conclusion get the same location even when they are
distinct objects.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterator, Mapping

from ..errors import LocationClash, NoSuchHypothesis, ParseError, RuleMismatch, SliceConstraintViolated, TypeMismatch
from ..formula import Atom, Formula, dual, par, parse_formula, plus, tensor, with_
from ..mll.derivation import Occ
from ..sexpr import Quoted, Vector, atom_text, dumps, loads
from .forest import Forest, child, make_link
from .net import MallNet

RULES = ("ax", "hyp", "tensor", "par", "with", "plus1", "plus2", "mix2", "mix0")


@dataclass(frozen=True)
class MallDerivation:
    rule: str
    premises: tuple["MallDerivation", ...]
    active: tuple[Occ, ...]
    principal: tuple[Occ, ...]
    concl: tuple[Occ, ...]
    hyps: tuple[Occ, ...]
    other: Formula | None = None  # the discarded argument of a plus rule

    def nodes(self) -> Iterator[MallDerivation]:
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
        loc = locations(self)
        seen: dict[str, Formula] = {}
        for h in self.hyps:
            seen.setdefault(loc[h], h.formula)
        left = ", ".join(str(seen[k]) for k in sorted(seen))
        right = ", ".join(str(o.formula) for o in self.concl)
        return f"{left} |- {right}".strip()

    def __str__(self) -> str:
        return to_sexpr(self)


def _without(seq: tuple[Occ, ...], o: Occ) -> tuple[Occ, ...]:
    return tuple(x for x in seq if x != o)


def _member(o: Occ, d: MallDerivation, rule: str) -> None:
    if o not in d.concl:
        raise RuleMismatch(f"{rule}: {o!r} is not a conclusion of its premise", o)


def _disjoint(d1: MallDerivation, d2: MallDerivation) -> None:
    clash = d1.occurrences() & d2.occurrences()
    if clash:
        raise LocationClash(f"occurrence {min(clash, key=lambda o: o.id)!r} used twice", sorted(o.id for o in clash))


def _merge_hyps(a: tuple[Occ, ...], b: tuple[Occ, ...]) -> tuple[Occ, ...]:
    return a + tuple(h for h in b if h not in a)


# ---------------------------------------------------------------------------
# rules


def ax(a: Formula, principal: tuple[Occ, Occ] | None = None) -> MallDerivation:
    """``|- A^, A`` on an atom ``A``."""
    p = principal or (Occ.fresh(dual(a)), Occ.fresh(a))
    if not isinstance(p[1].formula, Atom) or p[0].formula != dual(p[1].formula):
        raise TypeMismatch("axioms are on an atom and its dual", p)
    return MallDerivation("ax", (), (), p, p, ())


def hyp(a: Formula, occ: Occ | None = None) -> MallDerivation:
    o = occ or Occ.fresh(a)
    return MallDerivation("hyp", (), (), (o,), (o,), (o,))


def tensor_rule(d1: MallDerivation, a: Occ, d2: MallDerivation, b: Occ, principal: Occ | None = None) -> MallDerivation:
    _member(a, d1, "tensor")
    _member(b, d2, "tensor")
    _disjoint(d1, d2)
    c = principal or Occ.fresh(tensor(a.formula, b.formula))
    if c.formula != tensor(a.formula, b.formula):
        raise TypeMismatch("tensor conclusion type", c)
    concl = (c,) + _without(d1.concl, a) + _without(d2.concl, b)
    return MallDerivation("tensor", (d1, d2), (a, b), (c,), concl, d1.hyps + d2.hyps)


def par_rule(d: MallDerivation, a: Occ, b: Occ, principal: Occ | None = None) -> MallDerivation:
    _member(a, d, "par")
    _member(b, d, "par")
    if a == b:
        raise RuleMismatch("par needs two distinct occurrences", a)
    c = principal or Occ.fresh(par(a.formula, b.formula))
    if c.formula != par(a.formula, b.formula):
        raise TypeMismatch("par conclusion type", c)
    concl = (c,) + _without(_without(d.concl, a), b)
    return MallDerivation("par", (d,), (a, b), (c,), concl, d.hyps)


def rename(d: MallDerivation, ren: Mapping[Occ, Occ]) -> MallDerivation:
    """Substitute occurrences everywhere in ``d``."""
    if not ren:
        return d

    def r(xs: tuple[Occ, ...]) -> tuple[Occ, ...]:
        return tuple(ren.get(x, x) for x in xs)

    return replace(
        d,
        premises=tuple(rename(p, ren) for p in d.premises),
        active=r(d.active),
        principal=r(d.principal),
        concl=r(d.concl),
        hyps=r(d.hyps),
    )


def _match_context(ctx1: tuple[Occ, ...], ctx2: tuple[Occ, ...]) -> dict[Occ, Occ]:
    """Rename map sending each occurrence of ``ctx2`` to one of ``ctx1``:
    identical objects first, then equal formulas in order."""
    free1 = [o for o in ctx1 if o not in ctx2]
    ren: dict[Occ, Occ] = {}
    for o in ctx2:
        if o in ctx1:
            continue
        k = next((i for i, x in enumerate(free1) if x.formula == o.formula), None)
        if k is None:
            raise RuleMismatch(f"with: context formula {o.formula} has no counterpart in the first premise", o)
        ren[o] = free1.pop(k)
    if free1 or len(ctx1) != len(ctx2):
        raise RuleMismatch("with: the two premises have different contexts", free1 or None)
    return ren


def with_rule(d1: MallDerivation, a: Occ, d2: MallDerivation, b: Occ, principal: Occ | None = None) -> MallDerivation:
    _member(a, d1, "with")
    _member(b, d2, "with")
    ren = _match_context(_without(d1.concl, a), _without(d2.concl, b))
    if b in ren or a in ren.values():
        raise RuleMismatch("with: active occurrence shared with the context", b)
    d2 = rename(d2, ren)
    c = principal or Occ.fresh(with_(a.formula, b.formula))
    if c.formula != with_(a.formula, b.formula):
        raise TypeMismatch("with conclusion type", c)
    concl = (c,) + _without(d1.concl, a)
    return MallDerivation("with", (d1, d2), (a, b), (c,), concl, _merge_hyps(d1.hyps, d2.hyps))


def plus_rule(d: MallDerivation, a: Occ, side: int, other: Formula, principal: Occ | None = None) -> MallDerivation:
    """``plus1`` (``side=1``) builds ``A + other``; ``plus2`` builds ``other + A``."""
    _member(a, d, f"plus{side}")
    if side not in (1, 2):
        raise RuleMismatch("plus side is 1 or 2", side)
    f = plus(a.formula, other) if side == 1 else plus(other, a.formula)
    c = principal or Occ.fresh(f)
    if c.formula != f:
        raise TypeMismatch("plus conclusion type", c)
    concl = (c,) + _without(d.concl, a)
    return MallDerivation(f"plus{side}", (d,), (a,), (c,), concl, d.hyps, other)


def mix2(d1: MallDerivation, d2: MallDerivation) -> MallDerivation:
    _disjoint(d1, d2)
    return MallDerivation("mix2", (d1, d2), (), (), d1.concl + d2.concl, d1.hyps + d2.hyps)


def mix0() -> MallDerivation:
    return MallDerivation("mix0", (), (), (), (), ())


def _rebuild(n: MallDerivation, ps: tuple[MallDerivation, ...], ren: Mapping[Occ, Occ]) -> MallDerivation:
    act = tuple(ren.get(o, o) for o in n.active)
    r = n.rule
    if r == "tensor":
        return tensor_rule(ps[0], act[0], ps[1], act[1], n.principal[0])
    if r == "par":
        return par_rule(ps[0], act[0], act[1], n.principal[0])
    if r == "with":
        return with_rule(ps[0], act[0], ps[1], act[1], n.principal[0])
    if r in ("plus1", "plus2"):
        return plus_rule(ps[0], act[0], int(r[-1]), n.other, n.principal[0])  # type: ignore[arg-type]
    if r == "mix2":
        return mix2(ps[0], ps[1])
    return n


def substitute(pi1: MallDerivation, a: Occ, pi2: MallDerivation, h: Occ) -> MallDerivation:
    """Replace every hyp rule of ``pi2`` on the hypothesis occurrence of ``h``
    (compared by location) by ``pi1``, a derivation with conclusion ``a``."""
    loc2 = locations(pi2)
    if h not in loc2 or not any(n.rule == "hyp" and n.principal[0] == h for n in pi2.nodes()):
        raise NoSuchHypothesis(f"{h!r} is not a hypothesis", h)
    if a not in pi1.concl:
        raise NoSuchHypothesis(f"{a!r} is not a conclusion of the substituted derivation", a)
    if a.formula != h.formula:
        raise TypeMismatch("substituted conclusion and hypothesis differ", (a, h))
    target = loc2[h]

    def go(n: MallDerivation) -> MallDerivation:
        if n.rule == "hyp" and loc2.get(n.principal[0]) == target:
            o = n.principal[0]
            return pi1 if o == a else rename(pi1, {a: o})
        if not n.premises:
            return n
        return _rebuild(n, tuple(go(p) for p in n.premises), {})

    return go(pi2)


def mixretore_normalize(d: MallDerivation) -> MallDerivation:
    if not d.premises:
        return d
    ps = tuple(mixretore_normalize(p) for p in d.premises)
    if d.rule == "mix2":
        if ps[0].rule == "mix0":
            return ps[1]
        if ps[1].rule == "mix0":
            return ps[0]
    return _rebuild(d, ps, {})


def is_mixretore_normal(d: MallDerivation) -> bool:
    return d.rule == "mix0" or all(n.rule != "mix0" for n in d.nodes())


# ---------------------------------------------------------------------------
# locations, slices, desequentialization


def locations(d: MallDerivation, roots: Mapping[Occ, str] | None = None) -> dict[Occ, str]:
    """Location of every occurrence, from the conclusion of ``d`` upwards.
    ``roots`` optionally fixes the locations of the conclusions."""
    loc: dict[Occ, str] = {}

    def put(o: Occ, l: str) -> None:
        old = loc.setdefault(o, l)
        if old != l:
            raise LocationClash(f"occurrence {o!r} sits at {old} and {l}", o)

    for i, o in enumerate(d.concl):
        put(o, roots[o] if roots is not None else str(i))

    def go(n: MallDerivation) -> None:
        r = n.rule
        if r in ("tensor", "par", "with"):
            at = loc[n.principal[0]]
            put(n.active[0], child(at, "L"))
            put(n.active[1], child(at, "R"))
        elif r in ("plus1", "plus2"):
            at = loc[n.principal[0]]
            put(n.active[0], child(at, "L" if r == "plus1" else "R"))
        for p in n.premises:
            for o in p.concl:
                if o not in loc:
                    raise LocationClash(f"occurrence {o!r} does not reach the conclusion", o)
            go(p)

    go(d)
    return loc


def slices(d: MallDerivation, loc: Mapping[Occ, str] | None = None) -> list[frozenset[str]]:
    """Hypothesis locations of each slice (one premise kept per & rule)."""
    loc = locations(d) if loc is None else loc

    def go(n: MallDerivation) -> list[frozenset[str]]:
        r = n.rule
        if r == "hyp":
            return [frozenset([loc[n.principal[0]]])]
        if r in ("ax", "mix0"):
            return [frozenset()]
        if r in ("tensor", "mix2"):
            s1, s2 = go(n.premises[0]), go(n.premises[1])
            return sorted({a | b for a in s1 for b in s2}, key=sorted)
        if r == "with":
            return sorted(set(go(n.premises[0])) | set(go(n.premises[1])), key=sorted)
        return go(n.premises[0])

    return go(d)


def hyp_locations(d: MallDerivation, loc: Mapping[Occ, str] | None = None) -> frozenset[str]:
    loc = locations(d) if loc is None else loc
    return frozenset(loc[n.principal[0]] for n in d.nodes() if n.rule == "hyp")


def check_slices(d: MallDerivation, loc: Mapping[Occ, str] | None = None) -> None:
    """Every hypothesis must have a hyp rule in every slice."""
    loc = locations(d) if loc is None else loc
    full = hyp_locations(d, loc)
    for s in slices(d, loc):
        missing = sorted(full - s)
        if missing:
            raise SliceConstraintViolated(
                f"hypothesis at {missing[0]} is missing from a slice", {"missing": missing, "slice": sorted(s)}
            )


def linkings_of(d: MallDerivation, loc: Mapping[Occ, str]) -> frozenset[frozenset]:
    def go(n: MallDerivation) -> frozenset[frozenset]:
        r = n.rule
        if r == "ax":
            a, b = n.principal
            return frozenset([frozenset([make_link(loc[a], loc[b])])])
        if r in ("hyp", "mix0"):
            return frozenset([frozenset()])
        if r in ("tensor", "mix2"):
            t1, t2 = go(n.premises[0]), go(n.premises[1])
            return frozenset(x | y for x in t1 for y in t2)
        if r == "with":
            return go(n.premises[0]) | go(n.premises[1])
        return go(n.premises[0])

    return go(d)


def desequentialize_mall(d: MallDerivation, roots: Mapping[Occ, str] | None = None) -> MallNet:
    """The set of linkings of ``d`` on its located conclusion sequent."""
    loc = locations(d, roots)
    check_slices(d, loc)
    forest = Forest(tuple((loc[o], o.formula) for o in d.concl), hyp_locations(d, loc))
    return MallNet(forest, linkings_of(d, loc))


# ---------------------------------------------------------------------------
# S-expressions

_DEFAULT_IDX = {"tensor": [0, 0], "par": [0, 1], "with": [0, 0], "plus1": [0], "plus2": [0]}


def _fmt(f: Formula) -> str:
    return str(f) if isinstance(f, Atom) else Quoted(str(f))


def to_sexpr_tree(d: MallDerivation):
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
    if r in ("plus1", "plus2"):
        head.append(_fmt(d.other))  # type: ignore[arg-type]
    return head + [to_sexpr_tree(p) for p in d.premises]


def to_sexpr(d: MallDerivation) -> str:
    return dumps(to_sexpr_tree(d))


def _idx(items: list, rule: str) -> tuple[list[int], list]:
    if items and isinstance(items[0], Vector):
        try:
            return [int(x) for x in items[0]], items[1:]
        except ValueError as exc:
            raise ParseError(f"{rule}: bad index vector") from exc
    return list(_DEFAULT_IDX[rule]), items


def _pick(d: MallDerivation, i: int, rule: str) -> Occ:
    if not 0 <= i < len(d.concl):
        raise RuleMismatch(f"{rule}: index {i} out of range for {len(d.concl)} conclusions")
    return d.concl[i]


def from_sexpr_tree(x) -> MallDerivation:
    if not isinstance(x, list) or isinstance(x, Vector) or not x:
        raise ParseError(f"expected a rule, got {dumps(x) if isinstance(x, list) else x!r}")
    r = atom_text(x[0])
    args = list(x[1:])
    if r in ("ax", "hyp"):
        if len(args) != 1:
            raise ParseError(f"{r} takes one formula")
        f = parse_formula(atom_text(args[0]))
        if r == "ax" and not isinstance(f, Atom):
            raise TypeMismatch("axioms are atomic", str(f))
        return ax(f) if r == "ax" else hyp(f)
    if r == "mix0":
        if args:
            raise ParseError("mix0 takes no argument")
        return mix0()
    if r == "mix2":
        if len(args) != 2:
            raise ParseError("mix2 takes two derivations")
        return mix2(from_sexpr_tree(args[0]), from_sexpr_tree(args[1]))
    if r in ("plus1", "plus2"):
        idx, rest = _idx(args, r)
        if len(rest) != 2 or len(idx) != 1:
            raise ParseError(f"{r} takes [i], the other formula and one derivation")
        other = parse_formula(atom_text(rest[0]))
        sub = from_sexpr_tree(rest[1])
        return plus_rule(sub, _pick(sub, idx[0], r), int(r[-1]), other)
    if r in ("tensor", "par", "with"):
        idx, rest = _idx(args, r)
        subs = [from_sexpr_tree(a) for a in rest]
        if r == "par":
            if len(subs) != 1 or len(idx) != 2:
                raise ParseError("par takes [i j] and one derivation")
            return par_rule(subs[0], _pick(subs[0], idx[0], r), _pick(subs[0], idx[1], r))
        if len(subs) != 2 or len(idx) != 2:
            raise ParseError(f"{r} takes [i j] and two derivations")
        a, b = _pick(subs[0], idx[0], r), _pick(subs[1], idx[1], r)
        return (tensor_rule if r == "tensor" else with_rule)(subs[0], a, subs[1], b)
    raise ParseError(f"unknown rule {r!r}")


def from_sexpr(text: str) -> MallDerivation:
    return from_sexpr_tree(loads(text))


def to_text(d: MallDerivation, indent: int = 0) -> str:
    lines = [f"{'  ' * indent}{d.rule}: " + ", ".join(str(o.formula) for o in d.concl)]
    for p in d.premises:
        lines.append(to_text(p, indent + 1))
    return "\n".join(lines)


__all__ = [
    "MallDerivation",
    "RULES",
    "ax",
    "check_slices",
    "desequentialize_mall",
    "from_sexpr",
    "hyp",
    "hyp_locations",
    "is_mixretore_normal",
    "linkings_of",
    "locations",
    "mix0",
    "mix2",
    "mixretore_normalize",
    "par_rule",
    "plus_rule",
    "rename",
    "slices",
    "substitute",
    "tensor_rule",
    "to_sexpr",
    "to_text",
    "with_rule",
]
