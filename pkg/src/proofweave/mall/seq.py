"""Splitting MALL proof nets at a splitting vertex, and sequentialization."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..errors import LeafVertex, NotCorrect, NotSplitting, ProofweaveError
from ..graph import vertex_components
from ..mll.derivation import Occ
from .derivation import MallDerivation, ax, hyp, mix0, mix2, par_rule, plus_rule, substitute, tensor_rule, with_rule
from .forest import Forest, Linking
from .net import (
    STRATEGIES,
    MallNet,
    check_criterion,
    components,
    edge_id,
    find_splitting_mallnet,
    require_proof_net,
)


@dataclass(frozen=True)
class Split:
    """Result of splitting a net at a vertex.

    ``kind`` is one of ``substitution`` (parts: net below with the conclusion
    of the vertex as hypothesis, net above where the vertex is terminal),
    ``ax`` (parts: the nets below the leaves X^ and X), ``tensor`` and
    ``with`` (one part per premise), ``par`` and ``plus`` (a single part).
    """

    kind: str
    vertex: str
    parts: tuple[MallNet, ...]
    side: int | None = None  # kept premise of a plus-vertex (1 or 2)


def _restrict(lam: Linking, forest: Forest) -> Linking:
    return frozenset(link for link in lam if all(forest.has(x) and x not in forest.hyps for x in link))


def _project(net: MallNet, forest: Forest) -> MallNet:
    return MallNet(forest, frozenset(_restrict(lam, forest) for lam in net.linkings))


def _check_links_inside(net: MallNet, parts: list[Forest]) -> None:
    for lam in net.linkings:
        for link in lam:
            if not any(all(f.has(x) and x not in f.hyps for x in link) for f in parts):
                raise NotSplitting("an axiom link crosses the split", sorted(link))


def _product(a: MallNet, b: MallNet) -> frozenset:
    return frozenset(x | y for x in a.linkings for y in b.linkings)


def split_edge(net: MallNet, loc: str) -> tuple[MallNet, MallNet]:
    """Cut the forest edge at ``loc`` (a bridge of G_θ present in every G_λ):
    returns the net below, with ``loc`` as a hypothesis, and the net above,
    with ``loc`` as a conclusion."""
    f = net.forest
    lg = net.linking_graph()
    e = lg.edges.get(edge_id(loc))
    if e is None or e.src is None or e.tgt is None:
        raise NotSplitting(f"{loc!r} is not an inner edge of G_θ", loc)
    if any(loc not in net.resolution(lam) for lam in net.linkings):
        raise NotSplitting(f"edge {loc!r} is missing from some G_λ", loc)
    comp = vertex_components(lg.graph, removed_edges=frozenset([e.id]))
    if comp[e.src] == comp[e.tgt]:
        raise NotSplitting(f"edge {loc!r} lies on a cycle", loc)
    below = comp[e.tgt]
    roots_below = [r for r in f.root_locs() if r in comp and comp[r] == below]
    roots_above = [loc] + [r for r in f.root_locs() if r not in roots_below]
    fb = f.with_roots(roots_below, [loc])
    fa = f.with_roots(roots_above)
    _check_links_inside(net, [fb, fa])
    return _project(net, fb), _project(net, fa)


def split_components(net: MallNet) -> list[MallNet]:
    """One net per connected component of G_θ, in component order."""
    f = net.forest
    out = []
    for vs, es in components(net):
        roots = [r for r in f.root_locs() if r in vs or edge_id(r) in es]
        out.append(_project(net, f.with_roots(roots)))
    _check_links_inside(net, [p.forest for p in out])
    return out


def _replace_root(f: Forest, v: str, new: list[str]) -> list[str]:
    out: list[str] = []
    for r in f.root_locs():
        out.extend(new if r == v else [r])
    return out


def split_at(net: MallNet, v: str, *, check: bool = False) -> Split:
    """Decompose ``net`` at the splitting vertex ``v``.  With ``check`` every
    part is re-validated against the correctness criterion and the
    recombination equation of the split is verified."""
    f = net.forest
    lg = net.linking_graph()
    if v not in lg.kinds:
        raise NotSplitting(f"{v!r} is not a vertex of G_θ", v)
    k = lg.kinds[v]
    if k == "leaf":
        raise LeafVertex(f"{v!r} is a leaf", v)
    terminal = k != "ax" and f.parent(v) is None
    if k == "ax":
        link = lg.links[v]
        neg, pos = sorted(link, key=lambda x: (not f.formula(x).neg, x))  # type: ignore[union-attr]
        rest = net
        parts: list[MallNet] = []
        for leaf in (neg, pos):
            if f.parent(leaf) is None:
                parts.append(MallNet(Forest(((leaf, f.formula(leaf)),), frozenset([leaf])), frozenset([frozenset()])))
            else:
                below, rest = split_edge(rest, leaf)
                parts.append(below)
        core = rest
        if core.linkings != frozenset([frozenset([link])]) or set(core.forest.root_locs()) != {neg, pos}:
            raise NotSplitting(f"ax-vertex {v!r} does not split off", v)
        res = Split("ax", v, tuple(parts))
        if check:
            eq = frozenset(frozenset([link]) | x | y for x in parts[0].linkings for y in parts[1].linkings)
            _verify(net, res, eq)
        return res
    if not terminal:
        below, above = split_edge(net, v)
        res = Split("substitution", v, (below, above))
        if check:
            _verify(net, res, _product(below, above))
        return res
    a, b = f.premises(v)
    if k == "par":
        res = Split("par", v, (_project(net, f.with_roots(_replace_root(f, v, [a, b]))),))
        if check:
            _verify(net, res, res.parts[0].linkings)
        return res
    if k == "with":
        parts = []
        for p in (a, b):
            sub = frozenset(lam for lam in net.linkings if p in net.resolution(lam))
            parts.append(MallNet(f.with_roots(_replace_root(f, v, [p])), sub))
        res = Split("with", v, tuple(parts))
        if check:
            _verify(net, res, parts[0].linkings | parts[1].linkings)
        return res
    if k == "plus":
        used = {1 if a in net.resolution(lam) else 2 for lam in net.linkings}
        if len(used) != 1:
            raise NotSplitting(f"plus-vertex {v!r} is binary", v)
        (side,) = used
        p = a if side == 1 else b
        res = Split("plus", v, (MallNet(f.with_roots(_replace_root(f, v, [p])), net.linkings),), side)
        if check:
            _verify(net, res, res.parts[0].linkings)
        return res
    # terminal tensor
    comp = vertex_components(lg.graph, removed=frozenset([v]))
    src_a = lg.edges[edge_id(a)].src
    side_a = comp[src_a] if src_a is not None else None
    src_b = lg.edges[edge_id(b)].src
    if src_b is not None and side_a is not None and comp[src_b] == side_a:
        raise NotSplitting(f"removing {v!r} does not separate its premises", v)
    roots_a = [a] + [r for r in f.root_locs() if r != v and side_a is not None and comp.get(r) == side_a]
    roots_b = [b] + [r for r in f.root_locs() if r != v and r not in roots_a]
    fa, fb = f.with_roots(roots_a), f.with_roots(roots_b)
    _check_links_inside(net, [fa, fb])
    res = Split("tensor", v, (_project(net, fa), _project(net, fb)))
    if check:
        _verify(net, res, _product(*res.parts))
    return res


def _verify(net: MallNet, s: Split, recombined: frozenset) -> None:
    if recombined != net.linkings:
        raise ProofweaveError(f"{s.kind} split at {s.vertex!r} does not recombine to the net", s.vertex)
    for p in s.parts:
        r = check_criterion(p)
        if not r.ok:
            raise NotCorrect(f"{s.kind} split at {s.vertex!r} produced a part that is not a proof net", r.witnesses)


# ---------------------------------------------------------------------------
# sequentialization


class _Seq:
    def __init__(self, net: MallNet, strategy: str, check: bool, trace: Callable | None) -> None:
        self.strategy = strategy
        self.check = check
        self.trace = trace
        self.occ: dict[str, Occ] = {loc: Occ.fresh(net.forest.formula(loc)) for loc in net.forest.locations()}

    def o(self, loc: str) -> Occ:
        return self.occ[loc]

    def run(self, net: MallNet) -> MallDerivation:
        f = net.forest
        lg = net.linking_graph()
        if not lg.kinds:
            if net.linkings != frozenset([frozenset()]):
                raise NotCorrect("a vertex-free net must be {∅}", None)
            ds = [hyp(f.formula(r), self.o(r)) for r in f.root_locs()]
            if not ds:
                return mix0()
            d = ds[0]
            for x in ds[1:]:
                d = mix2(d, x)
            return d
        comps = split_components(net)
        if len(comps) > 1:
            d = self.run(comps[0])
            for c in comps[1:]:
                d = mix2(d, self.run(c))
            return d
        v = find_splitting_mallnet(net, self.strategy, check=self.check).vertex
        s = split_at(net, v, check=self.check)
        if self.trace is not None:
            self.trace(net, s)
        return self.combine(net, s)

    def combine(self, net: MallNet, s: Split) -> MallDerivation:
        f = net.forest
        v = s.vertex
        if s.kind == "substitution":
            below, above = s.parts
            return substitute(self.run(above), self.o(v), self.run(below), self.o(v))
        if s.kind == "ax":
            lg = net.linking_graph()
            neg, pos = sorted(lg.links[v], key=lambda x: (not f.formula(x).neg, x))  # type: ignore[union-attr]
            d = ax(f.formula(pos), (self.o(neg), self.o(pos)))
            for leaf, part in zip((neg, pos), s.parts):
                d = substitute(d, self.o(leaf), self.run(part), self.o(leaf))
            return d
        a, b = f.premises(v)
        if s.kind == "tensor":
            return tensor_rule(self.run(s.parts[0]), self.o(a), self.run(s.parts[1]), self.o(b), self.o(v))
        if s.kind == "par":
            return par_rule(self.run(s.parts[0]), self.o(a), self.o(b), self.o(v))
        if s.kind == "with":
            return with_rule(self.run(s.parts[0]), self.o(a), self.run(s.parts[1]), self.o(b), self.o(v))
        if s.kind == "plus":
            kept, other = (a, b) if s.side == 1 else (b, a)
            return plus_rule(self.run(s.parts[0]), self.o(kept), s.side, f.formula(other), self.o(v))  # type: ignore[arg-type]
        raise ProofweaveError(f"unknown split kind {s.kind!r}")


def sequentialize_mall_full(
    net: MallNet, strategy: str = "any", *, check: bool = False, trace: Callable | None = None
) -> tuple[MallDerivation, dict[Occ, str]]:
    """A derivation whose set of linkings is the net, with the location of
    each of its conclusions (for comparing against the net).  ``check``
    re-validates every intermediate split (debug mode)."""
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    require_proof_net(net)
    s = _Seq(net, strategy, check, trace)
    d = s.run(net)
    roots = {s.o(r): r for r in net.forest.root_locs()}
    return d, roots


def sequentialize_mall(net: MallNet, strategy: str = "any", *, check: bool = False) -> MallDerivation:
    return sequentialize_mall_full(net, strategy, check=check)[0]


__all__ = [
    "Split",
    "sequentialize_mall",
    "sequentialize_mall_full",
    "split_at",
    "split_components",
    "split_edge",
]

