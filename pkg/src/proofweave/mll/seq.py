"""Splitting vertices and sequentialization of multiplicative proof nets."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import Empty, NotCorrect, NotSplitting, TypeMismatch
from ..graph import LocallyColoredGraph, vertex_components
from ..yeo import _dfs, find_cuspfree_cycle, find_splitting_param
from .derivation import (
    Derivation,
    Occ,
    ax,
    cut_rule,
    hyp,
    mix0,
    mix2,
    par_rule,
    substitute,
    tensor_rule,
)
from .structure import SOLID, ProofStructure, well_color

STRATEGIES = ("all-pairs", "sections", "terminal", "non-ax", "direct-par")


def is_splitting_vertex(ps: ProofStructure, v: str) -> bool:
    """ax/⊗/cut: in no cycle; ⅋: its conclusion is in no cycle."""
    g = ps.graph()
    x = ps.vertices[v]
    if x.kind == "par":
        (c,) = x.conclusions
        t = ps.edges[c].tgt
        if t is None:
            return True
        comp = vertex_components(g, removed_edges=frozenset([c]))
        return comp[v] != comp[t]
    comp = vertex_components(g, removed=frozenset([v]))
    seen: set[int] = set()
    for inc in g.incident(v):
        if inc.other is None:
            continue
        k = comp[inc.other]
        if k in seen:
            return False
        seen.add(k)
    return True


# ---------------------------------------------------------------------------
# order on ⅋-vertices


def _par_targets(ps: ProofStructure, g: LocallyColoredGraph, u: str, allowed=None) -> dict[str, tuple]:
    """⅋-vertices reached from ``u`` by a simple open cusp-free ⅋-path, each
    with one witness (vertex list, edge list)."""
    found: dict[str, tuple] = {}

    def visit(vs, es, end):
        x = vs[-1]
        if end == SOLID and ps.kind(x) == "par" and x not in found:
            found[x] = (tuple(vs), tuple(es))
        return None

    _dfs(g, u, SOLID, visit, allowed=allowed)
    return found


def order_parr(ps: ProofStructure, v: str, u: str, g: LocallyColoredGraph | None = None) -> bool:
    """``v ⋖⅋ u``: a simple open cusp-free ⅋-path from ``v`` to ``u`` that no
    cusp-free ⅋-path from ``u`` comes back to."""
    if v == u or ps.kind(v) != "par" or ps.kind(u) != "par":
        return False
    g = g or well_color(ps)
    back = set(_par_targets(ps, g, u))
    if v in back:
        return False
    allowed = set(g.vertices) - back
    return u in _par_targets(ps, g, v, allowed)


def _direct_par(ps: ProofStructure, g: LocallyColoredGraph) -> str:
    pars = ps.of_kind("par")
    cur = pars[0]
    while True:
        nxt = next((w for w in pars if order_parr(ps, cur, w, g)), None)
        if nxt is None:
            return cur
        cur = nxt


@dataclass(frozen=True)
class SplitChoice:
    vertex: str
    pair: tuple[str, str] | None


def strategy_pairs(ps: ProofStructure, g: LocallyColoredGraph, strategy: str) -> list[tuple[str, str]]:
    if strategy == "all-pairs":
        return g.all_pairs()
    if strategy == "sections":
        return sorted(g.cusp_points())
    if strategy == "terminal":
        out = []
        for v in g.vertices:
            ccols = {g.color(e, v) for e in ps.vertices[v].conclusions}
            out.extend((v, a) for a in g.colors if a not in ccols)
        return sorted(out)
    if strategy == "non-ax":
        out = [(v, a) for v, a in g.all_pairs() if ps.kind(v) != "ax"]
        return out or g.all_pairs()
    raise ValueError(f"unknown strategy {strategy!r}")


def find_splitting_ps(ps: ProofStructure, strategy: str = "all-pairs", *, check: bool = True) -> SplitChoice:
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    if not ps.vertices:
        raise Empty("the structure has no vertex")
    g = well_color(ps)
    if check:
        w = find_cuspfree_cycle(g)
        if w is not None:
            raise NotCorrect("the structure has a switching cycle", w)
    if strategy in ("sections", "direct-par") and not ps.of_kind("par"):
        # without ⅋ a correct structure is acyclic: every vertex splits
        choice = SplitChoice(ps.vertex_ids()[0], None)
    elif strategy == "direct-par":
        choice = SplitChoice(_direct_par(ps, g), None)
    else:
        r = find_splitting_param(g, strategy_pairs(ps, g, strategy), validate=False)
        choice = SplitChoice(r.vertex, r.pair)
    if check and not is_splitting_vertex(ps, choice.vertex):
        raise NotSplitting(f"vertex {choice.vertex!r} is not splitting", choice.vertex)
    return choice


# ---------------------------------------------------------------------------
# sequentialization

# edge id -> occurrence, for every edge of the structure
Boundary = dict[str, Occ]


def _split_edge(ps: ProofStructure, c: str) -> tuple[ProofStructure, ProofStructure]:
    """Cut the bridge ``c``: the source side keeps ``c`` as a conclusion, the
    target side keeps it as a hypothesis."""
    x = ps.edges[c]
    g = ps.graph()
    comp = vertex_components(g, removed_edges=frozenset([c]))
    ks, kt = comp[x.src], comp[x.tgt]
    if ks == kt:
        raise NotSplitting(f"edge {c!r} is not a bridge", c)

    def side(k: int, keep_src: bool) -> ProofStructure:
        vs = [v for v in ps.vertices if comp[v] == k]
        es = [e for e, y in ps.edges.items() if e != c and any(w is not None and comp[w] == k for w in (y.src, y.tgt))]
        sub = ps.restrict(vs, es + [c])
        return sub.detach(c, tgt=keep_src, src=not keep_src)

    return side(ks, True), side(kt, False)


def _remove_vertex(ps: ProofStructure, v: str) -> ProofStructure:
    x = ps.vertices[v]
    vs = [w for w in ps.vertices if w != v]
    es = [e for e in ps.edges if e not in x.conclusions]
    return ps.restrict(vs, es)


def _side_of(parts: list[ProofStructure], e: str) -> ProofStructure:
    return next(p for p in parts if e in p.edges)


def _seq(ps: ProofStructure, strategy: str, check: bool) -> tuple[Derivation, Boundary]:
    if ps.is_empty():
        return mix0(), {}
    comps = ps.components()
    if len(comps) > 1:
        d, occ = _seq(comps[0], strategy, check)
        for c in comps[1:]:
            d2, occ2 = _seq(c, strategy, check)
            d = mix2(d, d2)
            occ.update(occ2)
        return d, occ
    if not ps.vertices:
        (e,) = ps.edges
        h = hyp(ps.edges[e].type)
        return h, {e: h.principal[0]}
    v = find_splitting_ps(ps, strategy, check=check).vertex
    x = ps.vertices[v]
    pending = [c for c in x.conclusions if ps.edges[c].tgt is not None]
    if pending:
        c = pending[0]
        top, bottom = _split_edge(ps, c)
        d0, occ0 = _seq(top, strategy, check)
        d1, occ1 = _seq(bottom, strategy, check)
        d = substitute(d0, occ0[c], d1, occ1[c])
        return d, {**occ1, **occ0}
    rest = _remove_vertex(ps, v)
    for e in x.premises:
        rest = rest.detach(e, tgt=True)
    k = x.kind
    if k == "ax":
        a, b = x.conclusions
        d = ax(ps.edges[b].type)
        return d, {a: d.principal[0], b: d.principal[1]}
    if k == "par":
        d0, occ = _seq(rest, strategy, check)
        a, b = x.premises
        d = par_rule(d0, occ[a], occ[b])
        occ[x.conclusions[0]] = d.principal[0]
        return d, occ
    parts = rest.components()
    a, b = x.premises
    pa, pb = _side_of(parts, a), _side_of(parts, b)
    if pa is pb:
        raise NotSplitting(f"removing {v!r} does not disconnect its premises", v)
    d1, occ1 = _seq(pa, strategy, check)
    d2, occ2 = _seq(pb, strategy, check)
    oa, ob = occ1[a], occ2[b]
    occ = {**occ1, **occ2}
    if k == "tensor":
        d = tensor_rule(d1, oa, d2, ob)
        occ[x.conclusions[0]] = d.principal[0]
        return d, occ
    return cut_rule(d1, oa, d2, ob), occ


def sequentialize_full(ps: ProofStructure, strategy: str = "all-pairs", *, check: bool = True) -> tuple[Derivation, Boundary]:
    """Derivation whose desequentialization is isomorphic to ``ps``, with the
    occurrence of each hypothesis and conclusion edge."""
    if ps.untyped:
        raise TypeMismatch("sequentialization needs a typed structure")
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    w = find_cuspfree_cycle(well_color(ps))
    if w is not None:
        raise NotCorrect("the structure has a switching cycle", w)
    return _seq(ps, strategy, check)


def sequentialize(ps: ProofStructure, strategy: str = "all-pairs", *, check: bool = True) -> Derivation:
    return sequentialize_full(ps, strategy, check=check)[0]


__all__ = [
    "STRATEGIES",
    "SplitChoice",
    "find_splitting_ps",
    "is_splitting_vertex",
    "order_parr",
    "sequentialize",
    "sequentialize_full",
    "strategy_pairs",
]
