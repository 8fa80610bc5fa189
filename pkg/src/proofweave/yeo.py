"""Splitting vertices in locally colored graphs.

The order on vertex-color pairs, cusp minimization, and the two splitting
theorems (the plain one for graphs without cusp-free cycles and the variant
with exit functions that tolerates cusp-free cycles).

All searches are exhaustive depth-first enumerations of simple paths; they are
exponential in the worst case and intended for graphs of a few dozen vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Collection, Iterable, Mapping, Sequence

from .errors import (
    CuspFreeCycleExists,
    DominationFails,
    ExitHypothesisFails,
    NoPairs,
    POverlapsPout,
    PreconditionViolated,
)
from .graph import Cusp, LocallyColoredGraph, Path, vertex_components

Pair = tuple[str, str]

_STOP = object()
_PRUNE = object()


def _dfs(
    graph: LocallyColoredGraph,
    start: str,
    forbid: str | None,
    visit: Callable[[list[str], list[str], str], object],
    allowed: Collection[str] | None = None,
    banned_edges: Collection[str] = (),
) -> bool:
    """Enumerate simple open cusp-free paths from ``start``.

    The first edge must not have color ``forbid`` at ``start``.  ``visit`` is
    called with the current vertex list, edge list and ending color for every
    non-empty path; returning ``_STOP`` aborts the whole search (and makes the
    function return True), ``_PRUNE`` stops extending the current path.
    """
    vs = [start]
    es: list[str] = []
    on = {start}

    def rec(x: str, arrive: str | None) -> bool:
        for inc in graph.incident(x):
            y = inc.other
            if y is None or y in on or inc.edge in banned_edges:
                continue
            if allowed is not None and y not in allowed:
                continue
            if arrive is None:
                if inc.color == forbid:
                    continue
            elif inc.color == arrive:
                continue
            vs.append(y)
            es.append(inc.edge)
            on.add(y)
            r = visit(vs, es, inc.other_color)  # type: ignore[arg-type]
            if r is _STOP:
                return True
            if r is not _PRUNE and rec(y, inc.other_color):
                return True
            vs.pop()
            es.pop()
            on.discard(y)
        return False

    return rec(start, None)


class YeoContext:
    """Per-graph memo tables for reachability queries."""

    def __init__(self, graph: LocallyColoredGraph) -> None:
        self.graph = graph
        self._reach_vertices: dict[Pair, frozenset[str]] = {}
        self._reach_pairs: dict[Pair, dict[Pair, Path]] = {}

    def reach_vertices(self, pair: Pair) -> frozenset[str]:
        """Vertices ``x`` with ``pair`` ⟿ ``(x, τ)`` for some ``τ``."""
        hit = self._reach_vertices.get(pair)
        if hit is not None:
            return hit
        v, alpha = pair
        found: set[str] = set()
        goal = len(self.graph.vertices) - 1

        def visit(vs: list[str], es: list[str], end: str) -> object:
            found.add(vs[-1])
            return _STOP if len(found) >= goal else None

        _dfs(self.graph, v, alpha, visit)
        out = frozenset(found)
        self._reach_vertices[pair] = out
        return out

    def reach_pairs(self, pair: Pair) -> dict[Pair, Path]:
        """All pairs reachable from ``pair`` with the first witness found."""
        hit = self._reach_pairs.get(pair)
        if hit is not None:
            return hit
        v, alpha = pair
        found: dict[Pair, Path] = {}
        g = self.graph

        def visit(vs: list[str], es: list[str], end: str) -> object:
            key = (vs[-1], end)
            if key not in found:
                found[key] = Path(g, tuple(vs), tuple(es))
            return None

        _dfs(g, v, alpha, visit)
        self._reach_pairs[pair] = found
        self._reach_vertices.setdefault(pair, frozenset(x for x, _ in found))
        return found

    def order_lt(self, a: Pair, b: Pair) -> Path | None:
        """Witness path for ``a ⋖ b`` or None."""
        (v, alpha), (u, beta) = a, b
        if v == u:
            return None
        blocked = self.reach_vertices(b)
        if v in blocked:
            return None
        g = self.graph
        allowed = frozenset(g.vertices) - blocked
        result: list[Path] = []

        def visit(vs: list[str], es: list[str], end: str) -> object:
            if vs[-1] == u:
                if end == beta:
                    result.append(Path(g, tuple(vs), tuple(es)))
                    return _STOP
                return _PRUNE
            return None

        _dfs(g, v, alpha, visit, allowed=allowed)
        return result[0] if result else None


# ---------------------------------------------------------------------------
# reachability and order


def cuspfree_reach(graph: LocallyColoredGraph, source: Pair, u: str) -> dict[str, Path]:
    """Colors ``β`` with ``source`` ⟿ ``(u, β)``, each with a witness path."""
    v, alpha = source
    if v == u:
        return {}
    out: dict[str, Path] = {}

    def visit(vs: list[str], es: list[str], end: str) -> object:
        if vs[-1] == u:
            out.setdefault(end, Path(graph, tuple(vs), tuple(es)))
            return _PRUNE
        return None

    _dfs(graph, v, alpha, visit)
    return dict(sorted(out.items()))


def order_lt(
    graph: LocallyColoredGraph, a: Pair, b: Pair, ctx: YeoContext | None = None
) -> tuple[bool, Path | None]:
    w = (ctx or YeoContext(graph)).order_lt(a, b)
    return w is not None, w


# ---------------------------------------------------------------------------
# cycles


def cuspfree_cycle_through(graph: LocallyColoredGraph, e: str) -> Path | None:
    """A cusp-free cycle containing edge ``e``, or None."""
    ends = graph.ends(e)
    if len(ends) != 2:
        return None
    (a, ca), (b, cb) = ends
    result: list[Path] = []

    def visit(vs: list[str], es: list[str], end: str) -> object:
        if vs[-1] == a:
            if end != ca:
                result.append(Path(graph, (a, *vs), (e, *es)))
                return _STOP
            return _PRUNE
        return None

    _dfs(graph, b, cb, visit, banned_edges=(e,))
    return result[0] if result else None


def find_cuspfree_cycle(graph: LocallyColoredGraph) -> Path | None:
    for e in graph.edges:
        c = cuspfree_cycle_through(graph, e)
        if c is not None:
            return c
    return None


def _cycles_from(graph: LocallyColoredGraph, v: str) -> Iterable[Path]:
    """Every cycle with source ``v`` (both orientations)."""
    vs = [v]
    es: list[str] = []
    on = {v}

    def rec(x: str):
        for inc in graph.incident(x):
            y = inc.other
            if y is None or inc.edge in es:
                continue
            if y == v and es:
                yield Path(graph, (*vs, v), (*es, inc.edge))
                continue
            if y in on:
                continue
            vs.append(y)
            es.append(inc.edge)
            on.add(y)
            yield from rec(y)
            vs.pop()
            es.pop()
            on.discard(y)

    yield from rec(v)


def min_cusp_cycles(graph: LocallyColoredGraph, v: str) -> list[Path]:
    """Cycles of source ``v`` with no cusp at ``v`` and a minimal number of cusps."""
    best: list[Path] = []
    best_n: int | None = None
    for c in _cycles_from(graph, v):
        if c.wrap_cusp() is not None:
            continue
        n = c.cusp_count()
        if best_n is None or n < best_n:
            best, best_n = [c], n
        elif n == best_n:
            best.append(c)
    return sorted(best, key=Path.encode)


def is_splitting(graph: LocallyColoredGraph, v: str) -> bool:
    """Every cycle through ``v`` has a cusp at ``v``.

    Equivalently: no two edges at ``v`` with different colors at ``v`` have
    other endpoints that coincide or are joined in ``G - v``.
    """
    comp = vertex_components(graph, removed=frozenset([v]))
    inc = [i for i in graph.incident(v) if i.other is not None]
    for i, a in enumerate(inc):
        for b in inc[i + 1 :]:
            if a.color != b.color and comp[a.other] == comp[b.other]:  # type: ignore[index]
                return False
    return True


def splitting_vertices(graph: LocallyColoredGraph) -> frozenset[str]:
    return frozenset(v for v in graph.vertices if is_splitting(graph, v))


# ---------------------------------------------------------------------------
# cusp minimization


@dataclass(frozen=True)
class MinimizeResult:
    kind: str  # "cusp-free" or "fewer"
    cycle: Path


def _need(cond: bool, clause: str, witness: object = None) -> None:
    if not cond:
        raise PreconditionViolated(clause, witness=witness)


def cusp_minimize(
    graph: LocallyColoredGraph, omega: Path, u: str, alpha: str, q: Path
) -> MinimizeResult:
    """Either a cusp-free cycle containing ``q`` or a cycle from the source of
    ``omega`` with no cusp there and strictly fewer cusps than ``omega``."""
    _need(omega.is_cycle, "omega-cycle", omega)
    _need(omega.wrap_cusp() is None, "no-cusp-at-source", omega)
    _need(any(c.vertex == u and c.color == alpha for c in omega.internal_cusps()), "cusp-at-u", (u, alpha))
    _need(not q.is_empty and q.is_simple and q.is_open, "q-simple-open", q)
    _need(q.is_cusp_free(), "q-cusp-free", q)
    _need(q.source == u, "q-source-u", q)
    _need(q.starting_color != alpha, "q-start-color", q)
    _need(q.target in omega.vertex_set(), "q-ends-on-omega", q)
    _need(
        not (set(q.vertices[1:-1]) & omega.vertex_set()) and not (set(q.edges) & set(omega.edges)),
        "q-meets-omega-only-at-ends",
        q,
    )
    n = len(omega)
    x = q.target
    beta = q.ending_color
    i = omega.vertices.index(u, 1)
    if x == omega.source:
        if omega.starting_color == beta:
            omega = omega.reverse()
            i = n - i
        j = n
    else:
        j = omega.vertices.index(x)
        if j < i:
            omega = omega.reverse()
            i, j = n - i, n - j
    prime = omega.segment(0, i) + q + omega.segment(j, n)
    if prime.cusp_count() < omega.cusp_count():
        assert prime.is_cycle and prime.wrap_cusp() is None
        return MinimizeResult("fewer", prime)
    d = q + omega.segment(i, j).reverse()
    assert d.is_cycle and d.is_cusp_free(), "cusp minimization invariant broken"
    return MinimizeResult("cusp-free", d)


def cusp_minimize2(
    graph: LocallyColoredGraph,
    omega: Path,
    x: str,
    y: str,
    kappa: str,
    rho: Path,
    chi: Path,
    e: str,
    p: Path,
) -> MinimizeResult:
    """Variant where the escape leaves ``omega`` through two side paths ``rho``
    (from ``x``) and ``chi`` (from ``y``) meeting at ``kappa``, then follows
    edge ``e`` and path ``p`` back to the outer arc of ``omega``."""
    _need(omega.is_cycle, "omega-cycle", omega)
    _need(omega.wrap_cusp() is None, "no-cusp-at-source", omega)
    v, n = omega.source, len(omega)
    _need(x in omega.vertices[1:-1] and y in omega.vertices[1:-1], "x-y-on-omega", (x, y))
    ix, iy = omega.vertices.index(x), omega.vertices.index(y)
    _need(ix <= iy, "x-before-y", (x, y))
    _need(
        any(ix <= omega.vertices.index(c.vertex, 1) <= iy for c in omega.internal_cusps()),
        "cusp-between-x-y",
    )
    _need(rho.source == x and rho.target == kappa, "rho-endpoints", rho)
    _need(chi.source == y and chi.target == kappa, "chi-endpoints", chi)
    _need(graph.has_edge(e) and kappa in graph.incidence(e) and len(graph.ends(e)) == 2, "e-endpoints", e)
    l = graph.other_end(e, kappa)
    assert l is not None
    step = Path(graph, (kappa, l), (e,))
    to_x = omega.segment(0, ix)
    from_y = omega.segment(iy, n)
    re = rho + step
    _need(re.is_simple and re.is_open and re.is_cusp_free(), "rho-e-cusp-free", re)
    _need(re.starting_color != to_x.ending_color, "rho-e-start-color", re)
    ce = chi + step
    _need(ce.is_simple and ce.is_open and ce.is_cusp_free(), "chi-e-cusp-free", ce)
    _need(ce.starting_color != from_y.starting_color, "chi-e-start-color", ce)
    outer = set(from_y.vertices) | set(to_x.vertices)
    _need(
        not ((rho.vertex_set() | chi.vertex_set()) & outer - {x, y}),
        "sides-meet-omega-only-at-x-y",
    )
    _need(p.source == l, "p-source-l", p)
    ep = step + p
    _need(ep.is_simple and ep.is_open and ep.is_cusp_free(), "ep-simple-open-cusp-free", ep)
    _need(ep.target in outer, "ep-target-on-omega", ep)
    _need(not (rho.vertex_set() & p.vertex_set()), "rho-p-disjoint", p)
    _need(not (chi.vertex_set() & p.vertex_set()), "chi-p-disjoint", p)

    k = next(i for i, w in enumerate(p.vertices) if w in outer)
    p0 = p.segment(0, k)
    k0 = next(w for w in rho.vertices if w in chi.vertex_set())
    rho0 = rho.segment(0, rho.vertices.index(k0))
    jc = chi.vertices.index(k0)
    chi0, chi1 = chi.segment(0, jc), chi.segment(jc, len(chi))
    prime = to_x + rho0 + chi0.reverse() + from_y
    assert prime.is_cycle and prime.wrap_cusp() is None
    pos = prime.vertices.index(k0, 1)
    c_in = graph.color(prime.edges[pos - 1], k0)
    if c_in != graph.color(prime.edges[pos], k0):
        assert prime.cusp_count() < omega.cusp_count()
        return MinimizeResult("fewer", prime)
    q = chi1 + step + p0
    r = cusp_minimize(graph, prime, k0, c_in, q)
    if r.kind == "fewer":
        assert r.cycle.cusp_count() < omega.cusp_count()
    return r


# ---------------------------------------------------------------------------
# parametrized splitting


@dataclass(frozen=True)
class SplitResult:
    vertex: str
    pair: Pair
    chain: tuple[Pair, ...] = ()


def _ascend(ctx: YeoContext, pairs: Sequence[Pair]) -> SplitResult:
    """Climb ⋖ inside ``pairs`` from the least pair until a maximal one."""
    members = sorted(set(pairs))
    cur = members[0]
    chain = [cur]
    while True:
        reach = ctx.reach_pairs(cur)
        nxt = None
        for cand in members:
            if cand in reach and ctx.order_lt(cur, cand) is not None:
                nxt = cand
                break
        if nxt is None:
            return SplitResult(cur[0], cur, tuple(chain))
        cur = nxt
        chain.append(cur)


def undominated_cusp_point(
    graph: LocallyColoredGraph, pairs: Collection[Pair], ctx: YeoContext | None = None
) -> Pair | None:
    ctx = ctx or YeoContext(graph)
    pset = set(pairs)
    for cp in sorted(graph.cusp_points()):
        if cp in pset:
            continue
        reach = ctx.reach_pairs(cp)
        if not any(q in reach and ctx.order_lt(cp, q) is not None for q in sorted(pset)):
            return cp
    return None


def find_splitting_param(
    graph: LocallyColoredGraph, pairs: Iterable[Pair], *, validate: bool = True
) -> SplitResult:
    """Vertex of a ⋖-maximal element of ``pairs`` (splitting when the
    hypotheses hold)."""
    plist = sorted(set(pairs))
    ctx = YeoContext(graph)
    if validate:
        w = find_cuspfree_cycle(graph)
        if w is not None:
            raise CuspFreeCycleExists("the graph has a cusp-free cycle", w)
    if not plist:
        raise NoPairs("empty set of vertex-color pairs")
    if validate:
        cp = undominated_cusp_point(graph, plist, ctx)
        if cp is not None:
            raise DominationFails(f"cusp-point {cp} is not dominated", cp)
    return _ascend(ctx, plist)


def maximal_pairs(graph: LocallyColoredGraph, pairs: Iterable[Pair]) -> list[Pair]:
    """All ⋖-maximal elements of ``pairs`` (quadratic, for tests and reports)."""
    ctx = YeoContext(graph)
    plist = sorted(set(pairs))
    return [a for a in plist if not any(ctx.order_lt(a, b) is not None for b in plist if b != a)]


def terminal_lemma(graph: LocallyColoredGraph, e: str, v: str) -> tuple[str, object]:
    """For an edge ``e`` at ``v`` whose color at ``v`` is not a cusp-point:
    ``("cycle", c)`` with a cusp-free cycle through ``v``, or ``("order", u)``
    meaning ``(v, α) ⋖ (u, c(e,u))`` for every ``α ≠ c(e, v)``."""
    if (v, graph.color(e, v)) in graph.cusp_points():
        raise PreconditionViolated("not-cusp-point", witness=(v, graph.color(e, v)))
    u = graph.other_end(e, v)
    if u is None:
        raise PreconditionViolated("total-edge", witness=e)
    back = YeoContext(graph).reach_pairs((u, graph.color(e, u)))
    for (x, _), p in sorted(back.items()):
        if x == v:
            return "cycle", Path(graph, (v, u), (e,)) + p
    return "order", u


# ---------------------------------------------------------------------------
# maximal connected unions of cusp-free cycles and exit functions


@dataclass(frozen=True)
class CycleUnion:
    vertices: frozenset[str]
    edges: frozenset[str]
    connected: bool = True
    maximal: bool = True

    def key(self) -> tuple[str, ...]:
        return tuple(sorted(self.vertices))


def max_cuspfree_unions(graph: LocallyColoredGraph) -> list[CycleUnion]:
    """The set of maximal connected unions of cusp-free cycles.

    An edge belongs to the union of all cusp-free cycles iff some cusp-free
    cycle runs through it; the maximal connected unions are then the connected
    components of that union.
    """
    on = [e for e in graph.edges if cuspfree_cycle_through(graph, e) is not None]
    sub = graph.subgraph({v for e in on for v in graph.incidence(e)}, on)
    comp = vertex_components(sub)
    groups: dict[int, tuple[set[str], set[str]]] = {}
    for v, k in comp.items():
        groups.setdefault(k, (set(), set()))[0].add(v)
    for e in on:
        groups[comp[graph.ends(e)[0][0]]][1].add(e)
    out = [CycleUnion(frozenset(vs), frozenset(es)) for vs, es in groups.values()]
    return sorted(out, key=CycleUnion.key)


def is_arrow_connected(
    graph: LocallyColoredGraph, vertices: Iterable[str], edges: Iterable[str]
) -> bool:
    sub = graph.subgraph(vertices, edges)
    colors = graph.colors or ("",)
    for v in sub.vertices:
        for alpha in colors:
            seen = {x for x, _ in YeoContext(sub).reach_pairs((v, alpha))}
            if len(seen) < len(sub.vertices) - 1:
                return False
    return True


@dataclass(frozen=True)
class ExitEdge:
    edge: str
    inside: str
    outside: str


ExitFunction = Mapping[CycleUnion, ExitEdge]


def exit_from_edges(
    graph: LocallyColoredGraph, edges: Iterable[str], unions: Sequence[CycleUnion] | None = None
) -> dict[CycleUnion, ExitEdge]:
    """Build an exit function from a set of chosen edges, one leaving each union."""
    unions = max_cuspfree_unions(graph) if unions is None else unions
    chosen = sorted(edges)
    out: dict[CycleUnion, ExitEdge] = {}
    for om in unions:
        for e in chosen:
            ends = graph.ends(e)
            if len(ends) != 2:
                continue
            (a, _), (b, _) = ends
            if (a in om.vertices) != (b in om.vertices):
                inside, outside = (a, b) if a in om.vertices else (b, a)
                out[om] = ExitEdge(e, inside, outside)
                break
        else:
            raise PreconditionViolated("exit-defined", witness=om)
    return out


def p_out(graph: LocallyColoredGraph, exits: ExitFunction) -> frozenset[Pair]:
    return frozenset((x.inside, graph.color(x.edge, x.inside)) for x in exits.values())


def check_exit_function(
    graph: LocallyColoredGraph, exits: ExitFunction, unions: Sequence[CycleUnion]
) -> None:
    cps = graph.cusp_points()
    for om in unions:
        x = exits.get(om)
        if x is None:
            raise PreconditionViolated("exit-defined", witness=om)
        if graph.incidence(x.edge) != {x.inside, x.outside} or x.inside not in om.vertices or x.outside in om.vertices:
            raise PreconditionViolated("exit-edge-leaves-union", witness=(om, x))
        if (x.inside, graph.color(x.edge, x.inside)) in cps:
            raise ExitHypothesisFails("H1", "inside end of the exit edge is a cusp-point", om)
        if (x.outside, graph.color(x.edge, x.outside)) not in cps:
            raise ExitHypothesisFails("H2", "outside end of the exit edge is not a cusp-point", om)


def find_splitting_mall_graph(
    graph: LocallyColoredGraph,
    exits: ExitFunction,
    pairs: Iterable[Pair],
    *,
    unions: Sequence[CycleUnion] | None = None,
    validate: bool = True,
) -> SplitResult:
    """Splitting vertex of a graph that may contain cusp-free cycles, given an
    exit function for its maximal connected unions of cusp-free cycles."""
    plist = sorted(set(pairs))
    ctx = YeoContext(graph)
    if validate:
        unions = max_cuspfree_unions(graph) if unions is None else unions
        check_exit_function(graph, exits, unions)
        bad = sorted(set(plist) & p_out(graph, exits))
        if bad:
            raise POverlapsPout(f"pair {bad[0]} is the inside end of an exit edge", bad[0])
    if not plist:
        raise NoPairs("empty set of vertex-color pairs")
    if validate:
        cp = undominated_cusp_point(graph, plist, ctx)
        if cp is not None:
            raise DominationFails(f"cusp-point {cp} is not dominated", cp)
    return _ascend(ctx, plist)


__all__ = [
    "Cusp",
    "CycleUnion",
    "ExitEdge",
    "MinimizeResult",
    "SplitResult",
    "YeoContext",
    "check_exit_function",
    "cusp_minimize",
    "cusp_minimize2",
    "cuspfree_cycle_through",
    "cuspfree_reach",
    "exit_from_edges",
    "find_cuspfree_cycle",
    "find_splitting_mall_graph",
    "find_splitting_param",
    "is_arrow_connected",
    "is_splitting",
    "max_cuspfree_unions",
    "maximal_pairs",
    "min_cusp_cycles",
    "order_lt",
    "p_out",
    "splitting_vertices",
    "terminal_lemma",
    "undominated_cusp_point",
]
