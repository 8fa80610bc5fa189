"""Classical splitting theorems obtained from the local Yeo theorem.

Each function builds a dedicated local coloring of its input, checks the
theorem's hypothesis by searching for a cusp-free cycle, then asks the engine
for a splitting vertex and reads the conclusion off it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping, Sequence

from .errors import (
    AlternatingCycleExists,
    ConformalCycleExists,
    CycleWithoutTurningInS,
    EmptyGraph,
    HCycleExists,
    InputError,
    LoopEdge,
    MatchingNotUnique,
    NotCompleteMultipartite,
    NotPerfectMatching,
    PartialEdge,
    SEmpty,
    UnknownVertex,
)
from .graph import LocallyColoredGraph, Path, build_graph, vertex_components
from .yeo import find_cuspfree_cycle, find_splitting_param


def _require_total(graph: LocallyColoredGraph) -> None:
    for e in graph.edges:
        if len(graph.ends(e)) != 2:
            raise PartialEdge(f"edge {e!r} has fewer than two endpoints", e)


def _require_nonempty(graph: LocallyColoredGraph) -> None:
    if not graph.vertices:
        raise EmptyGraph("the graph has no vertex")


def _any_splitting(graph: LocallyColoredGraph) -> str:
    # without colors there are no edges, hence no cycles: every vertex splits
    if not graph.colors:
        return min(graph.vertices)
    return find_splitting_param(graph, graph.all_pairs(), validate=False).vertex


def is_bridge(graph: LocallyColoredGraph, e: str) -> bool:
    ends = graph.ends(e)
    if len(ends) < 2:
        return True
    comp = vertex_components(graph, removed_edges=frozenset([e]))
    return comp[ends[0][0]] != comp[ends[1][0]]


# ---------------------------------------------------------------------------
# encoding a local coloring as an edge-coloring


@dataclass(frozen=True)
class Encoding:
    graph: LocallyColoredGraph
    added: frozenset[str]
    # original edge -> the two halves replacing it (only for subdivided edges)
    halves: Mapping[str, tuple[str, str]] = field(default_factory=dict)

    @property
    def originals(self) -> frozenset[str]:
        return frozenset(self.graph.vertices) - self.added


def encode_local_as_edge(graph: LocallyColoredGraph) -> Encoding:
    """Edge-colored graph with the same cusp-free cycles and splitting vertices.

    Edges with equal colors at both ends are kept.  A bicolored edge lying on
    a cycle is subdivided by a new vertex, each half taking the color of its
    original end.  A bicolored bridge is kept with the color of its first end.
    """
    _require_total(graph)
    taken = set(graph.vertices) | set(graph.edges)

    def fresh(base: str) -> str:
        name = base
        k = 0
        while name in taken:
            k += 1
            name = f"{base}~{k}"
        taken.add(name)
        return name

    vertices = list(graph.vertices)
    edges: list[tuple[str, list[tuple[str, str]]]] = []
    added: set[str] = set()
    halves: dict[str, tuple[str, str]] = {}
    for e in graph.edges:
        (a, ca), (b, cb) = graph.ends(e)
        if ca == cb or is_bridge(graph, e):
            edges.append((e, [(a, ca), (b, ca)]))
            continue
        s = fresh(f"sq:{e}")
        e0, e1 = fresh(f"{e}.0"), fresh(f"{e}.1")
        vertices.append(s)
        added.add(s)
        halves[e] = (e0, e1)
        edges.append((e0, [(a, ca), (s, ca)]))
        edges.append((e1, [(s, cb), (b, cb)]))
    return Encoding(build_graph(vertices, edges), frozenset(added), halves)


# ---------------------------------------------------------------------------
# Yeo, Grossman-Haggkvist


def yeo_classic(graph: LocallyColoredGraph) -> str:
    """Vertex ``v`` such that no component of ``G - v`` is joined to ``v`` by
    edges of two different colors, for an edge-colored graph without
    alternating cycle."""
    _require_nonempty(graph)
    _require_total(graph)
    if not graph.is_edge_coloring():
        raise InputError("the coloring is not an edge-coloring")
    w = find_cuspfree_cycle(graph)
    if w is not None:
        raise AlternatingCycleExists("the graph has an alternating cycle", w)
    return _any_splitting(graph)


@dataclass(frozen=True)
class GHResult:
    kind: str  # "splitting" or "cycle"
    vertex: str | None = None
    cycle: Path | None = None


def grossman_haggkvist(graph: LocallyColoredGraph) -> GHResult:
    """A splitting vertex or an alternating cycle, for a 2-edge-colored graph."""
    _require_nonempty(graph)
    _require_total(graph)
    if not graph.is_edge_coloring() or len(graph.colors) > 2:
        raise InputError("expected an edge-coloring with at most two colors")
    w = find_cuspfree_cycle(graph)
    if w is not None:
        return GHResult("cycle", cycle=w)
    return GHResult("splitting", vertex=_any_splitting(graph))


# ---------------------------------------------------------------------------
# Kotzig


def matching_coloring(graph: LocallyColoredGraph, matching: Iterable[str]) -> LocallyColoredGraph:
    f = set(matching)
    return graph.recolored({(e, v): ("1" if e in f else "0") for e in graph.edges for v, _ in graph.ends(e)})


def check_perfect_matching(graph: LocallyColoredGraph, matching: Iterable[str]) -> frozenset[str]:
    f = frozenset(matching)
    for e in f:
        if not graph.has_edge(e):
            raise NotPerfectMatching(f"unknown edge {e!r}", e)
    cover: dict[str, int] = {v: 0 for v in graph.vertices}
    for e in f:
        for v, _ in graph.ends(e):
            cover[v] += 1
    for v in graph.vertices:
        if cover[v] != 1:
            raise NotPerfectMatching(f"vertex {v!r} is covered {cover[v]} times", v)
    return f


def kotzig(graph: LocallyColoredGraph, matching: Iterable[str]) -> str:
    """A bridge in the unique perfect matching ``matching``."""
    _require_nonempty(graph)
    _require_total(graph)
    f = check_perfect_matching(graph, matching)
    colored = matching_coloring(graph, f)
    w = find_cuspfree_cycle(colored)
    if w is not None:
        raise MatchingNotUnique("an alternating cycle exists", w)
    v = _any_splitting(colored)
    return next(i.edge for i in colored.incident(v) if i.edge in f)


# ---------------------------------------------------------------------------
# Seymour-Giles


def phi_coloring(graph: LocallyColoredGraph, phi: Mapping[str, str]) -> LocallyColoredGraph:
    for v in graph.vertices:
        e = phi.get(v)
        if e is None or not graph.has_edge(e) or v not in graph.incidence(e):
            raise InputError(f"phi({v}) must be an edge incident to {v}", v)
    return graph.recolored({(e, v): ("1" if phi[v] == e else "0") for e in graph.edges for v, _ in graph.ends(e)})


def seymour_giles(graph: LocallyColoredGraph, phi: Mapping[str, str]) -> str:
    """Vertex ``u`` such that ``phi(u)`` is a bridge, when no cycle is
    ``phi``-conformal."""
    _require_nonempty(graph)
    _require_total(graph)
    colored = phi_coloring(graph, phi)
    w = find_cuspfree_cycle(colored)
    if w is not None:
        raise ConformalCycleExists("a phi-conformal cycle exists", w)
    return _any_splitting(colored)


# ---------------------------------------------------------------------------
# Shoesmith-Smiley


@dataclass(frozen=True)
class DirectedGraph:
    vertices: tuple[str, ...]
    arcs: Mapping[str, tuple[str, str]]  # edge -> (source, target)

    @staticmethod
    def build(vertices: Iterable[str], arcs: Iterable[tuple[str, str, str]]) -> DirectedGraph:
        vs = tuple(sorted(set(vertices)))
        amap: dict[str, tuple[str, str]] = {}
        for e, s, t in arcs:
            if s not in vs or t not in vs:
                raise UnknownVertex(f"arc {e!r} uses an undeclared vertex", e)
            if s == t:
                raise LoopEdge(f"arc {e!r} is a loop", e)
            amap[e] = (s, t)
        return DirectedGraph(vs, amap)

    @staticmethod
    def from_json(data: Mapping[str, Any]) -> DirectedGraph:
        return DirectedGraph.build(
            [str(v) for v in data.get("vertices", [])],
            [(str(a["id"]), str(a["src"]), str(a["tgt"])) for a in data.get("edges", [])],
        )

    def underlying(self, color: Mapping[tuple[str, str], str] | None = None) -> LocallyColoredGraph:
        color = color or {}
        return build_graph(
            self.vertices,
            [(e, [(s, color.get((e, s), "0")), (t, color.get((e, t), "0"))]) for e, (s, t) in sorted(self.arcs.items())],
        )

    def is_turning(self, cycle: Path, v: str) -> bool:
        """Both edges of the cycle at ``v`` leave ``v`` or both enter it."""
        es = cycle.edges
        n = len(es)
        idx = [i for i in range(n) if cycle.vertices[i] == v]
        if not idx:
            return False
        i = idx[0]
        a, b = es[i - 1], es[i]
        return (self.arcs[a][0] == v) == (self.arcs[b][0] == v)


def turning_coloring(dg: DirectedGraph, s: Iterable[str]) -> LocallyColoredGraph:
    sset = set(s)
    col: dict[tuple[str, str], str] = {}
    for e, (a, b) in dg.arcs.items():
        col[(e, a)] = "out" if a in sset else f"e:{e}"
        col[(e, b)] = "in" if b in sset else f"e:{e}"
    return dg.underlying(col)


def shoesmith_smiley(dg: DirectedGraph, s: Iterable[str]) -> str:
    """Vertex of ``s`` that is a turning vertex of every cycle through it."""
    sset = sorted(set(s))
    if not sset:
        raise SEmpty("S is empty")
    for v in sset:
        if v not in dg.vertices:
            raise UnknownVertex(f"{v!r} is not a vertex", v)
    colored = turning_coloring(dg, sset)
    w = find_cuspfree_cycle(colored)
    if w is not None:
        raise CycleWithoutTurningInS("a cycle has no turning vertex in S", w)
    pairs = [(v, a) for v in sset for a in ("in", "out")]
    return find_splitting_param(colored, pairs, validate=False).vertex


# ---------------------------------------------------------------------------
# H-colorings


@dataclass(frozen=True)
class HColoring:
    """Pattern graph ``H`` on the color set, and ``G`` edge-colored by it."""

    h_vertices: frozenset[str]
    h_edges: frozenset[frozenset[str]]

    @staticmethod
    def build(vertices: Iterable[str], edges: Iterable[Sequence[str]]) -> HColoring:
        vs = frozenset(vertices)
        es = set()
        for a, b in edges:
            if a not in vs or b not in vs:
                raise UnknownVertex(f"H edge {a}-{b} uses an undeclared color")
            if a != b:
                es.add(frozenset((a, b)))
        return HColoring(vs, frozenset(es))

    def linked(self, a: str, b: str) -> bool:
        return frozenset((a, b)) in self.h_edges


def _edge_color(graph: LocallyColoredGraph, e: str) -> str:
    return graph.ends(e)[0][1]


def h_classes(graph: LocallyColoredGraph, h: HColoring, v: str) -> dict[str, str]:
    """Independent class of each edge at ``v`` in ``G_v``, named by its least color.

    Raises NotCompleteMultipartite when non-adjacency in ``G_v`` is not an
    equivalence relation.
    """
    inc = [i.edge for i in graph.incident(v)]
    cols = sorted({_edge_color(graph, e) for e in inc})

    def same(c: str, d: str) -> bool:
        return c == d or not h.linked(c, d)

    for c in cols:
        for d in cols:
            for x in cols:
                if same(c, d) and same(d, x) and not same(c, x):
                    raise NotCompleteMultipartite(f"G_{v} is not complete multipartite", (v, c, d, x))
    cls = {c: min(d for d in cols if same(c, d)) for c in cols}
    return {e: cls[_edge_color(graph, e)] for e in inc}


def h_local_coloring(graph: LocallyColoredGraph, h: HColoring) -> LocallyColoredGraph:
    for e in graph.edges:
        if _edge_color(graph, e) not in h.h_vertices:
            raise InputError(f"edge {e!r} has a color outside H", e)
    col: dict[tuple[str, str], str] = {}
    for v in graph.vertices:
        for e, c in h_classes(graph, h, v).items():
            col[(e, v)] = c
    return graph.recolored(col)


def h_yeo(graph: LocallyColoredGraph, h: HColoring) -> str:
    """Vertex ``v`` such that each component of ``G - v`` meets ``v`` through
    an independent set of ``G_v``."""
    _require_nonempty(graph)
    _require_total(graph)
    if not graph.is_edge_coloring():
        raise InputError("an H-coloring is an edge-coloring")
    colored = h_local_coloring(graph, h)
    w = find_cuspfree_cycle(colored)
    if w is not None:
        raise HCycleExists("an H-cycle exists", w)
    return _any_splitting(colored)


__all__ = [
    "DirectedGraph",
    "Encoding",
    "GHResult",
    "HColoring",
    "encode_local_as_edge",
    "grossman_haggkvist",
    "h_classes",
    "h_local_coloring",
    "h_yeo",
    "is_bridge",
    "kotzig",
    "matching_coloring",
    "phi_coloring",
    "seymour_giles",
    "shoesmith_smiley",
    "turning_coloring",
    "yeo_classic",
]
