"""Locally colored partial multigraphs, paths and cusps.

A graph value is immutable after construction.  Vertex, edge and color ids are
strings; every iteration order exposed by this module is sorted by id so that
results are deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator, Mapping, Sequence

from .errors import (
    DuplicateId,
    EndpointMismatch,
    LoopEdge,
    MissingColor,
    NotAlternating,
    OccurrenceOrder,
    TooManyEnds,
    UnknownVertex,
)

End = tuple[str, str]  # (vertex, color at that vertex)


@dataclass(frozen=True, order=True)
class Cusp:
    left: str
    vertex: str
    right: str
    color: str


@dataclass(frozen=True)
class Incidence:
    """One edge seen from one of its endpoints."""

    edge: str
    color: str
    other: str | None
    other_color: str | None


class LocallyColoredGraph:
    """Finite undirected partial multigraph with a color per (edge, endpoint)."""

    __slots__ = ("vertices", "edges", "colors", "_ends", "_inc", "_vset")

    def __init__(
        self,
        vertices: Iterable[str],
        ends: Mapping[str, Sequence[End]],
        colors: Iterable[str] | None = None,
        *,
        validate: bool = True,
    ) -> None:
        vlist = list(vertices)
        vset = frozenset(vlist)
        if validate:
            if len(vset) != len(vlist):
                dup = sorted(v for v in vset if vlist.count(v) > 1)
                raise DuplicateId(f"duplicate vertex id {dup[0]!r}", dup[0])
            palette = None if colors is None else frozenset(colors)
            for e, es in ends.items():
                if len(es) > 2:
                    raise TooManyEnds(f"edge {e!r} has {len(es)} endpoints", e)
                for v, c in es:
                    if v not in vset:
                        raise UnknownVertex(f"edge {e!r} references unknown vertex {v!r}", v)
                    if c is None or c == "":
                        raise MissingColor(f"edge {e!r} has no color at {v!r}", (e, v))
                    if palette is not None and c not in palette:
                        raise MissingColor(f"color {c!r} of edge {e!r} at {v!r} is not declared", (e, v))
                if len(es) == 2 and es[0][0] == es[1][0]:
                    raise LoopEdge(f"edge {e!r} is a loop on {es[0][0]!r}", e)
        self._vset = vset
        self.vertices: tuple[str, ...] = tuple(sorted(vset))
        self.edges: tuple[str, ...] = tuple(sorted(ends))
        self._ends: dict[str, tuple[End, ...]] = {e: tuple(ends[e]) for e in self.edges}
        used = {c for es in self._ends.values() for _, c in es}
        self.colors: tuple[str, ...] = tuple(sorted(used | set(colors or ())))
        inc: dict[str, list[Incidence]] = {v: [] for v in self.vertices}
        for e in self.edges:
            es = self._ends[e]
            if len(es) == 1:
                inc[es[0][0]].append(Incidence(e, es[0][1], None, None))
            elif len(es) == 2:
                (a, ca), (b, cb) = es
                inc[a].append(Incidence(e, ca, b, cb))
                inc[b].append(Incidence(e, cb, a, ca))
        self._inc: dict[str, tuple[Incidence, ...]] = {v: tuple(lst) for v, lst in inc.items()}

    # -- basic accessors -------------------------------------------------
    def has_vertex(self, v: str) -> bool:
        return v in self._vset

    def has_edge(self, e: str) -> bool:
        return e in self._ends

    def ends(self, e: str) -> tuple[End, ...]:
        return self._ends[e]

    def incidence(self, e: str) -> frozenset[str]:
        return frozenset(v for v, _ in self._ends[e])

    def color(self, e: str, v: str) -> str:
        for w, c in self._ends[e]:
            if w == v:
                return c
        raise KeyError((e, v))

    def other_end(self, e: str, v: str) -> str | None:
        es = self._ends[e]
        if len(es) == 2:
            if es[0][0] == v:
                return es[1][0]
            if es[1][0] == v:
                return es[0][0]
        elif len(es) == 1 and es[0][0] == v:
            return None
        raise KeyError((e, v))

    def incident(self, v: str) -> tuple[Incidence, ...]:
        return self._inc[v]

    def degree(self, v: str) -> int:
        return len(self._inc[v])

    def is_total(self) -> bool:
        return all(len(es) == 2 for es in self._ends.values())

    def is_edge_coloring(self) -> bool:
        return all(len({c for _, c in es}) <= 1 for es in self._ends.values())

    def __len__(self) -> int:
        return len(self.vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LocallyColoredGraph):
            return NotImplemented
        return (
            self.vertices == other.vertices
            and self._ends == other._ends
            and self.colors == other.colors
        )

    def __hash__(self) -> int:
        return hash((self.vertices, tuple(self._ends.items())))

    def __repr__(self) -> str:
        return f"LocallyColoredGraph({len(self.vertices)} vertices, {len(self.edges)} edges)"

    # -- cusps -----------------------------------------------------------
    def cusps_at(self, v: str) -> list[Cusp]:
        inc = self._inc[v]
        out = []
        for a in inc:
            for b in inc:
                if a.edge != b.edge and a.color == b.color:
                    out.append(Cusp(a.edge, v, b.edge, a.color))
        return out

    def cusp_points(self) -> frozenset[tuple[str, str]]:
        pts = set()
        for v in self.vertices:
            seen: set[str] = set()
            for i in self._inc[v]:
                if i.color in seen:
                    pts.add((v, i.color))
                seen.add(i.color)
        return frozenset(pts)

    def all_pairs(self) -> list[tuple[str, str]]:
        return [(v, c) for v in self.vertices for c in self.colors]

    # -- derived graphs ----------------------------------------------------
    def subgraph(self, vertices: Iterable[str], edges: Iterable[str]) -> LocallyColoredGraph:
        """Sub-graph given by vertex and edge sets: incidences are intersected."""
        vs = frozenset(vertices) & self._vset
        ends = {
            e: tuple((v, c) for v, c in self._ends[e] if v in vs)
            for e in edges
            if e in self._ends
        }
        return LocallyColoredGraph(sorted(vs), ends, self.colors, validate=False)

    def recolored(self, coloring: Mapping[tuple[str, str], str]) -> LocallyColoredGraph:
        ends = {e: tuple((v, coloring[(e, v)]) for v, _ in es) for e, es in self._ends.items()}
        return LocallyColoredGraph(self.vertices, ends, validate=False)

    # -- interchange ---------------------------------------------------------
    def to_json(self) -> dict[str, Any]:
        return {
            "vertices": list(self.vertices),
            "colors": list(self.colors),
            "edges": [
                {"id": e, "ends": [{"v": v, "color": c} for v, c in self._ends[e]]}
                for e in self.edges
            ],
        }


def build_graph(
    vertices: Iterable[str],
    edges: Iterable[tuple[str, Sequence[End]]],
    colors: Iterable[str] | None = None,
) -> LocallyColoredGraph:
    """Validate and build a graph from ``(edge id, [(vertex, color), ...])`` specs."""
    ends: dict[str, tuple[End, ...]] = {}
    for e, es in edges:
        if e in ends:
            raise DuplicateId(f"duplicate edge id {e!r}", e)
        ends[e] = tuple((v, c) for v, c in es)
    vlist = list(vertices)
    clash = set(vlist) & set(ends)
    if clash:
        raise DuplicateId(f"id {sorted(clash)[0]!r} used for a vertex and an edge", sorted(clash)[0])
    return LocallyColoredGraph(vlist, ends, colors)


def graph_from_json(data: Mapping[str, Any]) -> LocallyColoredGraph:
    edges = []
    for spec in data.get("edges", []):
        edges.append((str(spec["id"]), [(str(x["v"]), x.get("color")) for x in spec.get("ends", [])]))
    colors = data.get("colors")
    return build_graph([str(v) for v in data.get("vertices", [])], edges, colors)


def edge_colored(
    vertices: Iterable[str],
    edges: Iterable[tuple[str, str, str, str]],
) -> LocallyColoredGraph:
    """Lift an edge-coloring ``(id, u, v, color)`` to the constant local coloring."""
    return build_graph(vertices, [(e, [(u, c), (v, c)]) for e, u, v, c in edges])


# ---------------------------------------------------------------------------
# paths


@dataclass(frozen=True)
class Path:
    """Alternating sequence ``v0, e1, v1, ..., en, vn`` in a host graph."""

    graph: LocallyColoredGraph = field(compare=False, repr=False, hash=False)
    vertices: tuple[str, ...]
    edges: tuple[str, ...]

    @staticmethod
    def from_sequence(graph: LocallyColoredGraph, seq: Sequence[str]) -> Path:
        if len(seq) % 2 == 0:
            raise NotAlternating("a path alternates vertices and edges and has odd length")
        vs = tuple(seq[0::2])
        es = tuple(seq[1::2])
        for v in vs:
            if not graph.has_vertex(v):
                raise NotAlternating(f"{v!r} is not a vertex", v)
        for e in es:
            if not graph.has_edge(e):
                raise NotAlternating(f"{e!r} is not an edge", e)
        for i, e in enumerate(es):
            a, b = vs[i], vs[i + 1]
            if a == b or graph.incidence(e) != {a, b}:
                raise EndpointMismatch(f"edge {e!r} does not join {a!r} and {b!r}", e)
        return Path(graph, vs, es)

    @staticmethod
    def trivial(graph: LocallyColoredGraph, v: str) -> Path:
        return Path(graph, (v,), ())

    def sequence(self) -> list[str]:
        out = [self.vertices[0]]
        for e, v in zip(self.edges, self.vertices[1:]):
            out += [e, v]
        return out

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def source(self) -> str:
        return self.vertices[0]

    @property
    def target(self) -> str:
        return self.vertices[-1]

    @property
    def is_empty(self) -> bool:
        return not self.edges

    @property
    def is_closed(self) -> bool:
        return self.source == self.target

    @property
    def is_open(self) -> bool:
        return not self.is_closed

    @property
    def is_simple(self) -> bool:
        if len(set(self.edges)) != len(self.edges):
            return False
        inner = self.vertices[:-1] if self.is_closed and self.edges else self.vertices
        return len(set(inner)) == len(inner)

    @property
    def is_cycle(self) -> bool:
        return bool(self.edges) and self.is_closed and self.is_simple

    @property
    def starting_color(self) -> str | None:
        return self.graph.color(self.edges[0], self.vertices[0]) if self.edges else None

    @property
    def ending_color(self) -> str | None:
        return self.graph.color(self.edges[-1], self.vertices[-1]) if self.edges else None

    def internal_cusps(self) -> list[Cusp]:
        g = self.graph
        out = []
        for i in range(1, len(self.edges)):
            e, f, v = self.edges[i - 1], self.edges[i], self.vertices[i]
            if e != f:
                c = g.color(e, v)
                if c == g.color(f, v):
                    out.append(Cusp(e, v, f, c))
        return out

    def wrap_cusp(self) -> Cusp | None:
        if not self.edges or not self.is_closed:
            return None
        e, f, v = self.edges[-1], self.edges[0], self.vertices[0]
        if e == f:
            return None
        c = self.graph.color(e, v)
        return Cusp(e, v, f, c) if c == self.graph.color(f, v) else None

    def cusps(self) -> list[Cusp]:
        out = self.internal_cusps()
        w = self.wrap_cusp()
        if w is not None:
            out.append(w)
        return out

    def cusp_count(self) -> int:
        return len(self.cusps())

    def is_cusp_free(self) -> bool:
        return not self.cusps()

    def has_cusp_at(self, v: str) -> bool:
        return any(c.vertex == v for c in self.cusps())

    def reverse(self) -> Path:
        return Path(self.graph, self.vertices[::-1], self.edges[::-1])

    def concat(self, other: Path) -> Path:
        if self.target != other.source:
            raise EndpointMismatch(f"cannot concatenate: {self.target!r} != {other.source!r}")
        return Path(self.graph, self.vertices + other.vertices[1:], self.edges + other.edges)

    def __add__(self, other: Path) -> Path:
        return self.concat(other)

    def segment(self, i: int, j: int) -> Path:
        """Sub-path between vertex occurrences ``i <= j`` (positional)."""
        if not 0 <= i <= j < len(self.vertices):
            raise OccurrenceOrder(f"occurrence {i} does not precede occurrence {j}")
        return Path(self.graph, self.vertices[i : j + 1], self.edges[i:j])

    def index(self, v: str, start: int = 0) -> int:
        return self.vertices.index(v, start)

    def subpath(self, v: str, u: str) -> Path:
        """Sub-path from the first occurrence of ``v`` to the next occurrence of ``u``."""
        try:
            i = self.vertices.index(v)
        except ValueError:
            raise OccurrenceOrder(f"{v!r} does not occur in the path") from None
        try:
            j = self.vertices.index(u, i)
        except ValueError:
            raise OccurrenceOrder(f"{u!r} does not occur after {v!r}") from None
        return self.segment(i, j)

    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)

    def encode(self) -> tuple[str, ...]:
        return tuple(self.sequence())

    def __repr__(self) -> str:
        return "Path(" + ",".join(self.sequence()) + ")"


@dataclass(frozen=True)
class PathFlags:
    simple: bool
    open: bool
    closed: bool
    cycle: bool


def path_validate(graph: LocallyColoredGraph, raw: Sequence[str]) -> tuple[Path, PathFlags]:
    p = Path.from_sequence(graph, raw)
    return p, PathFlags(p.is_simple, p.is_open, p.is_closed, p.is_cycle)


@dataclass(frozen=True)
class ConcatReport:
    path: Path
    lemma_shared_endpoints: bool  # preconditions of the simple-paths lemma
    lemma_disjoint: bool  # preconditions of the disjoint simple-paths lemma
    simple: bool


def concat_report(p1: Path, p2: Path) -> ConcatReport:
    """Concatenate and report which simplicity lemma applies."""
    r = p1.concat(p2)
    common = p1.vertex_set() & p2.vertex_set()
    shared = (
        p1.is_simple
        and p2.is_simple
        and p1.is_open
        and p2.is_open
        and common <= {p1.target, p1.source}
        and p1.target in common
        and (p1.source not in common or p1.source == p2.target)
        and p1.edges[-1] != p2.edges[0]
    )
    disjoint = (
        p1.is_simple
        and p2.is_simple
        and (p1.is_open or p1.is_empty)
        and (p2.is_open or p2.is_empty)
        and common == {p1.target}
    )
    return ConcatReport(r, shared, disjoint, r.is_simple)


# ---------------------------------------------------------------------------
# connectedness


@dataclass(frozen=True, order=True)
class Component:
    vertices: frozenset[str]
    edges: frozenset[str]

    def key(self) -> tuple[str, ...]:
        return tuple(sorted(self.vertices) or sorted(self.edges))


def vertex_components(graph: LocallyColoredGraph, removed: frozenset[str] = frozenset(),
                      removed_edges: frozenset[str] = frozenset()) -> dict[str, int]:
    """Map each remaining vertex to a component index (BFS)."""
    comp: dict[str, int] = {}
    n = 0
    for s in graph.vertices:
        if s in comp or s in removed:
            continue
        comp[s] = n
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for inc in graph.incident(x):
                y = inc.other
                if y is None or y in removed or y in comp or inc.edge in removed_edges:
                    continue
                comp[y] = n
                queue.append(y)
        n += 1
    return comp


def connected_components(graph: LocallyColoredGraph) -> list[Component]:
    comp = vertex_components(graph)
    groups: dict[int, tuple[set[str], set[str]]] = {}
    for v, k in comp.items():
        groups.setdefault(k, (set(), set()))[0].add(v)
    singles = []
    for e in graph.edges:
        es = graph.ends(e)
        if not es:
            singles.append(Component(frozenset(), frozenset([e])))
        else:
            groups[comp[es[0][0]]][1].add(e)
    out = [Component(frozenset(vs), frozenset(es)) for vs, es in groups.values()] + singles
    return sorted(out, key=Component.key)


def is_connected(graph: LocallyColoredGraph) -> bool:
    return len(connected_components(graph)) == 1


def iter_simple_paths_between(graph: LocallyColoredGraph, s: str, t: str) -> Iterator[Path]:
    """All simple open paths from ``s`` to ``t`` (no color constraint)."""
    if s == t:
        return
    vs = [s]
    es: list[str] = []
    visited = {s}

    def rec(x: str) -> Iterator[Path]:
        for inc in graph.incident(x):
            y = inc.other
            if y is None or y in visited:
                continue
            vs.append(y)
            es.append(inc.edge)
            if y == t:
                yield Path(graph, tuple(vs), tuple(es))
            else:
                visited.add(y)
                yield from rec(y)
                visited.discard(y)
            vs.pop()
            es.pop()

    yield from rec(s)
