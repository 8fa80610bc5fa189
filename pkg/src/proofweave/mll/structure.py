"""Multiplicative proof structures: validation, coloring, correctness.

A proof structure is a directed acyclic partial graph.  Each edge has an
optional source (the vertex it is a conclusion of) and an optional target
(the vertex it is a premise of).  Vertices keep their premises and
conclusions in order, which fixes the left and right premise of ⊗ and ⅋.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping, Sequence

import networkx as nx

from ..errors import (
    ArityViolation,
    DirectedCycle,
    DuplicateId,
    InputError,
    LocationClash,
    ParseError,
    TypeMismatch,
    UnknownVertex,
)
from ..formula import Formula, dual, par, parse_formula, tensor
from ..graph import LocallyColoredGraph, Path, build_graph, connected_components
from ..yeo import find_cuspfree_cycle
from .derivation import Derivation, Occ

KINDS = ("ax", "cut", "tensor", "par")
ARITY = {"ax": (0, 2), "cut": (2, 0), "tensor": (2, 1), "par": (2, 1)}

SOLID, DOTTED, DASHED = "solid", "dotted", "dashed"
PALETTE = (DASHED, DOTTED, SOLID)


@dataclass(frozen=True)
class PSEdge:
    id: str
    src: str | None
    tgt: str | None
    type: Formula | None
    loc: str | None = None


@dataclass(frozen=True)
class PSVertex:
    id: str
    kind: str
    premises: tuple[str, ...]
    conclusions: tuple[str, ...]


@dataclass(frozen=True)
class ProofStructure:
    vertices: Mapping[str, PSVertex]
    edges: Mapping[str, PSEdge]
    untyped: bool = False
    _graph: list = field(default_factory=list, compare=False, repr=False)

    # -- accessors -------------------------------------------------------
    def vertex_ids(self) -> list[str]:
        return sorted(self.vertices)

    def edge_ids(self) -> list[str]:
        return sorted(self.edges)

    def kind(self, v: str) -> str:
        return self.vertices[v].kind

    def hypotheses(self) -> list[str]:
        return sorted(e for e, x in self.edges.items() if x.src is None)

    def conclusions(self) -> list[str]:
        return sorted(e for e, x in self.edges.items() if x.tgt is None)

    def is_closed(self) -> bool:
        return not self.hypotheses()

    def is_empty(self) -> bool:
        return not self.vertices and not self.edges

    def is_terminal(self, v: str) -> bool:
        return all(self.edges[e].tgt is None for e in self.vertices[v].conclusions)

    def of_kind(self, kind: str) -> list[str]:
        return sorted(v for v, x in self.vertices.items() if x.kind == kind)

    def __repr__(self) -> str:
        return f"ProofStructure({len(self.vertices)} vertices, {len(self.edges)} edges)"

    # -- derived structures ------------------------------------------------
    def restrict(self, vertices: Iterable[str], edges: Iterable[str]) -> ProofStructure:
        """Sub-structure on the given ids; edge ends outside are dropped."""
        vs = set(vertices)
        es = set(edges)
        new_edges = {}
        for e in es:
            x = self.edges[e]
            new_edges[e] = PSEdge(e, x.src if x.src in vs else None, x.tgt if x.tgt in vs else None, x.type, x.loc)
        new_vs = {}
        for v in vs:
            x = self.vertices[v]
            new_vs[v] = PSVertex(v, x.kind, x.premises, x.conclusions)
        return ProofStructure(new_vs, new_edges, self.untyped)

    def detach(self, e: str, *, src: bool = False, tgt: bool = False) -> ProofStructure:
        x = self.edges[e]
        edges = dict(self.edges)
        edges[e] = PSEdge(e, None if src else x.src, None if tgt else x.tgt, x.type, x.loc)
        return ProofStructure(self.vertices, edges, self.untyped)

    def components(self) -> list[ProofStructure]:
        g = self.graph()
        return [self.restrict(c.vertices, c.edges) for c in connected_components(g)]

    # -- graphs ------------------------------------------------------------
    def graph(self, coloring: Mapping[tuple[str, str], str] | None = None) -> LocallyColoredGraph:
        """Underlying partial graph (uncolored ends get the color ``"-"``)."""
        if coloring is None and self._graph:
            return self._graph[0]
        col = coloring or {}
        edges = []
        for e in self.edge_ids():
            x = self.edges[e]
            ends = [(v, col.get((e, v), "-")) for v in (x.src, x.tgt) if v is not None]
            edges.append((e, ends))
        g = build_graph(self.vertex_ids(), edges, PALETTE if coloring is not None else None)
        if coloring is None:
            self._graph.append(g)
        return g

    def to_json(self) -> dict[str, Any]:
        vs = [{"id": v, "kind": self.vertices[v].kind} for v in self.vertex_ids()]
        order = {}
        for v in self.vertex_ids():
            for i, e in enumerate(self.vertices[v].premises):
                order[e] = i
        es = []
        for e in self.edge_ids():
            x = self.edges[e]
            d: dict[str, Any] = {"id": e}
            if x.src is not None:
                d["src"] = x.src
            if x.tgt is not None:
                d["tgt"] = x.tgt
                d["port"] = order[e]
            if x.type is not None:
                d["type"] = str(x.type)
            if x.loc is not None:
                d["loc"] = x.loc
            es.append(d)
        out: dict[str, Any] = {"vertices": vs, "edges": es}
        if self.untyped:
            out["untyped"] = True
        return out


# ---------------------------------------------------------------------------
# construction and validation


def make_ps(
    vertices: Iterable[tuple[str, str]],
    edges: Iterable[tuple[str, str | None, str | None, Formula | None]],
    *,
    untyped: bool = False,
    ports: Mapping[str, int] | None = None,
    locs: Mapping[str, str] | None = None,
    validate: bool = True,
) -> ProofStructure:
    """Build a structure from ``(id, kind)`` and ``(id, src, tgt, type)``.

    Premise order follows ``ports`` when given, else the order of ``edges``;
    conclusion order follows the order of ``edges``.
    """
    vlist = list(vertices)
    elist = list(edges)
    ports = ports or {}
    locs = locs or {}
    seen: set[str] = set()
    for i, _ in vlist:
        if i in seen:
            raise DuplicateId(f"duplicate id {i!r}", i)
        seen.add(i)
    for e, *_ in elist:
        if e in seen:
            raise DuplicateId(f"duplicate id {e!r}", e)
        seen.add(e)
    kinds = dict(vlist)
    for v, k in vlist:
        if k not in KINDS:
            raise ParseError(f"unknown vertex kind {k!r}", v)
    prem: dict[str, list[tuple[int, int, str]]] = {v: [] for v in kinds}
    conc: dict[str, list[str]] = {v: [] for v in kinds}
    emap: dict[str, PSEdge] = {}
    for n, (e, s, t, ty) in enumerate(elist):
        for x in (s, t):
            if x is not None and x not in kinds:
                raise UnknownVertex(f"edge {e!r} refers to unknown vertex {x!r}", e)
        if s is not None and s == t:
            raise DirectedCycle(f"edge {e!r} is a loop", e)
        emap[e] = PSEdge(e, s, t, ty, locs.get(e))
        if s is not None:
            conc[s].append(e)
        if t is not None:
            prem[t].append((ports.get(e, n), n, e))
    vmap = {
        v: PSVertex(v, k, tuple(e for *_, e in sorted(prem[v])), tuple(conc[v])) for v, k in vlist
    }
    ps = ProofStructure(vmap, emap, untyped)
    if validate:
        validate_ps(ps)
    return ps


def validate_ps(ps: ProofStructure) -> ProofStructure:
    for v in ps.vertex_ids():
        x = ps.vertices[v]
        if (len(x.premises), len(x.conclusions)) != ARITY[x.kind]:
            raise ArityViolation(
                f"{x.kind}-vertex {v!r} has {len(x.premises)} premises and {len(x.conclusions)} conclusions", v
            )
    locs: dict[str, str] = {}
    for e in ps.edge_ids():
        loc = ps.edges[e].loc
        if loc is not None:
            if loc in locs:
                raise LocationClash(f"location {loc!r} used by {locs[loc]!r} and {e!r}", loc)
            locs[loc] = e
    if not ps.untyped:
        _check_types(ps)
    _check_acyclic(ps)
    return ps


def _check_types(ps: ProofStructure) -> None:
    for e in ps.edge_ids():
        if ps.edges[e].type is None:
            raise TypeMismatch(f"edge {e!r} has no type", e)
    for v in ps.vertex_ids():
        x = ps.vertices[v]
        ty = lambda e: ps.edges[e].type  # noqa: E731
        if x.kind == "ax":
            a, b = x.conclusions
            if ty(a) != dual(ty(b)):
                raise TypeMismatch(f"ax-vertex {v!r} conclusions are not dual", a)
        elif x.kind == "cut":
            a, b = x.premises
            if ty(a) != dual(ty(b)):
                raise TypeMismatch(f"cut-vertex {v!r} premises are not dual", a)
        else:
            a, b = x.premises
            (c,) = x.conclusions
            want = tensor(ty(a), ty(b)) if x.kind == "tensor" else par(ty(a), ty(b))
            if ty(c) != want:
                raise TypeMismatch(f"conclusion {c!r} of {x.kind}-vertex {v!r} should be {want}", c)


def _check_acyclic(ps: ProofStructure) -> None:
    d = nx.DiGraph()
    d.add_nodes_from(ps.vertices)
    for x in ps.edges.values():
        if x.src is not None and x.tgt is not None:
            d.add_edge(x.src, x.tgt)
    try:
        cyc = nx.find_cycle(d)
    except nx.NetworkXNoCycle:
        return
    raise DirectedCycle("directed cycle", [a for a, _ in cyc])


def ps_from_json(data: Mapping[str, Any]) -> ProofStructure:
    untyped = bool(data.get("untyped", False))
    vs = [(str(v["id"]), str(v["kind"])) for v in data.get("vertices", [])]
    es = []
    ports = {}
    locs = {}
    for x in data.get("edges", []):
        e = str(x["id"])
        ty = x.get("type")
        es.append((e, x.get("src"), x.get("tgt"), parse_formula(ty) if ty is not None else None))
        if "port" in x:
            ports[e] = int(x["port"])
        if "loc" in x:
            locs[e] = str(x["loc"])
    return make_ps(vs, es, untyped=untyped, ports=ports, locs=locs)


# ---------------------------------------------------------------------------
# well-coloring and correctness


def coloring(ps: ProofStructure) -> dict[tuple[str, str], str]:
    col: dict[tuple[str, str], str] = {}
    for v in ps.vertex_ids():
        x = ps.vertices[v]
        if x.kind == "ax":
            col[(x.conclusions[0], v)] = SOLID
            col[(x.conclusions[1], v)] = DOTTED
        elif x.kind in ("cut", "tensor"):
            col[(x.premises[0], v)] = SOLID
            col[(x.premises[1], v)] = DOTTED
        else:
            col[(x.premises[0], v)] = SOLID
            col[(x.premises[1], v)] = SOLID
        for c in x.conclusions if x.kind in ("tensor", "par") else ():
            col[(c, v)] = DASHED
    return col


def well_color(ps: ProofStructure) -> LocallyColoredGraph:
    """Three-color local coloring: ax conclusions and cut/⊗ premises solid then
    dotted, ⅋ premises solid, ⊗/⅋ conclusions dashed."""
    return ps.graph(coloring(ps))


def check_well_colored(ps: ProofStructure, g: LocallyColoredGraph) -> list[str]:
    """Violated clauses of the well-coloring definition (empty when fine)."""
    bad = []
    for v in ps.vertex_ids():
        x = ps.vertices[v]
        if x.kind == "ax" and g.color(x.conclusions[0], v) == g.color(x.conclusions[1], v):
            bad.append(f"ax:{v}")
        if x.kind == "cut" and g.color(x.premises[0], v) == g.color(x.premises[1], v):
            bad.append(f"cut:{v}")
        if x.kind == "tensor":
            cs = {g.color(e, v) for e in (*x.premises, *x.conclusions)}
            if len(cs) != 3:
                bad.append(f"tensor:{v}")
        if x.kind == "par":
            a, b = (g.color(e, v) for e in x.premises)
            if a != b or a == g.color(x.conclusions[0], v):
                bad.append(f"par:{v}")
    return bad


@dataclass(frozen=True)
class DRReport:
    correct: bool
    witness: Path | None
    degree: int | None


def switching_graph(ps: ProofStructure, choice: Mapping[str, int] | None = None) -> LocallyColoredGraph:
    """Correctness graph: each ⅋ keeps one premise (``choice[v]``, default 0);
    the other premise loses its target."""
    choice = choice or {}
    cut: set[tuple[str, str]] = set()
    for v in ps.of_kind("par"):
        prem = ps.vertices[v].premises
        cut.add((prem[1 - choice.get(v, 0)], v))
    edges = []
    for e in ps.edge_ids():
        x = ps.edges[e]
        ends = [(w, "-") for w in (x.src, x.tgt) if w is not None and (e, w) not in cut]
        edges.append((e, ends))
    return build_graph(ps.vertex_ids(), edges)


def degree(ps: ProofStructure) -> int:
    """Number of connected components of one correctness graph."""
    return len(connected_components(switching_graph(ps)))


def dr_check(ps: ProofStructure) -> DRReport:
    w = find_cuspfree_cycle(well_color(ps))
    if w is not None:
        return DRReport(False, w, None)
    return DRReport(True, None, degree(ps))


# ---------------------------------------------------------------------------
# desequentialization


@dataclass(frozen=True)
class Desequentialized:
    structure: ProofStructure
    vertex_of: Mapping[int, str]  # id() of a derivation node -> vertex
    edge_of: Mapping[Occ, str]


def desequentialize_full(d: Derivation) -> Desequentialized:
    vertices: list[tuple[str, str]] = []
    edges: dict[str, list] = {}
    order: list[str] = []
    vertex_of: dict[int, str] = {}
    edge_of: dict[Occ, str] = {}
    ports: dict[str, int] = {}

    def new_edge(o: Occ, src: str | None) -> None:
        e = f"e{o.id}"
        edge_of[o] = e
        edges[e] = [e, src, None, o.formula]
        order.append(e)

    def go(n: Derivation) -> None:
        for p in n.premises:
            go(p)
        r = n.rule
        if r in ("mix0", "mix2"):
            return
        if r == "hyp":
            new_edge(n.principal[0], None)
            return
        v = f"v{len(vertices)}"
        vertex_of[id(n)] = v
        vertices.append((v, r))
        for i, a in enumerate(n.active):
            edges[edge_of[a]][2] = v
            ports[edge_of[a]] = i
        for o in n.principal:
            new_edge(o, v)

    go(d)
    ps = make_ps(vertices, [tuple(edges[e]) for e in order], ports=ports)
    return Desequentialized(ps, vertex_of, edge_of)


def desequentialize(d: Derivation) -> ProofStructure:
    return desequentialize_full(d).structure


# ---------------------------------------------------------------------------
# isomorphism


def _nx(ps: ProofStructure) -> nx.DiGraph:
    g = nx.DiGraph()
    for v, x in ps.vertices.items():
        g.add_node(("v", v), label=x.kind)
    for e, x in ps.edges.items():
        g.add_node(("e", e), label="edge" if ps.untyped or x.type is None else str(x.type))
        if x.src is not None:
            g.add_edge(("v", x.src), ("e", e), label="c")
        if x.tgt is not None:
            k = ps.vertices[x.tgt].kind
            port = ps.vertices[x.tgt].premises.index(e) if k in ("tensor", "par") else 0
            g.add_edge(("e", e), ("v", x.tgt), label=f"p{port}")
    return g


def iso_check(a: ProofStructure, b: ProofStructure) -> bool:
    """Isomorphism respecting vertex kinds, edge types and premise sides;
    ids and locations are ignored."""
    if len(a.vertices) != len(b.vertices) or len(a.edges) != len(b.edges):
        return False
    same = lambda x, y: x["label"] == y["label"]  # noqa: E731
    return nx.is_isomorphic(_nx(a), _nx(b), node_match=same, edge_match=same)


def disjoint_union(a: ProofStructure, b: ProofStructure, prefix: Sequence[str] = ("a:", "b:")) -> ProofStructure:
    vs = []
    es = []
    ports = {}
    for pre, ps in zip(prefix, (a, b)):
        for v in ps.vertex_ids():
            vs.append((pre + v, ps.vertices[v].kind))
            for i, e in enumerate(ps.vertices[v].premises):
                ports[pre + e] = i
        for e in ps.edge_ids():
            x = ps.edges[e]
            es.append((pre + e, None if x.src is None else pre + x.src, None if x.tgt is None else pre + x.tgt, x.type))
    if a.untyped != b.untyped:
        raise InputError("cannot join a typed and an untyped structure")
    return make_ps(vs, es, untyped=a.untyped, ports=ports)
