"""Connectedness of multiplicative proof nets: cusp-free connectedness,
proper cycles, decomposition of almost connected nets, kingdoms."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import Empty, NotConnectedClosed, NotCorrect, ProofweaveError
from ..graph import LocallyColoredGraph, Path
from ..yeo import _dfs, find_cuspfree_cycle
from .structure import ProofStructure, degree, dr_check, well_color


def _require_correct(ps: ProofStructure, g: LocallyColoredGraph) -> None:
    w = find_cuspfree_cycle(g)
    if w is not None:
        raise NotCorrect("the structure has a switching cycle", w)


def is_connected_net(ps: ProofStructure) -> bool:
    """A correct structure whose correctness graphs are connected."""
    r = dr_check(ps)
    return r.correct and r.degree == 1


def is_cf_connected(ps: ProofStructure) -> bool:
    """Non-empty, and any two edges have adjacent vertices joined by a simple
    cusp-free path."""
    if ps.is_empty():
        return False
    g = well_color(ps)
    reach: dict[str, set[str]] = {}
    for v in g.vertices:
        seen = {v}

        def visit(vs, es, end, seen=seen):
            seen.add(vs[-1])

        _dfs(g, v, None, visit)
        reach[v] = seen
    edges = ps.edge_ids()
    adj = {e: [w for w in (ps.edges[e].src, ps.edges[e].tgt) if w is not None] for e in edges}
    for i, e in enumerate(edges):
        for f in edges[i + 1 :]:
            if not any(y in reach[x] for x in adj[e] for y in adj[f]):
                return False
    return True


def proper_cycles(ps: ProofStructure, v: str, g: LocallyColoredGraph | None = None) -> list[Path]:
    """Cycles of source ``v`` through both premises of the ⅋-vertex ``v``
    with no cusp other than the one at ``v``."""
    g = g or well_color(ps)
    e1, e2 = ps.vertices[v].premises
    u1, u2 = ps.edges[e1].src, ps.edges[e2].src
    if u1 is None or u2 is None:
        return []
    out: list[Path] = []
    if u1 == u2:
        if g.color(e1, u1) != g.color(e2, u1):
            out.append(Path(g, (v, u1, v), (e1, e2)))
        return out
    allowed = set(g.vertices) - {v}

    def visit(vs, es, end):
        if vs[-1] == u2 and end != g.color(e2, u2):
            out.append(Path(g, (v, *vs, v), (e1, *es, e2)))

    _dfs(g, u1, g.color(e1, u1), visit, allowed=allowed)
    return sorted(out, key=Path.encode)


@dataclass(frozen=True)
class Decomposition:
    components: tuple[ProofStructure, ...] | None
    witness: str | None  # a ⅋-vertex without proper cycle


def almost_connected_decompose(ps: ProofStructure) -> Decomposition:
    if ps.is_empty():
        raise Empty("the structure is empty")
    g = well_color(ps)
    _require_correct(ps, g)
    for v in ps.of_kind("par"):
        if not proper_cycles(ps, v, g):
            return Decomposition(None, v)
    return Decomposition(tuple(ps.components()), None)


def is_almost_connected(ps: ProofStructure) -> bool:
    return not ps.is_empty() and almost_connected_decompose(ps).witness is None


@dataclass(frozen=True)
class Kingdom:
    vertices: frozenset[str]
    edges: frozenset[str]


def kingdom(ps: ProofStructure, v: str, *, all_choices: bool = True) -> Kingdom:
    """Kingdom of ``v`` in a connected closed net, by the recursive
    characterization.  With ``all_choices`` every proper cycle of every ⅋ is
    tried and the results are required to agree."""
    if not ps.is_closed() or degree(ps) != 1:
        raise NotConnectedClosed("kingdoms are defined in connected closed nets")
    g = well_color(ps)
    _require_correct(ps, g)
    memo: dict[str, Kingdom] = {}
    active: set[str] = set()

    def k(x: str) -> Kingdom:
        if x in memo:
            return memo[x]
        if x in active:
            raise ProofweaveError(f"kingdom recursion loops through {x!r}")
        active.add(x)
        node = ps.vertices[x]
        own_v = {x}
        own_e = set(node.conclusions)
        if node.kind == "ax":
            res = Kingdom(frozenset(own_v), frozenset(own_e))
        elif node.kind in ("tensor", "cut"):
            vs, es = set(own_v), set(own_e)
            for e in node.premises:
                sub = k(ps.edges[e].src)  # type: ignore[arg-type]
                vs |= sub.vertices
                es |= sub.edges
            es |= set(node.premises)
            res = Kingdom(frozenset(vs), frozenset(es))
        else:
            cycles = proper_cycles(ps, x, g)
            if not cycles:
                raise NotConnectedClosed(f"⅋-vertex {x!r} has no proper cycle")
            results = []
            for w in cycles if all_choices else cycles[:1]:
                vs, es = set(own_v), set(own_e) | set(node.premises)
                for y in set(w.vertices) - {x}:
                    sub = k(y)
                    vs |= sub.vertices
                    es |= sub.edges
                results.append(Kingdom(frozenset(vs), frozenset(es)))
            if any(r != results[0] for r in results):
                raise ProofweaveError(f"kingdom of {x!r} depends on the proper cycle")
            res = results[0]
        active.discard(x)
        memo[x] = res
        return res

    return k(v)


__all__ = [
    "Decomposition",
    "Kingdom",
    "almost_connected_decompose",
    "is_almost_connected",
    "is_cf_connected",
    "is_connected_net",
    "kingdom",
    "proper_cycles",
]
