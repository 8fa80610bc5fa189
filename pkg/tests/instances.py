"""Random instances for the classical splitting theorems, with validity
decided by cycle enumeration rather than by the engine."""

import random

from proofweave.corollaries import DirectedGraph, HColoring
from proofweave.graph import build_graph
from proofweave.oracle import enumerate_cycles, has_turning_free_cycle, random_forest_graph


def edge_colored_sparse(rng, n, extra, colors):
    g = random_forest_graph(rng, n, extra, colors)
    return build_graph(g.vertices, [(e, [(a, ca), (b, ca)]) for e in g.edges for (a, ca), (b, _) in [g.ends(e)]], g.colors)


def _consecutive(c):
    es = c.edges
    return [(es[i - 1], c.vertices[i], es[i]) for i in range(len(es))]


def has_alternating_cycle(g):
    col = {e: g.ends(e)[0][1] for e in g.edges}
    return any(all(col[a] != col[b] for a, _, b in _consecutive(c)) for c in enumerate_cycles(g))


def has_conformal_cycle(g, phi):
    return any(all(phi[v] in (a, b) for a, v, b in _consecutive(c)) for c in enumerate_cycles(g))


def has_h_cycle(g, h):
    col = {e: g.ends(e)[0][1] for e in g.edges}
    return any(all(h.linked(col[a], col[b]) for a, _, b in _consecutive(c)) for c in enumerate_cycles(g))


def multipartite_everywhere(g, h):
    for v in g.vertices:
        cols = sorted({g.ends(i.edge)[0][1] for i in g.incident(v)})
        same = lambda a, b: a == b or not h.linked(a, b)  # noqa: E731
        if any(same(a, b) and same(b, c) and not same(a, c) for a in cols for b in cols for c in cols):
            return False
    return True


def seymour_giles_instance(seed, n=6, extra=2):
    rng = random.Random(seed)
    g = random_forest_graph(rng, n, extra, 1)
    g = build_graph([v for v in g.vertices if g.degree(v)], [(e, list(g.ends(e))) for e in g.edges], g.colors)
    phi = {v: rng.choice([i.edge for i in g.incident(v)]) for v in g.vertices}
    return g, phi


def grossman_instance(seed, n=6, extra=3):
    return edge_colored_sparse(random.Random(seed), n, extra, 2)


def shoesmith_instance(seed, n=5, arcs=6):
    rng = random.Random(seed)
    vs = [f"v{i}" for i in range(n)]
    spec = []
    for i in range(arcs):
        a, b = rng.sample(vs, 2)
        spec.append((f"a{i}", a, b))
    s = sorted(x for x in vs if rng.random() < 0.6) or [vs[0]]
    return DirectedGraph.build(vs, spec), s


def shoesmith_valid(dg, s):
    return bool(s) and not has_turning_free_cycle(dg.vertices, dg.arcs, s)


def h_instance(seed, n=6, extra=3, colors=3):
    rng = random.Random(seed)
    g = edge_colored_sparse(rng, n, extra, colors)
    cols = sorted(g.colors)
    h_edges = [(a, b) for i, a in enumerate(cols) for b in cols[i + 1 :] if rng.random() < 0.6]
    return g, HColoring.build(cols, h_edges), h_edges
