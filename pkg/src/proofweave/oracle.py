"""Brute-force ground truth and seeded random instance generation.

Nothing here calls the search engine: cycles are enumerated explicitly,
switchings are enumerated exhaustively, and MALL nets are re-checked from the
definitions.  Everything is exponential and guarded by size limits.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import random
from dataclasses import asdict, dataclass, field
from typing import Any, Iterable, Iterator, Mapping, Sequence

from .errors import InfeasibleBounds, TooLarge
from .formula import Atom, Bin, Formula, dual
from .graph import LocallyColoredGraph, build_graph

MAX_CYCLE_VERTICES = 14
MAX_SWITCHING_PARS = 12
MAX_MALL_WITHS = 5
MAX_MALL_LINKINGS = 6


# ---------------------------------------------------------------------------
# cycles


@dataclass(frozen=True, order=True)
class Cycle:
    """A cycle ``vertices[0] -edges[0]- vertices[1] ... -edges[-1]- vertices[0]``."""

    edges: tuple[str, ...]
    vertices: tuple[str, ...]

    def at(self, v: str) -> list[tuple[str, str]]:
        """The two cycle edges meeting at ``v`` (pairs of edge ids)."""
        k = len(self.edges)
        return [(self.edges[i - 1], self.edges[i]) for i in range(k) if self.vertices[i] == v]

    def sequence(self) -> list[str]:
        out = []
        for v, e in zip(self.vertices, self.edges):
            out += [v, e]
        return out + [self.vertices[0]]


def _canonical(vs: Sequence[str], es: Sequence[str]) -> Cycle:
    k = len(es)
    best = None
    for vv, ee in ((list(vs), list(es)), ([vs[0]] + list(vs[1:])[::-1], list(es)[::-1])):
        for i in range(k):
            cand = (tuple(ee[i:] + ee[:i]), tuple(vv[i:] + vv[:i]))
            if best is None or cand < best:
                best = cand
    return Cycle(*best)  # type: ignore[misc]


def _guard(n: int, limit: int, what: str) -> None:
    if n > limit:
        raise TooLarge(f"{what}: {n} exceeds the oracle limit {limit}", n)


def _cycles(vertices: Sequence[str], links: Mapping[str, tuple[str, str]]) -> list[Cycle]:
    """All simple cycles of an undirected multigraph given by ``edge -> (u, v)``."""
    adj: dict[str, list[tuple[str, str]]] = {v: [] for v in vertices}
    for e, (a, b) in sorted(links.items()):
        adj[a].append((e, b))
        adj[b].append((e, a))
    rank = {v: i for i, v in enumerate(sorted(vertices))}
    found: set[Cycle] = set()
    for s in sorted(vertices):
        vs, es = [s], []

        def rec(x: str) -> None:
            for e, y in adj[x]:
                if e in es:
                    continue
                if y == s:
                    found.add(_canonical(vs, es + [e]))
                elif rank[y] > rank[s] and y not in vs:
                    vs.append(y)
                    es.append(e)
                    rec(y)
                    vs.pop()
                    es.pop()

        rec(s)
    return sorted(found)


def enumerate_cycles(graph: LocallyColoredGraph, *, limit: int = MAX_CYCLE_VERTICES) -> list[Cycle]:
    _guard(len(graph.vertices), limit, "enumerate_cycles")
    links = {e: (graph.ends(e)[0][0], graph.ends(e)[1][0]) for e in graph.edges if len(graph.ends(e)) == 2}
    return _cycles(graph.vertices, links)


def cusp_at(graph: LocallyColoredGraph, c: Cycle, v: str) -> bool:
    return any(graph.color(a, v) == graph.color(b, v) for a, b in c.at(v))


def is_cusp_free(graph: LocallyColoredGraph, c: Cycle) -> bool:
    return not any(cusp_at(graph, c, v) for v in c.vertices)


def brute_cuspfree_cycles(graph: LocallyColoredGraph, *, limit: int = MAX_CYCLE_VERTICES) -> list[Cycle]:
    return [c for c in enumerate_cycles(graph, limit=limit) if is_cusp_free(graph, c)]


def brute_splitting(graph: LocallyColoredGraph, *, limit: int = MAX_CYCLE_VERTICES) -> frozenset[str]:
    """Vertices ``v`` such that every cycle through ``v`` has a cusp at ``v``."""
    cycles = enumerate_cycles(graph, limit=limit)
    return frozenset(v for v in graph.vertices if all(cusp_at(graph, c, v) for c in cycles if v in c.vertices))


# ---------------------------------------------------------------------------
# union-find helpers (components of incidence structures)


class _UF:
    def __init__(self, items: Iterable[Any]) -> None:
        self.p = {x: x for x in items}

    def find(self, x: Any) -> Any:
        while self.p[x] != x:
            self.p[x] = self.p[self.p[x]]
            x = self.p[x]
        return x

    def union(self, a: Any, b: Any) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.p[ra] = rb
        return True

    def count(self) -> int:
        return len({self.find(x) for x in self.p})


def incidence_shape(vertices: Iterable[str], edges: Mapping[str, Sequence[str]]) -> tuple[bool, int]:
    """(acyclic, number of components) of a partial multigraph, where every
    edge counts as a node joined to its endpoints, so that an edge without
    endpoint is a component by itself."""
    vs = list(vertices)
    uf = _UF([("v", v) for v in vs] + [("e", e) for e in edges])
    acyclic = True
    for e, ends in edges.items():
        for v in ends:
            if not uf.union(("e", e), ("v", v)):
                acyclic = False
    return acyclic, uf.count()


# ---------------------------------------------------------------------------
# MLL switchings


@dataclass(frozen=True)
class SwitchingReport:
    correct: bool
    degree: int | None
    cyclic_switchings: int
    total: int


def brute_switchings(ps: Any) -> SwitchingReport:
    """Acyclicity of all 2^n correctness graphs of a proof structure, and
    their common component count when they are all acyclic."""
    pars = sorted(v for v, x in ps.vertices.items() if x.kind == "par")
    _guard(len(pars), MAX_SWITCHING_PARS, "brute_switchings")
    bad = 0
    counts = set()
    total = 0
    for bits in itertools.product((0, 1), repeat=len(pars)):
        cut = {(ps.vertices[v].premises[1 - b], v) for v, b in zip(pars, bits)}
        edges = {}
        for e, x in ps.edges.items():
            edges[e] = [w for w in (x.src, x.tgt) if w is not None and (e, w) not in cut]
        acyclic, n = incidence_shape(ps.vertices, edges)
        total += 1
        if not acyclic:
            bad += 1
        counts.add(n)
    ok = bad == 0
    return SwitchingReport(ok, (counts.pop() if len(counts) == 1 else None) if ok else None, bad, total)


# ---------------------------------------------------------------------------
# MALL nets, from the definitions


@dataclass(frozen=True)
class MallVerdict:
    P1: bool
    P2: bool
    P3: bool

    @property
    def ok(self) -> bool:
        return self.P1 and self.P2 and self.P3


def _tree(roots: Sequence[tuple[str, Formula]], hyps: frozenset[str]) -> dict[str, tuple[Formula, str | None]]:
    out: dict[str, tuple[Formula, str | None]] = {}

    def go(loc: str, f: Formula, parent: str | None) -> None:
        out[loc] = (f, parent)
        if loc not in hyps and isinstance(f, Bin):
            go(loc + ".L", f.left, loc)
            go(loc + ".R", f.right, loc)

    for r, f in roots:
        go(r, f, None)
    return out


def _op(tree: Mapping[str, tuple[Formula, str | None]], loc: str, hyps: frozenset[str]) -> str | None:
    f = tree[loc][0]
    return None if loc in hyps or isinstance(f, Atom) else f.op


def _kept(tree, hyps, loc: str, choice: Mapping[str, str]) -> set[str]:
    """Locations kept by a choice of side at each &/⊕ (missing: both sides)."""
    out = {loc}
    op = _op(tree, loc, hyps)
    if op is None:
        return out
    sides = [choice[loc]] if op in ("&", "+") and loc in choice else ["L", "R"]
    for s in sides:
        out |= _kept(tree, hyps, loc + "." + s, choice)
    return out


def brute_mall_check(net: Any) -> MallVerdict:
    """P1, P2, P3 recomputed from the definitions on ``net.forest`` and
    ``net.linkings`` (sets of 2-element frozensets of leaf locations)."""
    roots = list(net.forest.roots)
    hyps = frozenset(net.forest.hyps)
    tree = _tree(roots, hyps)
    withs = sorted(x for x in tree if _op(tree, x, hyps) == "&")
    pluses = sorted(x for x in tree if _op(tree, x, hyps) == "+")
    lams = sorted(net.linkings, key=lambda lam: sorted(sorted(x) for x in lam))
    _guard(len(withs), MAX_MALL_WITHS, "brute_mall_check (&-vertices)")
    _guard(len(lams), MAX_MALL_LINKINGS, "brute_mall_check (linkings)")

    def has_hyp(loc: str) -> bool:
        return any(h == loc or h.startswith(loc + ".") for h in hyps)

    # additive resolutions: every side choice at every &/⊕ that keeps the hyps
    additive: list[frozenset[str]] = []
    adds = withs + pluses
    for sides in itertools.product("LR", repeat=len(adds)):
        ch = dict(zip(adds, sides))
        kept: set[str] = set()
        for r, _ in roots:
            kept |= _kept(tree, hyps, r, ch)
        if all(h in kept for h in hyps) and frozenset(kept) not in additive:
            additive.append(frozenset(kept))

    def leaves(res: Iterable[str]) -> frozenset[str]:
        return frozenset(x for x in res if x not in hyps and isinstance(tree[x][0], Atom))

    res_of: dict[Any, frozenset[str]] = {}
    for lam in lams:
        used = frozenset(x for link in lam for x in link)
        match = [r for r in additive if leaves(r) == used]
        if len(match) != 1:
            return MallVerdict(False, False, False)
        res_of[lam] = match[0]

    # P1: one linking on each &-resolution
    p1 = True
    for sides in itertools.product("LR", repeat=len(withs)):
        ch = dict(zip(withs, sides))
        wres: set[str] = set()
        for r, _ in roots:
            wres |= _kept(tree, hyps, r, ch)
        on = [lam for lam in lams if res_of[lam] <= wres]
        if len(on) != 1:
            p1 = False

    def toggled(sub: Sequence[Any]) -> set[str]:
        u = set().union(*(res_of[x] for x in sub))
        return {w for w in withs if w + ".L" in u and w + ".R" in u}

    def graph_of(sub: Sequence[Any]):
        """Vertices, edges as (id, a, b) with b the target, and switch info:
        edge id -> the ⅋/& vertex it is a switch edge of."""
        u = set().union(*(res_of[x] for x in sub))
        vs = [x for x in u if x not in hyps]
        edges: dict[str, tuple[str | None, str | None]] = {}
        switch: dict[str, str] = {}
        for x in u:
            parent = tree[x][1]
            edges["f:" + x] = (None if x in hyps else x, parent)
            if parent is not None and _op(tree, parent, hyps) in ("@", "&"):
                switch["f:" + x] = parent
        links = {link for lam in sub for link in lam}
        for link in links:
            a = "a:" + "|".join(sorted(link))
            vs.append(a)
            for leaf in sorted(link):
                edges[f"{a}>{leaf}"] = (a, leaf)
        for x in sub:
            for y in sub:
                if x is y:
                    continue
                t = toggled([x, y])
                if len(t) == 1:
                    (w,) = t
                    for link in set(x) - set(y):
                        a = "a:" + "|".join(sorted(link))
                        edges[f"{a}~>{w}"] = (a, w)
                        switch[f"{a}~>{w}"] = w
        return vs, edges, switch

    def switching_cycles(sub: Sequence[Any]) -> list[Cycle]:
        vs, edges, switch = graph_of(sub)
        full = {e: (a, b) for e, (a, b) in edges.items() if a is not None and b is not None}
        out = []
        for c in _cycles(vs, full):
            per: dict[str, int] = {}
            for e in c.edges:
                if e in switch:
                    per[switch[e]] = per.get(switch[e], 0) + 1
            if all(n <= 1 for n in per.values()):
                out.append(c)
        return out

    p2 = all(not switching_cycles([lam]) for lam in lams)

    p3 = True
    for k in range(2, len(lams) + 1):
        for sub in itertools.combinations(lams, k):
            on_cycle = {v for c in switching_cycles(sub) for v in c.vertices}
            if not any(w not in on_cycle for w in toggled(sub)):
                p3 = False
    return MallVerdict(p1, p2, p3)


# ---------------------------------------------------------------------------
# definition-level validators for the classical corollaries


def _components_without(vertices: Iterable[str], links: Mapping[str, tuple[str, str]], v: str) -> dict[str, int]:
    vs = [x for x in vertices if x != v]
    uf = _UF(vs)
    for a, b in links.values():
        if v not in (a, b):
            uf.union(a, b)
    roots = {}
    return {x: roots.setdefault(uf.find(x), len(roots)) for x in vs}


def _links(graph: LocallyColoredGraph) -> dict[str, tuple[str, str]]:
    return {e: (graph.ends(e)[0][0], graph.ends(e)[1][0]) for e in graph.edges if len(graph.ends(e)) == 2}


def edge_color(graph: LocallyColoredGraph, e: str) -> str:
    return graph.ends(e)[0][1]


def is_bridge_brute(graph: LocallyColoredGraph, e: str) -> bool:
    links = _links(graph)
    if e not in links:
        return True
    a, b = links.pop(e)
    uf = _UF(graph.vertices)
    for x, y in links.values():
        uf.union(x, y)
    return uf.find(a) != uf.find(b)


def groups_at(graph: LocallyColoredGraph, v: str) -> dict[int, list[str]]:
    """Edges at ``v`` grouped by the component of ``G - v`` they lead to."""
    links = _links(graph)
    comp = _components_without(graph.vertices, links, v)
    out: dict[int, list[str]] = {}
    for e, (a, b) in links.items():
        if v in (a, b):
            out.setdefault(comp[b if a == v else a], []).append(e)
    return out


def valid_yeo_vertex(graph: LocallyColoredGraph, v: str) -> bool:
    """No component of ``G - v`` is joined to ``v`` by edges of two colors."""
    return all(len({edge_color(graph, e) for e in es}) == 1 for es in groups_at(graph, v).values())


def valid_kotzig_edge(graph: LocallyColoredGraph, matching: Iterable[str], e: str) -> bool:
    return e in set(matching) and is_bridge_brute(graph, e)


def valid_seymour_giles_vertex(graph: LocallyColoredGraph, phi: Mapping[str, str], u: str) -> bool:
    return is_bridge_brute(graph, phi[u])


def valid_shoesmith_smiley_vertex(
    vertices: Sequence[str], arcs: Mapping[str, tuple[str, str]], s: Iterable[str], v: str
) -> bool:
    """``v`` is in S and is a turning vertex of every cycle through it."""
    if v not in set(s):
        return False
    for c in _cycles(vertices, dict(arcs)):
        for a, b in c.at(v):
            if (arcs[a][0] == v) != (arcs[b][0] == v):
                return False
    return True


def valid_h_yeo_vertex(graph: LocallyColoredGraph, h_edges: Iterable[Sequence[str]], v: str) -> bool:
    """Each component of ``G - v`` meets ``v`` through pairwise non-adjacent
    colors of H."""
    adj = {frozenset(x) for x in h_edges}
    for es in groups_at(graph, v).values():
        cols = [edge_color(graph, e) for e in es]
        if any(frozenset((a, b)) in adj for a in cols for b in cols if a != b):
            return False
    return True


def has_turning_free_cycle(vertices: Sequence[str], arcs: Mapping[str, tuple[str, str]], s: Iterable[str]) -> bool:
    """Some cycle has no turning vertex in S."""
    sset = set(s)
    for c in _cycles(vertices, dict(arcs)):
        turning = False
        for v in c.vertices:
            if v in sset:
                for a, b in c.at(v):
                    if (arcs[a][0] == v) == (arcs[b][0] == v):
                        turning = True
        if not turning:
            return True
    return False


def perfect_matchings(graph: LocallyColoredGraph) -> list[frozenset[str]]:
    """Every perfect matching, by exhaustive search."""
    links = _links(graph)
    out: list[frozenset[str]] = []

    def rec(free: frozenset[str], chosen: list[str]) -> None:
        if not free:
            out.append(frozenset(chosen))
            return
        v = min(free)
        for e, (a, b) in sorted(links.items()):
            if v in (a, b):
                w = b if a == v else a
                if w in free and w != v:
                    rec(free - {v, w}, chosen + [e])

    rec(frozenset(graph.vertices), [])
    return out


# ---------------------------------------------------------------------------
# exhaustive enumeration of small locally colored graphs


def _restricted_growth(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Sequences over ``range(k)`` where each value first appears after all
    smaller ones: colorings up to renaming of the palette."""

    def rec(prefix: list[int], top: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for c in range(min(top + 1, k)):
            prefix.append(c)
            yield from rec(prefix, max(top, c + 1))
            prefix.pop()

    yield from rec([], 0)


def _multisets_up_to_iso(n: int, m: int) -> list[tuple[tuple[int, int], ...]]:
    pairs = list(itertools.combinations(range(n), 2))
    seen: set = set()
    out = []
    for ms in itertools.combinations_with_replacement(pairs, m):
        canon = min(
            tuple(sorted(tuple(sorted((p[a], p[b]))) for a, b in ms)) for p in itertools.permutations(range(n))
        )
        if canon not in seen:
            seen.add(canon)
            out.append(canon)
    return out


def exhaustive_graphs(max_vertices: int = 4, max_edges: int = 5, max_colors: int = 3) -> Iterator[LocallyColoredGraph]:
    """Every total locally colored multigraph within the bounds, up to vertex
    isomorphism of the underlying multigraph and renaming of colors (some
    isomorphic copies may repeat; none is missed)."""
    palette = [f"c{i}" for i in range(max_colors)]
    for n in range(1, max_vertices + 1):
        names = [f"v{i}" for i in range(n)]
        for m in range(0, max_edges + 1):
            for ms in _multisets_up_to_iso(n, m):
                for col in _restricted_growth(2 * m, max_colors):
                    edges = [
                        (f"e{i}", [(names[a], palette[col[2 * i]]), (names[b], palette[col[2 * i + 1]])])
                        for i, (a, b) in enumerate(ms)
                    ]
                    yield build_graph(names, edges)


# ---------------------------------------------------------------------------
# seeded generation


@dataclass(frozen=True)
class GeneratorConfig:
    seed: int = 0
    vertices: int = 6
    edges: int = 8
    colors: int = 3
    rules: int = 12
    withs: int = 4
    atoms: tuple[str, ...] = ("X", "Y", "Z")
    allow_partial: bool = False
    allow_mix: bool = True
    allow_hyp: bool = True
    allow_cut: bool = True
    allow_additives: bool = True
    leaf_bias: float = 0.25  # chance to stop early at an axiom, keeps contexts small
    with_weight: int = 4  # relative weight of the &-rule in MALL generation

    def to_json(self) -> dict[str, Any]:
        d = asdict(self)
        d["atoms"] = list(self.atoms)
        return d

    @staticmethod
    def from_json(data: Mapping[str, Any]) -> GeneratorConfig:
        d = dict(data)
        if "atoms" in d:
            d["atoms"] = tuple(d["atoms"])
        return GeneratorConfig(**d)


@dataclass(frozen=True)
class Fixture:
    kind: str
    data: Any = field(compare=False)
    manifest: dict[str, Any]
    value: Any = field(default=None, compare=False, repr=False)


KINDS = ("graph", "mll-derivation", "mall-derivation", "matching-instance")


def _sha(data: Any) -> str:
    return hashlib.sha256(json.dumps(data, sort_keys=True, ensure_ascii=False).encode()).hexdigest()


def generate(config: GeneratorConfig, kind: str) -> Fixture:
    """One instance of ``kind``, determined by ``config`` (seed included)."""
    if kind not in KINDS:
        raise ValueError(f"unknown fixture kind {kind!r}")
    rng = random.Random(config.seed)
    if kind == "graph":
        value = random_graph(rng, config)
        data = value.to_json()
    elif kind == "matching-instance":
        value, matching = random_matching_instance(rng, config)
        data = {"graph": value.to_json(), "matching": sorted(matching)}
        value = (value, matching)
    elif kind == "mll-derivation":
        from .mll.derivation import to_sexpr

        value = random_mll_derivation(rng, config)
        data = to_sexpr(value)
    else:
        from .mall.derivation import to_sexpr as mall_sexpr

        value = random_mall_derivation(rng, config)
        data = mall_sexpr(value)
    manifest = {"seed": config.seed, "config": config.to_json(), "kind": kind, "sha256": _sha(data)}
    return Fixture(kind, data, manifest, value)


def random_graph(rng: random.Random, cfg: GeneratorConfig) -> LocallyColoredGraph:
    if cfg.vertices < 1 or cfg.colors < 1 or cfg.edges < 0:
        raise InfeasibleBounds("a graph needs at least one vertex and one color", cfg.to_json())
    if cfg.vertices < 2 and cfg.edges > 0 and not cfg.allow_partial:
        raise InfeasibleBounds("total edges need two vertices", cfg.to_json())
    n = rng.randint(1 if cfg.edges == 0 or cfg.allow_partial else 2, cfg.vertices)
    m = rng.randint(0, cfg.edges)
    names = [f"v{i}" for i in range(n)]
    palette = [f"c{i}" for i in range(cfg.colors)]
    edges = []
    for i in range(m):
        if cfg.allow_partial and (n < 2 or rng.random() < 0.15):
            ends = [(rng.choice(names), rng.choice(palette))] if rng.random() < 0.8 else []
        else:
            a, b = rng.sample(names, 2)
            ends = [(a, rng.choice(palette)), (b, rng.choice(palette))]
        edges.append((f"e{i}", ends))
    return build_graph(names, edges, palette)


def random_forest_graph(rng: random.Random, n: int, extra: int, colors: int) -> LocallyColoredGraph:
    """A random forest on ``n`` vertices plus ``extra`` random edges; sparse
    graphs are the ones with a chance to lack cusp-free cycles."""
    names = [f"v{i}" for i in range(n)]
    palette = [f"c{i}" for i in range(colors)]
    edges = []
    for i in range(1, n):
        if rng.random() < 0.85:
            edges.append((names[i], names[rng.randrange(i)]))
    for _ in range(extra):
        if n >= 2:
            edges.append(tuple(rng.sample(names, 2)))
    spec = [(f"e{i}", [(a, rng.choice(palette)), (b, rng.choice(palette))]) for i, (a, b) in enumerate(edges)]
    return build_graph(names, spec, palette)


def random_matching_instance(rng: random.Random, cfg: GeneratorConfig) -> tuple[LocallyColoredGraph, frozenset[str]]:
    """A connected graph with a unique perfect matching F: pairs are added in
    order, and a new pair attaches only through its first vertex, so no
    alternating cycle can enter the newest pair."""
    if cfg.vertices < 2:
        raise InfeasibleBounds("a perfect matching needs at least two vertices", cfg.to_json())
    k = max(1, cfg.vertices // 2)
    m_budget = max(cfg.edges, 2 * k - 1)
    pairs = [(f"a{i}", f"b{i}") for i in range(k)]
    names = [x for p in pairs for x in p]
    edges: list[tuple[str, str, str]] = []
    matching = []
    for i, (a, b) in enumerate(pairs):
        e = f"m{i}"
        edges.append((e, a, b))
        matching.append(e)
        if i:
            j = rng.randrange(i)
            edges.append((f"t{i}", a, rng.choice(pairs[j])))
    extra = m_budget - len(edges)
    for n in range(max(0, extra)):
        if k < 2:
            break
        i = rng.randrange(1, k)
        j = rng.randrange(i)
        edges.append((f"x{n}", pairs[i][0], rng.choice(pairs[j])))
    g = build_graph(names, [(e, [(a, "0"), (b, "0")]) for e, a, b in edges])
    return g, frozenset(matching)


# -- random derivations -------------------------------------------------------


def random_formula(rng: random.Random, atoms: Sequence[str], depth: int, ops: Sequence[str] = ("*", "@")) -> Formula:
    if depth <= 0 or rng.random() < 0.5:
        return Atom(rng.choice(list(atoms)), rng.random() < 0.5)
    return Bin(rng.choice(list(ops)), random_formula(rng, atoms, depth - 1, ops), random_formula(rng, atoms, depth - 1, ops))


def _split(rng: random.Random, budget: int) -> tuple[int, int]:
    a = rng.randint(1, budget - 1)
    return a, budget - a


def random_mll_derivation(rng: random.Random, cfg: GeneratorConfig):
    """Random MLL derivation with at most ``cfg.rules`` rules."""
    from .mll import derivation as D

    if cfg.rules < 1:
        raise InfeasibleBounds("a derivation has at least one rule", cfg.to_json())

    def leaf():
        r = rng.random()
        if cfg.allow_mix and r < 0.05:
            return D.mix0()
        if cfg.allow_hyp and r < 0.2:
            return D.hyp(random_formula(rng, cfg.atoms, 1))
        return D.ax(Atom(rng.choice(list(cfg.atoms))))

    def gen(budget: int):
        if budget <= 1 or rng.random() < cfg.leaf_bias:
            return leaf()
        choices = ["par", "tensor", "tensor"]
        if budget >= 3 and cfg.allow_mix:
            choices.append("mix2")
        if budget >= 3 and cfg.allow_cut:
            choices.append("cut")
        r = rng.choice(choices)
        if r == "par":
            d = gen(budget - 1)
            if len(d.concl) < 2:
                return d
            a, b = rng.sample(list(d.concl), 2)
            return D.par_rule(d, a, b)
        if budget < 3:
            return leaf()
        b1, b2 = _split(rng, budget - 1)
        d1 = gen(b1)
        if r == "mix2":
            return D.mix2(d1, gen(b2))
        if not d1.concl:
            return d1
        a = rng.choice(list(d1.concl))
        if r == "cut":
            d2 = gen(b2)
            dual_occs = [o for o in d2.concl if o.formula == dual(a.formula)]
            if dual_occs:
                return D.cut_rule(d1, a, d2, rng.choice(dual_occs))
            d2 = D.ax(a.formula)
            return D.cut_rule(d1, a, d2, d2.principal[0])
        d2 = gen(b2)
        if not d2.concl:
            return D.mix2(d1, d2)
        return D.tensor_rule(d1, a, d2, rng.choice(list(d2.concl)))

    return gen(rng.randint(1, cfg.rules))


def _clone_mall(d):
    from .mall.derivation import rename
    from .mll.derivation import Occ

    return rename(d, {o: Occ.fresh(o.formula) for o in d.occurrences()})


def _hyp_free_actives(d) -> list:
    from .mall.derivation import hyp_locations, locations

    loc = locations(d)
    hs = hyp_locations(d, loc)
    return [o for o in d.concl if not any(h == loc[o] or h.startswith(loc[o] + ".") for h in hs)]


def random_mall_derivation(rng: random.Random, cfg: GeneratorConfig, *, attempts: int = 200):
    """Random MALL derivation with at most ``cfg.rules`` rules and
    ``cfg.withs`` &-rules, satisfying the hypothesis slice constraint."""
    from .errors import SliceConstraintViolated
    from .mall import derivation as D

    if cfg.rules < 1:
        raise InfeasibleBounds("a derivation has at least one rule", cfg.to_json())
    withs = [0]

    def atom() -> Atom:
        return Atom(rng.choice(list(cfg.atoms)))

    def leaf(hyp_ok: bool):
        r = rng.random()
        if cfg.allow_mix and r < 0.05:
            return D.mix0()
        if hyp_ok and cfg.allow_hyp and r < 0.2:
            return D.hyp(random_formula(rng, cfg.atoms, 1, ("*", "@", "&", "+")))
        return D.ax(atom())

    def gen(budget: int, hyp_ok: bool = True):
        if budget <= 1 or rng.random() < cfg.leaf_bias:
            return leaf(hyp_ok)
        choices = ["par", "tensor", "tensor"]
        if cfg.allow_additives:
            choices += ["plus"]
            if budget >= 3 and withs[0] < cfg.withs:
                choices += ["with"] * cfg.with_weight
        if budget >= 3 and cfg.allow_mix:
            choices.append("mix2")
        r = rng.choice(choices)
        if r in ("par", "plus"):
            d = gen(budget - 1, hyp_ok)
            if r == "par":
                if len(d.concl) < 2:
                    return d
                a, b = rng.sample(list(d.concl), 2)
                return D.par_rule(d, a, b)
            if not d.concl:
                return d
            side = rng.choice((1, 2))
            return D.plus_rule(d, rng.choice(list(d.concl)), side, random_formula(rng, cfg.atoms, 1))
        if budget < 3:
            return leaf(hyp_ok)
        if r == "with":
            withs[0] += 1
            half = (budget - 1) // 2
            if rng.random() < 0.5:
                # two premises differing only in their active formula
                d1 = gen(half, hyp_ok)
                acts = _hyp_free_actives(d1)
                if not acts:
                    return d1
                a = rng.choice(acts)
                d2 = _clone_mall(d1)
                b = d2.concl[d1.concl.index(a)]
                return D.with_rule(d1, a, d2, b)
            # a shared context next to two independent one-conclusion proofs
            c_budget = rng.randint(0, max(0, half - 1))
            ctx = gen(c_budget, hyp_ok) if c_budget else None
            sides = []
            for _ in range(2):
                p = gen(max(1, half - c_budget), False)
                while len(p.concl) > 1:
                    x, y = p.concl[0], p.concl[1]
                    p = D.par_rule(p, x, y)
                if not p.concl:
                    return ctx if ctx is not None else p
                sides.append(p)
            p1, p2 = sides
            d1 = D.mix2(ctx, p1) if ctx is not None else p1
            d2 = D.mix2(ctx, p2) if ctx is not None else p2
            return D.with_rule(d1, p1.concl[0], d2, p2.concl[0])
        b1, b2 = _split(rng, budget - 1)
        d1 = gen(b1, hyp_ok)
        d2 = gen(b2, hyp_ok)
        if r == "mix2" or not d1.concl or not d2.concl:
            return D.mix2(d1, d2)
        return D.tensor_rule(d1, rng.choice(list(d1.concl)), d2, rng.choice(list(d2.concl)))

    for _ in range(attempts):
        withs[0] = 0
        d = gen(rng.randint(max(1, cfg.rules // 2), cfg.rules))
        if d.size() > cfg.rules or d.count("with") > cfg.withs:
            continue
        try:
            D.check_slices(d)
        except SliceConstraintViolated:
            continue
        return d
    raise InfeasibleBounds("no derivation within the bounds after repeated attempts", cfg.to_json())


__all__ = [
    "Cycle",
    "Fixture",
    "GeneratorConfig",
    "KINDS",
    "MallVerdict",
    "SwitchingReport",
    "brute_cuspfree_cycles",
    "brute_mall_check",
    "brute_splitting",
    "brute_switchings",
    "enumerate_cycles",
    "exhaustive_graphs",
    "generate",
    "incidence_shape",
    "perfect_matchings",
    "random_formula",
    "random_forest_graph",
    "random_graph",
    "random_mall_derivation",
    "random_matching_instance",
    "random_mll_derivation",
]
