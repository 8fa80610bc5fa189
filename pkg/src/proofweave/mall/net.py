"""MALL proof nets as sets of linkings: linking graphs with jump edges, the
correctness criterion, well-coloring, exit jumps and splitting vertices."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Iterable, Mapping, Sequence

from ..errors import (
    Empty,
    InvalidLinking,
    LeafVertex,
    NotCorrect,
    NotSplitting,
    ParseError,
    PreconditionViolated,
)
from ..formula import parse_formula
from ..graph import LocallyColoredGraph, build_graph, connected_components, vertex_components
from ..yeo import (
    CycleUnion,
    ExitEdge,
    cuspfree_cycle_through,
    find_cuspfree_cycle,
    find_splitting_mall_graph,
    max_cuspfree_unions,
    p_out,
)
from .forest import Forest, Link, Linking, Resolution, child, iter_subsets, link_key, linking_key, make_link, parse_loc

SOLID, DOTTED, DASHED, DASHDOT = "solid", "dotted", "dashed", "dashdot"
BASE_COLORS = (DASHED, DOTTED, SOLID, DASHDOT)
STRATEGIES = ("any", "pw", "terminal", "non-ax")


def _extra_color(i: int) -> str:
    return f"c{i}"


def ax_id(link: Link) -> str:
    a, b = link_key(link)
    return f"ax:{a}|{b}"


def edge_id(loc: str) -> str:
    return f"e:{loc}"


def ax_edge_id(link: Link, leaf: str) -> str:
    return f"{ax_id(link)}>{leaf}"


def jump_id(link: Link, w: str) -> str:
    return f"{ax_id(link)}~>{w}"


@dataclass(frozen=True)
class GEdge:
    id: str
    src: str | None
    tgt: str | None
    kind: str  # forest | ax | jump


@dataclass
class LinkingGraph:
    """The directed partial graph G_Λ with its vertex kinds."""

    kinds: dict[str, str]
    edges: dict[str, GEdge]
    links: dict[str, Link]  # ax-vertex -> link
    toggled: frozenset[str]

    @cached_property
    def graph(self) -> LocallyColoredGraph:
        return well_color_graph(self)

    def vertex_ids(self) -> list[str]:
        return sorted(self.kinds)

    def edge_ids(self) -> list[str]:
        return sorted(self.edges)

    def jumps(self) -> list[GEdge]:
        return sorted((e for e in self.edges.values() if e.kind == "jump"), key=lambda e: e.id)

    def out_edges(self, v: str) -> list[GEdge]:
        return sorted((e for e in self.edges.values() if e.src == v), key=lambda e: e.id)

    def in_edges(self, v: str) -> list[GEdge]:
        return sorted((e for e in self.edges.values() if e.tgt == v), key=lambda e: e.id)

    def to_json(self) -> dict[str, Any]:
        return {
            "vertices": [{"id": v, "kind": self.kinds[v]} for v in self.vertex_ids()],
            "edges": [
                {k: val for k, val in (("id", e.id), ("src", e.src), ("tgt", e.tgt), ("kind", e.kind)) if val is not None}
                for e in (self.edges[i] for i in self.edge_ids())
            ],
        }


# ---------------------------------------------------------------------------
# nets


@dataclass(frozen=True)
class MallNet:
    forest: Forest
    linkings: frozenset[Linking]
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self) -> None:
        idx = self.forest.leaf_index()
        res: dict[Linking, Resolution] = {}
        for lam in self.linkings:
            leaves: list[str] = []
            for link in lam:
                self.forest.check_link(link)
                leaves.extend(link)
            if len(set(leaves)) != len(leaves):
                raise InvalidLinking("a leaf is used by two axiom links", linking_key(lam))
            r = idx.get(frozenset(leaves))
            if r is None:
                raise InvalidLinking("the links do not cover the leaves of an additive resolution", linking_key(lam))
            res[lam] = r
        self._cache["res"] = res

    # -- basics --------------------------------------------------------------
    def resolution(self, lam: Linking) -> Resolution:
        return self._cache["res"][lam]

    def sorted_linkings(self) -> list[Linking]:
        return sorted(self.linkings, key=linking_key)

    def same_as(self, other: MallNet) -> bool:
        """Equal as nets: same located sequent, same set of linkings."""
        return (
            dict(self.forest.roots) == dict(other.forest.roots)
            and self.forest.hyps == other.forest.hyps
            and self.linkings == other.linkings
        )

    def equivalent(self, other: MallNet) -> bool:
        """Equal up to a permutation of the conclusions."""
        a, b = self.to_json(), other.to_json()
        concs = a["sequent"]["concs"]
        if sorted(concs) != sorted(b["sequent"]["concs"]):
            return False
        n = len(concs)
        for perm in itertools.permutations(range(n)):
            if [b["sequent"]["concs"][perm[i]] for i in range(n)] != concs:
                continue
            ren = {str(perm[i]): str(i) for i in range(n)}

            def rl(loc: str) -> str:
                head, _, tail = loc.partition(".")
                return ren[head] + ("." + tail if tail else "")

            hyps = sorted(rl(h) for h in b["sequent"]["hyps"])
            lams = sorted(sorted(sorted(rl(x) for x in link) for link in lam) for lam in b["linkings"])
            if hyps == a["sequent"]["hyps"] and lams == sorted(sorted(map(sorted, lam)) for lam in a["linkings"]):
                return True
        return False

    def union(self, lams: Iterable[Linking]) -> frozenset[str]:
        out: set[str] = set()
        for lam in lams:
            out |= self.resolution(lam)
        return frozenset(out)

    def toggles(self, lams: Iterable[Linking]) -> frozenset[str]:
        """&-vertices with both premises in the union of the resolutions."""
        u = self.union(lams)
        return frozenset(w for w in self.forest.of_kind("with") if child(w, "L") in u and child(w, "R") in u)

    def W(self, lams: Iterable[Linking]) -> frozenset[str]:
        """&-vertices whose right premise lies in no resolution of ``lams``."""
        lams = list(lams)
        return frozenset(
            w for w in self.forest.of_kind("with") if all(child(w, "R") not in self.resolution(x) for x in lams)
        )

    def _pair_toggles(self, a: Linking, b: Linking) -> frozenset[str]:
        key = (a, b) if linking_key(a) <= linking_key(b) else (b, a)
        memo = self._cache.setdefault("pt", {})
        if key not in memo:
            memo[key] = self.toggles(key)
        return memo[key]

    def dependencies(self, lams: Iterable[Linking]) -> frozenset[tuple[Link, str]]:
        """Pairs (link, w) such that the link depends on the &-vertex w."""
        lams = list(lams)
        out: set[tuple[Link, str]] = set()
        for a in lams:
            for b in lams:
                if a == b:
                    continue
                t = self._pair_toggles(a, b)
                if len(t) == 1:
                    (w,) = t
                    out.update((x, w) for x in a - b)
        return frozenset(out)

    def linking_graph(self, lams: Iterable[Linking] | None = None) -> LinkingGraph:
        lams = frozenset(self.linkings if lams is None else lams)
        if not lams:
            raise Empty("G_Λ needs a non-empty set of linkings")
        memo = self._cache.setdefault("lg", {})
        if lams in memo:
            return memo[lams]
        f = self.forest
        kept = self.union(lams)
        kinds: dict[str, str] = {}
        edges: dict[str, GEdge] = {}
        for loc in f.locations():
            if loc not in kept:
                continue
            src = None if loc in f.hyps else loc
            if src is not None:
                kinds[loc] = f.kind(loc)
            p = f.parent(loc)
            edges[edge_id(loc)] = GEdge(edge_id(loc), src, p, "forest")
        links: dict[str, Link] = {}
        for lam in lams:
            for link in lam:
                a = ax_id(link)
                links[a] = link
                kinds[a] = "ax"
                for leaf in link_key(link):
                    edges[ax_edge_id(link, leaf)] = GEdge(ax_edge_id(link, leaf), a, leaf, "ax")
        for link, w in self.dependencies(lams):
            j = jump_id(link, w)
            edges[j] = GEdge(j, ax_id(link), w, "jump")
        lg = LinkingGraph(kinds, edges, links, self.toggles(lams))
        memo[lams] = lg
        return lg

    # -- serialization -------------------------------------------------------
    def to_json(self) -> dict[str, Any]:
        """Net JSON with roots renumbered ``0..n-1`` in forest order."""
        ren = {r: str(i) for i, r in enumerate(self.forest.root_locs())}

        def rl(loc: str) -> str:
            r = self.forest.root_of(loc)
            return ren[r] + loc[len(r):]

        return {
            "sequent": {
                "hyps": sorted(rl(h) for h in self.forest.hyps),
                "concs": [str(fm) for _, fm in self.forest.roots],
            },
            "linkings": [[[rl(a), rl(b)] for a, b in sorted(tuple(sorted(rl(x) for x in link)) for link in lam)]
                         for lam in self.sorted_linkings()],
        }

    def __str__(self) -> str:
        return f"{self.forest} with {len(self.linkings)} linking(s)"


def make_net(forest: Forest, linkings: Iterable[Iterable[Iterable[str]]]) -> MallNet:
    lams = []
    for lam in linkings:
        lams.append(frozenset(make_link(*pair) for pair in (tuple(p) for p in lam)))
    return MallNet(forest, frozenset(lams))


def net_from_json(data: Mapping[str, Any]) -> MallNet:
    try:
        seq = data["sequent"]
        concs = [parse_formula(str(x)) for x in seq.get("concs", [])]
        hyps = [parse_loc(str(h)) for h in seq.get("hyps", [])]
        raw = data["linkings"]
    except (KeyError, TypeError, AttributeError) as exc:
        raise ParseError(f"bad MALL net JSON: missing {exc}") from exc
    lams = []
    for lam in raw:
        pairs = []
        for pair in lam:
            if not isinstance(pair, (list, tuple)) or len(pair) != 2:
                raise InvalidLinking(f"an axiom link is a pair of leaf locations, got {pair!r}")
            pairs.append((parse_loc(str(pair[0])), parse_loc(str(pair[1]))))
        lams.append(pairs)
    return make_net(Forest.of(concs, hyps), lams)


# ---------------------------------------------------------------------------
# well-coloring


def well_coloring(lg: LinkingGraph) -> dict[tuple[str, str], str]:
    """Color of each (edge, endpoint) of G_Λ."""
    col: dict[tuple[str, str], str] = {}
    for e in lg.edges.values():
        if e.src is not None and e.kind == "forest":
            col[(e.id, e.src)] = DASHED
        if e.tgt is not None and e.kind in ("forest", "jump"):
            k = lg.kinds[e.tgt]
            if k in ("tensor", "plus"):
                col[(e.id, e.tgt)] = SOLID if e.id.endswith(".L") else DOTTED
            else:  # par, with: premises and incoming jumps share one color
                col[(e.id, e.tgt)] = SOLID
    ax_palette = [DOTTED, DASHDOT]
    jump_palette = [SOLID, DASHED]
    leaf_palette = [SOLID, DOTTED, DASHDOT]
    for a in sorted(lg.links):
        outs = [e for e in lg.out_edges(a) if e.kind == "ax"]
        for i, e in enumerate(sorted(outs, key=lambda e: e.tgt)):
            col[(e.id, a)] = ax_palette[i]
        js = [e for e in lg.out_edges(a) if e.kind == "jump"]
        for i, e in enumerate(sorted(js, key=lambda e: e.tgt)):
            col[(e.id, a)] = jump_palette[i] if i < len(jump_palette) else _extra_color(i + 2)
    for v, k in lg.kinds.items():
        if k != "leaf":
            continue
        ins = [e for e in lg.in_edges(v) if e.kind == "ax"]
        for i, e in enumerate(sorted(ins, key=lambda e: e.src)):
            col[(e.id, v)] = leaf_palette[i] if i < len(leaf_palette) else _extra_color(i + 1)
    return col


def well_color_graph(lg: LinkingGraph) -> LocallyColoredGraph:
    col = well_coloring(lg)
    used = sorted(set(col.values()) - set(BASE_COLORS))
    specs = []
    for e in lg.edges.values():
        specs.append((e.id, [(x, col[(e.id, x)]) for x in (e.src, e.tgt) if x is not None]))
    return build_graph(sorted(lg.kinds), specs, list(BASE_COLORS) + used)


def check_well_colored_mall(lg: LinkingGraph, g: LocallyColoredGraph) -> list[str]:
    """The clauses of a MALL well-coloring that fail (empty when all hold)."""
    bad: list[str] = []
    if len(g.colors) < 3:
        bad.append("fewer than three colors")
    for v, k in lg.kinds.items():
        ins = [g.color(e.id, v) for e in lg.in_edges(v)]
        outs = [g.color(e.id, v) for e in lg.out_edges(v)]
        if k in ("tensor", "plus"):
            allc = ins + outs
            if len(set(allc)) != len(allc):
                bad.append(f"{v}: colors of a {k}-vertex are not pairwise distinct")
        elif k in ("par", "with"):
            if len(set(ins)) > 1 or (outs and outs[0] in ins):
                bad.append(f"{v}: switch edges of a {k}-vertex must share one color, distinct from the conclusion")
            if k == "par" and any(e.kind == "jump" for e in lg.in_edges(v)):
                bad.append(f"{v}: jump edge into a par-vertex")
        elif k == "ax":
            if len(set(outs)) != len(outs):
                bad.append(f"{v}: ax-vertex colors are not pairwise distinct")
        elif k == "leaf":
            allc = ins + outs
            if len(set(allc)) != len(allc):
                bad.append(f"{v}: leaf colors are not pairwise distinct")
    return bad


def well_color_mall(net: MallNet) -> LocallyColoredGraph:
    return net.linking_graph().graph


# ---------------------------------------------------------------------------
# correctness


def has_switching_cycle(g: LocallyColoredGraph) -> bool:
    return find_cuspfree_cycle(g) is not None


def vertices_on_switching_cycles(g: LocallyColoredGraph) -> frozenset[str]:
    out: set[str] = set()
    for e in g.edges:
        if cuspfree_cycle_through(g, e) is not None:
            out |= g.incidence(e)
    return frozenset(out)


def _on_switching_cycle(g: LocallyColoredGraph, v: str) -> bool:
    return any(cuspfree_cycle_through(g, inc.edge) is not None for inc in g.incident(v))


@dataclass
class CriterionReport:
    P1: bool
    P2: bool
    P3: bool
    P2c: bool | None
    witnesses: dict[str, Any]

    @property
    def ok(self) -> bool:
        return self.P1 and self.P2 and self.P3 and (self.P2c is not False)

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"P1": self.P1, "P2": self.P2, "P3": self.P3}
        if self.P2c is not None:
            out["P2c"] = self.P2c
        if self.witnesses:
            out["witnesses"] = self.witnesses
        return out


def check_p1(net: MallNet) -> tuple[bool, Any]:
    for r in net.forest.resolutions("with"):
        on = [lam for lam in net.sorted_linkings() if all(x in r for link in lam for x in link)]
        if len(on) != 1:
            return False, {"with_resolution": sorted(r), "linkings_on_it": [linking_key(x) for x in on]}
    return True, None


def check_p2(net: MallNet) -> tuple[bool, Any]:
    for lam in net.sorted_linkings():
        c = find_cuspfree_cycle(net.linking_graph([lam]).graph)
        if c is not None:
            return False, {"linking": linking_key(lam), "cycle": c.sequence()}
    return True, None


def check_p3(net: MallNet) -> tuple[bool, Any]:
    lams = net.sorted_linkings()
    for sub in iter_subsets(lams, 2):
        lg = net.linking_graph(sub)
        if not any(not _on_switching_cycle(lg.graph, w) for w in sorted(lg.toggled)):
            return False, {"linkings": [linking_key(x) for x in sub], "toggled": sorted(lg.toggled)}
    return True, None


def par_switchings(lg: LinkingGraph) -> Iterable[dict[str, str]]:
    """Each ⅋-switching as the set of premise edges losing their target."""
    pars = sorted(v for v, k in lg.kinds.items() if k == "par")
    for bits in itertools.product("LR", repeat=len(pars)):
        yield {v: edge_id(child(v, side)) for v, side in zip(pars, bits)}


def _acyclic_connected(vertices: Sequence[str], arcs: Iterable[tuple[str, str | None, str | None]]) -> tuple[bool, bool]:
    parent = {v: v for v in vertices}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    acyclic = True
    loose = 0
    for _, a, b in arcs:
        if a is None and b is None:
            loose += 1
            continue
        if a is None or b is None:
            continue
        ra, rb = find(a), find(b)
        if ra == rb:
            acyclic = False
        else:
            parent[ra] = rb
    comps = len({find(v) for v in vertices}) + loose
    return acyclic, comps == 1


def check_p2c(net: MallNet) -> tuple[bool, Any]:
    for lam in net.sorted_linkings():
        lg = net.linking_graph([lam])
        for sw in par_switchings(lg):
            cut = set(sw.values())
            arcs = [(e.id, e.src, None if e.id in cut else e.tgt) for e in lg.edges.values()]
            acyc, conn = _acyclic_connected(lg.vertex_ids(), arcs)
            if not (acyc and conn):
                return False, {"linking": linking_key(lam), "switching": sw, "acyclic": acyc, "connected": conn}
    return True, None


def check_criterion(net: MallNet, variant: str = "standard") -> CriterionReport:
    if variant not in ("standard", "connected"):
        raise ValueError(f"unknown variant {variant!r}")
    w: dict[str, Any] = {}
    p1, x = check_p1(net)
    if x is not None:
        w["P1"] = x
    p2, x = check_p2(net)
    if x is not None:
        w["P2"] = x
    p3, x = check_p3(net)
    if x is not None:
        w["P3"] = x
    p2c = None
    if variant == "connected":
        p2c, x = check_p2c(net)
        if x is not None:
            w["P2c"] = x
    return CriterionReport(p1, p2, p3, p2c, w)


def is_proof_net(net: MallNet) -> bool:
    return check_criterion(net).ok


def require_proof_net(net: MallNet) -> None:
    r = check_criterion(net)
    if not r.ok:
        failed = [k for k in ("P1", "P2", "P3") if not getattr(r, k)]
        raise NotCorrect(f"not a proof net: {', '.join(failed)} fails", r.witnesses)


# ---------------------------------------------------------------------------
# exit jumps


@dataclass(frozen=True)
class ExitJump:
    edge: str
    ax: str
    target: str


def linking_on(net: MallNet, res: Resolution) -> Linking:
    on = [lam for lam in net.sorted_linkings() if all(x in res for link in lam for x in link)]
    if len(on) != 1:
        raise PreconditionViolated("P1", f"{len(on)} linkings on a &-resolution")
    return on[0]


def rechoose(net: MallNet, lam: Linking, w: str) -> Linking:
    """λ^w: the linking on the &-resolution that keeps the left premise of
    ``w`` and otherwise follows λ's resolution (left where it is silent)."""
    r = net.resolution(lam)
    choice = {}
    for x in net.forest.of_kind("with"):
        if x == w or x not in r:
            choice[x] = "L"
        else:
            choice[x] = "L" if child(x, "L") in r else "R"
    return linking_on(net, net.forest.with_resolution(choice))


def find_exit_jump(net: MallNet, omega: Iterable[str], *, check: bool = False) -> ExitJump:
    """A jump edge v → w of G_θ with v in Ω and w a &-vertex outside Ω, for
    a non-empty union Ω (given by its edges) of switching cycles of G_θ."""
    omega = frozenset(omega)
    full = net.linking_graph()
    if not omega:
        raise PreconditionViolated("omega-non-empty", "Ω is empty")
    unknown = sorted(omega - set(full.edges))
    if unknown:
        raise PreconditionViolated("omega-in-graph", unknown[0])
    if check:
        require_proof_net(net)
        g = full.graph
        off = sorted(e for e in omega if cuspfree_cycle_through(g, e) is None)
        if off:
            raise PreconditionViolated("omega-switching", f"edge {off[0]!r} lies on no switching cycle")
    om_vertices = {x for e in omega for x in (full.edges[e].src, full.edges[e].tgt) if x is not None}
    lams = net.sorted_linkings()
    cands = []
    for sub in iter_subsets(lams, 1):
        lg = net.linking_graph(sub)
        if omega <= set(lg.edges):
            cands.append((sub, net.W(sub)))
    # inclusion-maximal W(Λ) first
    cands.sort(key=lambda c: (-len(c[1]), [linking_key(x) for x in c[0]]))
    for sub, _ in cands:
        if len(sub) < 2:
            continue
        lg = net.linking_graph(sub)
        for w in sorted(lg.toggled):
            if w in om_vertices or _on_switching_cycle(lg.graph, w):
                continue
            lw = net.linking_graph({rechoose(net, lam, w) for lam in sub})
            for e in sorted(omega):
                ed = full.edges[e]
                if e in lw.edges or full.kinds.get(ed.src or "") != "ax":
                    continue
                j = jump_id(full.links[ed.src], w)
                if j in full.edges:
                    return ExitJump(j, ed.src, w)
    raise PreconditionViolated("exit-jump", "no jump edge leaves Ω; the set of linkings is not a proof net")


def exit_function(net: MallNet, unions: Sequence[CycleUnion] | None = None) -> dict[CycleUnion, ExitEdge]:
    g = net.linking_graph().graph
    unions = max_cuspfree_unions(g) if unions is None else unions
    out = {}
    for om in unions:
        j = find_exit_jump(net, om.edges)
        out[om] = ExitEdge(j.edge, j.ax, j.target)
    return out


# ---------------------------------------------------------------------------
# splitting vertices


def is_splitting_mall(net: MallNet, v: str) -> bool:
    lg = net.linking_graph()
    k = lg.kinds[v]
    if k == "leaf":
        return False
    g = lg.graph
    if k in ("par", "with"):
        c = lg.edges[edge_id(v)]
        if c.tgt is None:
            return True
        comp = vertex_components(g, removed_edges=frozenset([c.id]))
        return comp[v] != comp[c.tgt]
    comp = vertex_components(g, removed=frozenset([v]))
    seen: set[int] = set()
    for inc in g.incident(v):
        if inc.other is None:
            continue
        if inc.other == v:
            return False
        kk = comp[inc.other]
        if kk in seen:
            return False
        seen.add(kk)
    return True


def strategy_pairs_mall(lg: LinkingGraph, g: LocallyColoredGraph, strategy: str) -> list[tuple[str, str]]:
    jump_cols = {(e.src, g.color(e.id, e.src)) for e in lg.jumps()}
    non_leaf = [v for v in g.vertices if lg.kinds[v] != "leaf"]
    anyp = [(v, a) for v in non_leaf for a in g.colors if (v, a) not in jump_cols]
    if strategy == "any":
        out = anyp
    elif strategy == "pw":
        out = sorted(g.cusp_points())
    elif strategy == "terminal":
        out = []
        for v in non_leaf:
            if lg.kinds[v] == "ax":
                continue
            ocols = {g.color(e.id, v) for e in lg.out_edges(v)}
            out.extend((v, a) for a in g.colors if a not in ocols)
    elif strategy == "non-ax":
        out = [(v, a) for v, a in anyp if lg.kinds[v] != "ax"]
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return sorted(out) or sorted(anyp)


@dataclass(frozen=True)
class MallSplitChoice:
    vertex: str
    pair: tuple[str, str]


def find_splitting_mallnet(net: MallNet, strategy: str = "any", *, check: bool = True) -> MallSplitChoice:
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    if check:
        require_proof_net(net)
    lg = net.linking_graph()
    if not lg.kinds:
        raise Empty("the net has no vertex")
    g = lg.graph
    unions = max_cuspfree_unions(g)
    exits = exit_function(net, unions)
    po = p_out(g, exits)
    pairs = [p for p in strategy_pairs_mall(lg, g, strategy) if p not in po]
    r = find_splitting_mall_graph(g, exits, pairs, unions=unions, validate=check)
    v = r.vertex
    if lg.kinds[v] == "leaf":
        raise LeafVertex(f"{v!r} is a leaf", v)
    if check and not is_splitting_mall(net, v):
        raise NotSplitting(f"vertex {v!r} is not splitting", v)
    return MallSplitChoice(v, r.pair)


def components(net: MallNet) -> list[tuple[frozenset[str], frozenset[str]]]:
    """Connected components of G_θ as (vertices, edges)."""
    g = net.linking_graph().graph
    return [(c.vertices, c.edges) for c in connected_components(g)]


__all__ = [
    "BASE_COLORS",
    "CriterionReport",
    "ExitJump",
    "GEdge",
    "LinkingGraph",
    "MallNet",
    "MallSplitChoice",
    "STRATEGIES",
    "ax_id",
    "check_criterion",
    "check_p1",
    "check_p2",
    "check_p2c",
    "check_p3",
    "check_well_colored_mall",
    "components",
    "edge_id",
    "exit_function",
    "find_exit_jump",
    "find_splitting_mallnet",
    "is_proof_net",
    "is_splitting_mall",
    "jump_id",
    "linking_on",
    "make_net",
    "net_from_json",
    "rechoose",
    "require_proof_net",
    "strategy_pairs_mall",
    "vertices_on_switching_cycles",
    "well_color_graph",
    "well_color_mall",
]
