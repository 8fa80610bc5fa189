"""Property tests for the invariants of each module."""

import itertools
import random

from hypothesis import assume, given
from hypothesis import strategies as st

from proofweave.corollaries import encode_local_as_edge
from proofweave.graph import Path, build_graph, concat_report, edge_colored, iter_simple_paths_between
from proofweave.mall import check_criterion, desequentialize_mall, sequentialize_mall_full
from proofweave.mall.net import max_cuspfree_unions
from proofweave.mll import desequentialize, dr_check, is_cf_connected, is_connected_net, iso_check, sequentialize
from proofweave.oracle import (
    GeneratorConfig,
    brute_mall_check,
    brute_splitting,
    brute_switchings,
    enumerate_cycles,
    random_mall_derivation,
    random_mll_derivation,
)
from proofweave.yeo import YeoContext, find_cuspfree_cycle, is_arrow_connected, splitting_vertices, terminal_lemma


@st.composite
def graphs(draw, max_vertices=5, max_edges=7, max_colors=3):
    n = draw(st.integers(1, max_vertices))
    k = draw(st.integers(1, max_colors))
    names = [f"v{i}" for i in range(n)]
    palette = [f"c{i}" for i in range(k)]
    m = draw(st.integers(0, max_edges if n > 1 else 0))
    edges = []
    for i in range(m):
        a, b = draw(st.lists(st.sampled_from(names), min_size=2, max_size=2, unique=True))
        edges.append((f"e{i}", [(a, draw(st.sampled_from(palette))), (b, draw(st.sampled_from(palette)))]))
    return build_graph(names, edges, palette)


@st.composite
def walks(draw):
    g = draw(graphs())
    v = draw(st.sampled_from(list(g.vertices)))
    seq = [v]
    for _ in range(draw(st.integers(0, 8))):
        inc = [i for i in g.incident(seq[-1]) if i.other is not None]
        if not inc:
            break
        i = draw(st.sampled_from(inc))
        seq += [i.edge, i.other]
    return g, Path.from_sequence(g, seq)


seeds = st.integers(0, 10**6)


# -- graphs and paths -----------------------------------------------------------------


@given(walks())
def test_reverse_keeps_cusp_count(gp):
    _, p = gp
    assert p.reverse().cusp_count() == p.cusp_count()


@given(graphs(max_vertices=5, max_edges=7))
def test_reversing_trick(g):
    for c in enumerate_cycles(g):
        p = Path(g, c.vertices + c.vertices[:1], c.edges)
        assert p.is_cycle
        if p.wrap_cusp() is not None:
            continue
        r = p.reverse()
        for a in g.colors:
            assert p.starting_color != a or r.starting_color != a


@given(graphs(max_vertices=5, max_edges=6))
def test_concat_of_simple_paths(g):
    paths = [Path.trivial(g, v) for v in g.vertices]
    for s, t in itertools.permutations(g.vertices, 2):
        paths.extend(iter_simple_paths_between(g, s, t))
    for p1 in paths:
        for p2 in paths:
            if p1.target != p2.source:
                continue
            r = concat_report(p1, p2)
            if r.lemma_shared_endpoints or r.lemma_disjoint:
                assert r.simple


@given(st.integers(2, 6), st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5), st.sampled_from("abc")), max_size=8))
def test_edge_coloring_lift(n, raw):
    names = [f"v{i}" for i in range(n)]
    edges = [(f"e{i}", names[a % n], names[b % n], c) for i, (a, b, c) in enumerate(raw) if a % n != b % n]
    g = edge_colored(names, edges)
    expected = set()
    for (e, u, v, c), (f, x, y, d) in itertools.combinations(edges, 2):
        if c == d:
            for w in {u, v} & {x, y}:
                expected.add((w, frozenset((e, f))))
    got = {(cu.vertex, frozenset((cu.left, cu.right))) for v in g.vertices for cu in g.cusps_at(v)}
    assert got == expected


# -- the order on pairs and splitting ----------------------------------------------------


@given(graphs(max_vertices=5, max_edges=6))
def test_order_is_strict_partial(g):
    assume(find_cuspfree_cycle(g) is None)
    ctx = YeoContext(g)
    pairs = g.all_pairs()
    lt = {(a, b) for a in pairs for b in pairs if ctx.order_lt(a, b) is not None}
    assert all((a, a) not in lt for a in pairs)
    for a, b in lt:
        for c in pairs:
            if (b, c) in lt:
                assert (a, c) in lt


@given(graphs(max_vertices=6, max_edges=8))
def test_engine_matches_oracle_splitting(g):
    assert splitting_vertices(g) == brute_splitting(g)


@given(graphs(max_vertices=5, max_edges=6))
def test_terminal_lemma(g):
    ctx = YeoContext(g)
    cps = g.cusp_points()
    for e in g.edges:
        for v in g.incidence(e):
            if (v, g.color(e, v)) in cps:
                continue
            kind, w = terminal_lemma(g, e, v)
            if kind == "cycle":
                assert w.is_cycle and w.is_cusp_free() and v in w.vertex_set()
            else:
                u = g.other_end(e, v)
                assert w == u
                for a in g.colors:
                    if a != g.color(e, v):
                        assert ctx.order_lt((v, a), (u, g.color(e, u))) is not None


@given(graphs(max_vertices=6, max_edges=8))
def test_encoding_properties(g):
    assume(g.is_total)
    enc = encode_local_as_edge(g)
    h = enc.graph
    assert (find_cuspfree_cycle(g) is None) == (find_cuspfree_cycle(h) is None)
    split_g, split_h = splitting_vertices(g), splitting_vertices(h)
    assert split_g == split_h & enc.originals
    assert not (split_h & enc.added)


@given(graphs(max_vertices=6, max_edges=9))
def test_unions_are_arrow_connected(g):
    for om in max_cuspfree_unions(g):
        assert is_arrow_connected(g, om.vertices, om.edges)


# -- MLL ---------------------------------------------------------------------------


@given(seeds)
def test_mll_degree_and_round_trip(seed):
    d = random_mll_derivation(random.Random(seed), GeneratorConfig(seed=seed, rules=12))
    ps = desequentialize(d)
    r = dr_check(ps)
    assert r.correct
    assert r.degree == 1 + d.count("mix2") - d.count("mix0")
    assert iso_check(desequentialize(sequentialize(ps)), ps)


@given(seeds)
def test_dr_check_matches_switchings(seed):
    d = random_mll_derivation(random.Random(seed), GeneratorConfig(seed=seed, rules=10))
    ps = desequentialize(d)
    assume(sum(1 for v in ps.vertex_ids() if ps.kind(v) == "par") <= 8)
    a, b = dr_check(ps), brute_switchings(ps)
    assert a.correct == b.correct
    assert a.degree == b.degree


@given(seeds)
def test_connected_iff_cf_connected(seed):
    d = random_mll_derivation(random.Random(seed), GeneratorConfig(seed=seed, rules=10, allow_hyp=False))
    ps = desequentialize(d)
    assert is_connected_net(ps) == is_cf_connected(ps)


# -- MALL --------------------------------------------------------------------------


def mall_net(seed, rules=12):
    d = random_mall_derivation(random.Random(seed), GeneratorConfig(seed=seed, rules=rules, withs=4, leaf_bias=0.1))
    return desequentialize_mall(d)


@given(seeds)
def test_mall_round_trip(seed):
    net = mall_net(seed)
    d, roots = sequentialize_mall_full(net)
    assert desequentialize_mall(d, roots).same_as(net)


@given(seeds)
def test_mall_criterion_matches_oracle(seed):
    net = mall_net(seed, rules=10)
    r, v = check_criterion(net), brute_mall_check(net)
    assert (r.P1, r.P2, r.P3) == (v.P1, v.P2, v.P3)


@given(seeds)
def test_exists_jump(seed):
    net = mall_net(seed)
    deps = net.dependencies(net.linkings)
    for l0, l1 in itertools.permutations(net.sorted_linkings(), 2):
        t = net.toggles([l0, l1])
        for link in l0 - l1:
            assert any((link, w) in deps for w in t)
