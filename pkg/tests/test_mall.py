import random

import pytest

from proofweave.errors import Empty, InvalidLinking, LeafVertex, PreconditionViolated, SliceConstraintViolated
from proofweave.formula import parse_formula
from proofweave.io import load_fixture
from proofweave.mall import (
    STRATEGIES,
    Forest,
    check_criterion,
    desequentialize_mall,
    exit_function,
    find_exit_jump,
    find_splitting_mallnet,
    from_sexpr,
    is_splitting_mall,
    make_net,
    net_from_json,
    sequentialize_mall_full,
    split_at,
    to_sexpr,
)
from proofweave.mall.net import check_well_colored_mall, max_cuspfree_unions
from proofweave.oracle import GeneratorConfig, brute_mall_check, brute_splitting, random_mall_derivation

X = parse_formula("X")


def fig21():
    return net_from_json(load_fixture("fig21"))


def toggle2():
    return net_from_json(load_fixture("toggle2"))


def axiom_net():
    return make_net(Forest.of([parse_formula("X^"), X]), [[["0", "1"]]])


def random_nets(n, seed0=0, **kw):
    cfg = dict(rules=12, withs=4, leaf_bias=0.1)
    cfg.update(kw)
    out = []
    seed = seed0
    while len(out) < n:
        d = random_mall_derivation(random.Random(seed), GeneratorConfig(seed=seed, **cfg))
        out.append(desequentialize_mall(d))
        seed += 1
    return out


# -- forest and resolutions --------------------------------------------------


def test_resolution_counts_on_fig21():
    f = fig21().forest
    assert len(f.resolutions("with")) == 4
    assert len(f.resolutions("additive")) == 6
    assert f.of_kind("with") == ["0.R", "1.L"]
    assert f.of_kind("plus") == ["0"]


def test_axiom_sequent_has_one_resolution_each():
    f = axiom_net().forest
    assert len(f.resolutions("with")) == len(f.resolutions("additive")) == 1


def test_linking_must_cover_a_resolution():
    f = fig21().forest
    with pytest.raises(InvalidLinking):
        make_net(f, [[["0.L", "1.L.R"], ["0.R.L", "1.L.L"]]])
    with pytest.raises(InvalidLinking):
        make_net(Forest.of([X, X]), [[["0", "1"]]])


# -- toggling and the linking graph ---------------------------------------------


def test_toggles_and_dependencies():
    net = fig21()
    l0, l1, l2 = net.sorted_linkings()
    assert net.toggles([l0, l1]) == {"1.L"}
    assert net.toggles([l0, l2]) == {"1.L"}
    assert net.toggles([l1, l2]) == {"0.R"}
    assert net.toggles([l0]) == frozenset()
    deps = net.dependencies([l1, l2])
    assert {w for _, w in deps} == {"0.R"}
    assert {link for link, _ in deps} == set(l1) | set(l2)


def test_single_linking_graph_has_no_jumps():
    net = fig21()
    l0 = net.sorted_linkings()[0]
    lg = net.linking_graph([l0])
    assert [v for v, k in lg.kinds.items() if k == "ax"] == [next(iter(lg.links))]
    assert lg.jumps() == []
    with pytest.raises(Empty):
        net.linking_graph([])


def test_jumps_reach_with_vertices():
    lg = fig21().linking_graph()
    assert lg.jumps()
    for e in lg.jumps():
        assert lg.kinds[e.src] == "ax"
        assert lg.kinds[e.tgt] == "with"


# -- correctness criterion -----------------------------------------------------


def test_fig21_is_a_proof_net():
    r = check_criterion(fig21(), "connected")
    assert r.P1 and r.P2 and r.P3 and r.P2c
    assert r.ok


def test_missing_linking_breaks_resolution_condition():
    net = fig21()
    sub = make_net(net.forest, [[sorted(link) for link in lam] for lam in net.sorted_linkings()[:2]])
    assert not check_criterion(sub).P1


def test_empty_linking_on_hypothesis_only():
    net = make_net(Forest.of([parse_formula("A")], ["0"]), [[]])
    assert check_criterion(net).ok
    d, roots = sequentialize_mall_full(net)
    assert to_sexpr(d) == "(hyp A)"


def test_empty_sequent():
    net = make_net(Forest.of([]), [[]])
    assert check_criterion(net).ok
    d, _ = sequentialize_mall_full(net)
    assert to_sexpr(d) == "(mix0)"


def test_criterion_agrees_with_brute_force():
    for net in random_nets(40, seed0=100) + [fig21(), toggle2()]:
        r = check_criterion(net)
        v = brute_mall_check(net)
        assert (r.P1, r.P2, r.P3) == (v.P1, v.P2, v.P3)


# -- well-coloring --------------------------------------------------------------


def test_linking_graph_is_well_colored():
    for net in random_nets(30, seed0=200) + [fig21(), toggle2()]:
        lg = net.linking_graph()
        assert check_well_colored_mall(lg, lg.graph) == []


def test_fig21_cusp_points():
    g = fig21().linking_graph().graph
    assert set(g.cusp_points()) == {("0.R", "solid"), ("1.L", "solid")}


# -- exit jumps -------------------------------------------------------------------


def test_exit_jump_on_toggle2():
    net = toggle2()
    (om,) = max_cuspfree_unions(net.linking_graph().graph)
    j = find_exit_jump(net, om.edges, check=True)
    assert (j.edge, j.ax, j.target) == ("ax:0.R.L|1~>0", "ax:0.R.L|1", "0")
    assert exit_function(net)[om].edge == j.edge


def test_exit_jump_needs_two_linkings():
    net = toggle2()
    (om,) = max_cuspfree_unions(net.linking_graph().graph)
    single = make_net(net.forest, [[sorted(link) for link in net.sorted_linkings()[0]]])
    with pytest.raises(PreconditionViolated):
        find_exit_jump(single, om.edges)
    with pytest.raises(PreconditionViolated):
        find_exit_jump(net, [])


def test_exit_jump_exists_for_every_union():
    seen = 0
    for net in random_nets(80, seed0=300):
        lg = net.linking_graph()
        full = lg.edges
        for om in max_cuspfree_unions(lg.graph):
            seen += 1
            j = find_exit_jump(net, om.edges)
            verts = {x for e in om.edges for x in (full[e].src, full[e].tgt) if x is not None}
            assert full[j.edge].kind == "jump"
            assert j.ax in verts and j.target not in verts
    assert seen > 0


def test_unions_are_connected():
    for net in random_nets(40, seed0=400) + [toggle2()]:
        lg = net.linking_graph()
        for om in max_cuspfree_unions(lg.graph):
            adj = {}
            for e in om.edges:
                a, b = lg.edges[e].src, lg.edges[e].tgt
                adj.setdefault(a, set()).add(b)
                adj.setdefault(b, set()).add(a)
            start = next(iter(adj))
            stack, seen = [start], {start}
            while stack:
                for y in adj[stack.pop()] - seen:
                    seen.add(y)
                    stack.append(y)
            assert seen == set(adj)


# -- splitting vertices -------------------------------------------------------------


@pytest.mark.parametrize("strategy,expected", [("any", "1"), ("pw", "1.L"), ("terminal", "1"), ("non-ax", "1")])
def test_fig21_strategies(strategy, expected):
    assert find_splitting_mallnet(fig21(), strategy).vertex == expected


def test_strategies_return_oracle_vertices():
    for net in random_nets(30, seed0=500):
        lg = net.linking_graph()
        if not lg.kinds or len(lg.kinds) > 14:
            continue
        truth = brute_splitting(lg.graph)
        for st in STRATEGIES:
            v = find_splitting_mallnet(net, st).vertex
            assert v in truth
            assert is_splitting_mall(net, v)
            if st == "terminal" and lg.kinds[v] != "ax":
                assert net.forest.parent(v) is None


def test_empty_net_has_no_splitting_vertex():
    with pytest.raises(Empty):
        find_splitting_mallnet(make_net(Forest.of([]), [[]]))


def test_split_with_vertex():
    net = fig21()
    s = split_at(net, "1.L", check=True)
    assert s.kind == "substitution"
    below, above = s.parts
    assert "1.L" in below.forest.hyps
    t = split_at(above, "1.L", check=True)
    assert t.kind == "with"
    assert t.parts[0].linkings | t.parts[1].linkings == above.linkings


def test_split_plus_vertex():
    net = make_net(Forest.of([parse_formula("X + Y"), parse_formula("X^")]), [[["0.L", "1"]]])
    s = split_at(net, "0", check=True)
    assert s.kind == "plus" and s.side == 1


def test_split_rejects_leaf():
    with pytest.raises(LeafVertex):
        split_at(axiom_net(), "0")


# -- sequentialization ---------------------------------------------------------------


def test_fig21_round_trip_all_strategies():
    net = fig21()
    for st in STRATEGIES:
        d, roots = sequentialize_mall_full(net, st, check=True)
        assert desequentialize_mall(d, roots).same_as(net)


def test_random_round_trips():
    for net in random_nets(60, seed0=600):
        d, roots = sequentialize_mall_full(net, check=True)
        assert desequentialize_mall(d, roots).same_as(net)


def test_valid_hypothesis_usage():
    d = from_sexpr("(with [1 1] (tensor [0 1] (hyp A) (ax X)) (tensor [0 1] (hyp A) (ax X)))")
    net = desequentialize_mall(d)
    assert net.forest.hyps == {"1.L"}
    assert len(net.linkings) == 2
    assert check_criterion(net).ok


@pytest.mark.parametrize(
    "text",
    [
        '(with [1 1] (mix2 (hyp "Y^ @ Y") (ax X)) (mix2 (par (ax Y)) (ax X)))',
        "(with (hyp X) (hyp X))",
        "(with (tensor (hyp A) (ax X)) (tensor (hyp A) (ax X)))",
    ],
)
def test_slice_constraint(text):
    with pytest.raises(SliceConstraintViolated):
        desequentialize_mall(from_sexpr(text))


def test_sexpr_examples():
    assert [len(lam) for lam in desequentialize_mall(from_sexpr("(ax X)")).linkings] == [1]
    assert len(desequentialize_mall(from_sexpr("(with (ax X) (ax X))")).linkings) == 2
    net = desequentialize_mall(from_sexpr("(plus1 [1] Y (ax X))"))
    assert check_criterion(net).ok
