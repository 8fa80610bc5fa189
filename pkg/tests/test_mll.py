import random

import pytest

from proofweave.errors import ArityViolation, DirectedCycle, Empty, NoSuchHypothesis, NotConnectedClosed, NotCorrect, TypeMismatch
from proofweave.formula import Atom, Bin, dual, parse_formula
from proofweave.io import load_fixture
from proofweave.mll import (
    almost_connected_decompose,
    desequentialize,
    dr_check,
    find_splitting_ps,
    from_sexpr,
    is_almost_connected,
    is_cf_connected,
    is_connected_net,
    iso_check,
    kingdom,
    order_parr,
    ps_from_json,
    sequentialize,
    to_sexpr,
    to_text,
    well_color,
)
from proofweave.mll.derivation import Occ, ax, hyp, mix0, mix2, mixretore_normalize, par_rule, substitute, tensor_rule
from proofweave.mll.structure import check_well_colored, degree, desequentialize_full, disjoint_union, make_ps
from proofweave.mll.seq import STRATEGIES, is_splitting_vertex
from proofweave.oracle import GeneratorConfig, brute_splitting, brute_switchings, random_mll_derivation

X = parse_formula("X")


def fig5():
    return ps_from_json(load_fixture("fig05"))


def ps(vertices, edges):
    return ps_from_json({"vertices": [{"id": v, "kind": k} for v, k in vertices], "edges": edges})


def lone_par():
    return ps(
        [("p", "par")],
        [
            {"id": "a", "tgt": "p", "port": 0, "type": "X"},
            {"id": "b", "tgt": "p", "port": 1, "type": "Y"},
            {"id": "c", "src": "p", "type": "X @ Y"},
        ],
    )


def ax_into(kind):
    edges = [{"id": "a", "src": "x", "tgt": "k", "port": 0, "type": "X^"}, {"id": "b", "src": "x", "tgt": "k", "port": 1, "type": "X"}]
    if kind in ("par", "tensor"):
        op = "@" if kind == "par" else "*"
        edges.append({"id": "c", "src": "k", "type": f"X^ {op} X"})
    return ps([("x", "ax"), ("k", kind)], edges)


# -- structures -----------------------------------------------------------------


def test_fig5_valid():
    s = fig5()
    concl = sorted(str(s.edges[e].type) for e in s.conclusions())
    assert concl == sorted(["(X^ @ X) * Y", "Y^"])
    assert s.is_closed()


def test_single_edge_structure():
    s = ps([], [{"id": "h", "type": "A"}])
    assert s.hypotheses() == ["h"] and s.conclusions() == ["h"]
    r = dr_check(s)
    assert r.correct and r.degree == 1


def test_validation_errors():
    with pytest.raises(ArityViolation):
        ps([("p", "par")], [{"id": "a", "tgt": "p", "type": "X"}, {"id": "c", "src": "p", "type": "X"}])
    with pytest.raises(TypeMismatch):
        ps([("x", "ax")], [{"id": "a", "src": "x", "type": "X"}, {"id": "b", "src": "x", "type": "X"}])
    with pytest.raises(DirectedCycle):
        ps_from_json(
            {
                "untyped": True,
                "vertices": [{"id": "t", "kind": "tensor"}, {"id": "s", "kind": "tensor"}],
                "edges": [
                    {"id": "a", "src": "t", "tgt": "s", "port": 0},
                    {"id": "b", "src": "s", "tgt": "t", "port": 0},
                    {"id": "c", "tgt": "t", "port": 1},
                    {"id": "d", "tgt": "s", "port": 1},
                ],
            }
        )


def test_untyped_keeps_arity():
    with pytest.raises(ArityViolation):
        ps_from_json({"untyped": True, "vertices": [{"id": "x", "kind": "ax"}], "edges": [{"id": "a", "src": "x"}]})
    s = ps_from_json({"untyped": True, "vertices": [{"id": "x", "kind": "ax"}], "edges": [{"id": "a", "src": "x"}, {"id": "b", "src": "x"}]})
    assert dr_check(s).correct


# -- well-coloring and correctness ---------------------------------------------


def test_well_coloring_fig5():
    s = fig5()
    g = well_color(s)
    assert check_well_colored(s, g) == []
    assert g.cusp_points() == {("v", "solid")}
    assert s.kind("v") == "par"


def test_no_par_no_cusp_points():
    s = ax_into("cut")
    assert well_color(s).cusp_points() == frozenset()


def test_dr_examples():
    r = dr_check(fig5())
    assert r.correct and r.degree == 1
    # an axiom cut against itself is a cycle with no par on it
    r = dr_check(ax_into("cut"))
    assert not r.correct and r.witness.is_cycle
    # the two-edge cycle runs through both premises of the par: no switching cycle
    r = dr_check(ax_into("par"))
    assert r.correct and r.degree == 1
    r = dr_check(ax_into("tensor"))
    assert not r.correct and r.witness.is_cycle
    r = dr_check(lone_par())
    assert r.correct and r.degree == 2


# -- derivations ----------------------------------------------------------------


def test_deseq_ax_and_mix0():
    s = desequentialize(ax(X))
    assert [s.kind(v) for v in s.vertex_ids()] == ["ax"]
    assert len(s.conclusions()) == 2
    e = desequentialize(mix0())
    assert e.is_empty()


def test_degree_formula_small():
    d = mix2(mix2(ax(X), ax(X)), mix0())
    assert degree(desequentialize(d)) == 1 + 2 - 1


def test_sexpr_basics():
    assert to_sexpr(mix0()) == "(mix0)"
    assert to_sexpr(ax(X)) == "(ax X)"
    d = from_sexpr("(tensor [0 1] (par (ax X)) (ax Y))")
    assert to_sexpr(d) == "(tensor [0 1] (par (ax X)) (ax Y))"
    assert "ax" in to_text(d)


def test_mixretore():
    a = ax(X)
    assert mixretore_normalize(mix2(a, mix0())) == a
    assert mixretore_normalize(mix0()).rule == "mix0"
    assert mixretore_normalize(mix2(mix0(), mix2(mix0(), a))) == a


def test_substitute_into_bare_hyp():
    pi1 = ax(X)
    h = hyp(X)
    a = next(o for o in pi1.concl if o.formula == X)
    assert substitute(pi1, a, h, h.principal[0]) == pi1
    with pytest.raises(NoSuchHypothesis):
        substitute(pi1, a, ax(X), Occ.fresh(X))


def eta(f):
    """Derivation of |- f^, f by axiom expansion; returns (derivation, occ of f)."""
    if isinstance(f, Atom):
        d = ax(f if not f.neg else dual(f))
        return d, next(o for o in d.concl if o.formula == f)
    l, lo = eta(f.left)
    r, ro = eta(f.right)
    ln = next(o for o in l.concl if o is not lo)
    rn = next(o for o in r.concl if o is not ro)
    if f.op == "*":
        t = tensor_rule(l, lo, r, ro)
        return par_rule(t, ln, rn), next(o for o in t.concl if o.formula == f)
    t = tensor_rule(l, ln, r, rn)
    p = par_rule(t, lo, ro)
    return p, next(o for o in p.concl if o.formula == f)


def glue(d1, a, d2, h):
    """Edge-identification of the two desequentializations along a / h."""
    x1, x2 = desequentialize_full(d1), desequentialize_full(d2)
    ea, eh = x1.edge_of[a], x2.edge_of[h]
    vs, es, ports = [], [], {}
    for pre, x in (("1:", x1), ("2:", x2)):
        s = x.structure
        for v in s.vertex_ids():
            vs.append((pre + v, s.kind(v)))
            for i, e in enumerate(s.vertices[v].premises):
                ports[pre + e] = i
        for e in s.edge_ids():
            if (pre, e) in (("1:", ea), ("2:", eh)):
                continue
            y = s.edges[e]
            es.append((pre + e, y.src and pre + y.src, y.tgt and pre + y.tgt, y.type))
    top, bot = x1.structure.edges[ea], x2.structure.edges[eh]
    es.append(("glued", top.src and "1:" + top.src, bot.tgt and "2:" + bot.tgt, top.type))
    if bot.tgt is not None:
        ports["glued"] = ports.pop("2:" + eh, x2.structure.vertices[bot.tgt].premises.index(eh))
    return make_ps(vs, es, ports=ports)


def test_substitution_is_edge_glue():
    done = 0
    for seed in range(3000):
        rng = random.Random(seed)
        d2 = random_mll_derivation(rng, GeneratorConfig(seed=seed, rules=10, allow_cut=False))
        if not d2.hyps:
            continue
        h = d2.hyps[0]
        d1, a = eta(h.formula)
        assert iso_check(desequentialize(substitute(d1, a, d2, h)), glue(d1, a, d2, h))
        done += 1
        if done == 100:
            break
    assert done == 100


# -- order and splitting --------------------------------------------------------


def test_order_parr():
    s = ps_from_json(load_fixture("fig12"))
    assert order_parr(s, "u", "v")
    assert not order_parr(s, "v", "u")
    assert not order_parr(s, "v", "v")
    f5 = fig5()
    (p,) = f5.of_kind("par")
    assert not order_parr(f5, p, p)


def test_strategies_fig5():
    s = fig5()
    assert find_splitting_ps(s, "sections").vertex == "v"
    assert find_splitting_ps(s, "terminal").vertex == "u"


def test_terminal_fig13():
    s = ps_from_json(load_fixture("fig13"))
    v = find_splitting_ps(s, "terminal").vertex
    assert v in {"u", "v", "x"}
    assert {"u", "v", "x"} <= brute_splitting(well_color(s))
    assert all(is_splitting_vertex(s, t) for t in "uvx")


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_strategy_contracts(strategy):
    for seed in range(40):
        rng = random.Random(seed)
        s = desequentialize(random_mll_derivation(rng, GeneratorConfig(seed=seed, rules=10)))
        if not s.vertices:
            continue
        v = find_splitting_ps(s, strategy).vertex
        assert is_splitting_vertex(s, v)
        assert v in brute_splitting(well_color(s))
        if strategy == "terminal":
            assert s.is_terminal(v)
        if strategy in ("sections", "direct-par") and s.of_kind("par"):
            assert s.kind(v) == "par"
        if strategy == "non-ax" and any(s.kind(x) != "ax" for x in s.vertices):
            assert s.kind(v) != "ax"


def test_not_correct_rejected():
    with pytest.raises(NotCorrect):
        sequentialize(ax_into("tensor"))
    with pytest.raises(Empty):
        find_splitting_ps(make_ps([], []))


# -- sequentialization ------------------------------------------------------------


def test_sequentialize_fig5():
    s = fig5()
    for strategy in STRATEGIES:
        d = sequentialize(s, strategy)
        assert d.count("mix2") == d.count("mix0") == d.count("hyp") == 0
        assert iso_check(desequentialize(d), s)


def test_sequentialize_empty():
    assert to_sexpr(sequentialize(make_ps([], []))) == "(mix0)"


def test_iso_examples():
    s = fig5()
    assert iso_check(s, s)
    relabeled = load_fixture("fig05")
    ren = {v["id"]: "n" + v["id"] for v in relabeled["vertices"]}
    for v in relabeled["vertices"]:
        v["id"] = ren[v["id"]]
    for e in relabeled["edges"]:
        e["id"] = "k" + e["id"]
        for side in ("src", "tgt"):
            if e.get(side):
                e[side] = ren[e[side]]
    assert iso_check(s, ps_from_json(relabeled))
    assert not iso_check(desequentialize(ax(X)), ax_into("cut"))


# -- connectedness ----------------------------------------------------------------


def test_decompose():
    s = fig5()
    dec = almost_connected_decompose(s)
    assert dec.witness is None and len(dec.components) == 1 and degree(dec.components[0]) == 1
    assert almost_connected_decompose(lone_par()).witness == "p"
    two = disjoint_union(s, s)
    dec = almost_connected_decompose(two)
    assert len(dec.components) == 2 and all(degree(c) == 1 for c in dec.components)
    assert is_almost_connected(two) and not is_connected_net(two)


def test_connected_fig5():
    s = fig5()
    assert is_connected_net(s) and is_cf_connected(s) and is_almost_connected(s)


def test_kingdoms():
    s = ps_from_json(load_fixture("fig13"))
    k = kingdom(s, "axl")
    assert k.vertices == {"axl"} and k.edges == set(s.vertices["axl"].conclusions)
    assert kingdom(s, "v").vertices == {"v", "axl", "axr"}
    with pytest.raises(NotConnectedClosed):
        kingdom(lone_par(), "p")


def test_cf_connected_but_not_connected_with_hypothesis_under_par():
    # a hypothesis entering a par: the switching that keeps it leaves the
    # other premise without endpoints, so d = 2, yet every two edges are
    # joined by a cusp-free path
    d = from_sexpr('(par (mix2 (tensor (hyp "X * Z") (par [1 0] (ax Y))) (hyp "Y^ * Z")))')
    s = desequentialize(d)
    assert dr_check(s).degree == 2 == 1 + d.count("mix2") - d.count("mix0")
    assert brute_switchings(s).degree == 2
    assert is_cf_connected(s) and not is_connected_net(s)


def test_cf_connected_iff_connected_on_closed_nets():
    for seed in range(150):
        s = desequentialize(random_mll_derivation(random.Random(seed), GeneratorConfig(seed=seed, rules=12, allow_hyp=False)))
        if not s.is_empty():
            assert is_cf_connected(s) == is_connected_net(s)
