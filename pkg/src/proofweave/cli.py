"""Command-line front end.

Exit codes: 0 success, 1 a checked property fails (the report says which and
carries the witness), 2 malformed input or usage.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path as FsPath
from typing import Any, Callable, Sequence

from . import corollaries as C
from .errors import InputError, ProofweaveError, PropertyFailure
from .graph import LocallyColoredGraph, Path, graph_from_json
from .io import ENV_VAR, dumps, fixtures_dir, load_json
from .oracle import Cycle

MLL_STRATEGIES = ("all-pairs", "sections", "terminal", "non-ax", "direct-par")
MALL_STRATEGIES = ("any", "pw", "terminal", "non-ax")
_MLL_ALIAS = {"any": "all-pairs", "pw": "sections"}
_MALL_ALIAS = {"all-pairs": "any", "sections": "pw"}
COROLLARIES = ("yeo", "grossman-haggkvist", "kotzig", "seymour-giles", "shoesmith-smiley", "h-yeo")


class Failed(Exception):
    """A property check failed; the payload is still printed."""

    def __init__(self, report: Any) -> None:
        super().__init__("property failure")
        self.report = report


# ---------------------------------------------------------------------------
# input / output helpers


def resolve(name: str) -> FsPath:
    """A path, or the name of a shipped fixture (``fig5`` finds ``fig05.json``)."""
    p = FsPath(name)
    if p.is_file():
        return p
    d = fixtures_dir()
    stem = p.name[:-5] if p.name.endswith(".json") else p.name
    cands = [stem]
    if stem.startswith("fig") and stem[3:].isdigit():
        cands.append(f"fig{int(stem[3:]):02d}")
    for c in cands:
        q = d / f"{c}.json"
        if q.is_file():
            return q
    raise InputError(f"no such file or fixture: {name} (fixtures in {d}; set {ENV_VAR} to override)")


def read_json(name: str) -> Any:
    return load_json(resolve(name))


def read_text(name: str) -> str:
    p = FsPath(name)
    if not p.is_file():
        p = resolve(name)
    try:
        return p.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {name}: {exc.strerror}") from exc


def witness(x: Any) -> Any:
    """JSON rendering of certificates (paths, cycles, pairs, unions)."""
    if isinstance(x, (Path, Cycle)):
        return x.sequence()
    if isinstance(x, (list, tuple)):
        return [witness(y) for y in x]
    if isinstance(x, (set, frozenset)):
        return sorted((witness(y) for y in x), key=str)
    if isinstance(x, dict):
        return {str(k): witness(v) for k, v in x.items()}
    if hasattr(x, "__dataclass_fields__"):
        return {k: witness(getattr(x, k)) for k in x.__dataclass_fields__ if not k.startswith("_")}
    if x is None or isinstance(x, (str, int, float, bool)):
        return x
    return str(x)


def emit(args: argparse.Namespace, report: Any, *, derivation: Any = None, render_text: Callable | None = None) -> None:
    fmt = args.format
    if derivation is not None and fmt == "sexpr":
        print(derivation)
    elif derivation is not None and fmt == "text" and render_text is not None:
        print(render_text())
    else:
        print(dumps(witness(report)))


def _strategy(args: argparse.Namespace, allowed: Sequence[str], alias: dict[str, str], default: str) -> str:
    s = args.strategy or default
    s = alias.get(s, s)
    if s not in allowed:
        raise InputError(f"strategy {args.strategy!r} is not available here (choose from {', '.join(allowed)})")
    return s


# ---------------------------------------------------------------------------
# graph


def _graph(args: argparse.Namespace) -> tuple[LocallyColoredGraph, dict]:
    data = read_json(args.file)
    if not isinstance(data, dict):
        raise InputError("a graph file holds a JSON object")
    g = graph_from_json(data)
    if args.max_vertices is not None and len(g.vertices) > args.max_vertices:
        raise InputError(f"graph has {len(g.vertices)} vertices, above --max-vertices {args.max_vertices}")
    return g, data


def cmd_graph_check(args: argparse.Namespace) -> None:
    from .yeo import find_cuspfree_cycle

    g, _ = _graph(args)
    w = find_cuspfree_cycle(g)
    report = {
        "vertices": len(g.vertices),
        "edges": len(g.edges),
        "total": g.is_total(),
        "cusp_points": sorted(g.cusp_points()),
        "cuspfree_cycle": w,
    }
    if w is not None:
        raise Failed(report)
    emit(args, report)


def cmd_graph_split(args: argparse.Namespace) -> None:
    from .yeo import exit_from_edges, find_splitting_mall_graph, find_splitting_param, max_cuspfree_unions, p_out

    g, data = _graph(args)
    strategy = _strategy(args, ("all-pairs", "sections"), {"any": "all-pairs", "pw": "sections"}, "all-pairs")
    if "pairs" in data:
        pairs = [tuple(p) for p in data["pairs"]]
    elif strategy == "sections":
        pairs = sorted(g.cusp_points()) or g.all_pairs()
    else:
        pairs = g.all_pairs()
    if "exits" in data:
        unions = max_cuspfree_unions(g)
        exits = exit_from_edges(g, data["exits"], unions)
        if "pairs" not in data:
            po = p_out(g, exits)
            pairs = [p for p in pairs if p not in po]
        r = find_splitting_mall_graph(g, exits, pairs, unions=unions)
    else:
        r = find_splitting_param(g, pairs)
    emit(args, {"splitting": [r.vertex], "pair": list(r.pair), "chain": [list(p) for p in r.chain]})


def cmd_graph_corollary(args: argparse.Namespace) -> None:
    data = read_json(args.file)
    if not isinstance(data, dict):
        raise InputError("a graph file holds a JSON object")
    aux = dict(data)
    if args.aux:
        extra = read_json(args.aux)
        if not isinstance(extra, dict):
            raise InputError("the auxiliary file holds a JSON object")
        aux.update(extra)
    name = args.name

    def need(key: str) -> Any:
        if key not in aux:
            raise InputError(f"corollary {name} needs {key!r} (in the graph file or --aux)")
        return aux[key]

    if name == "shoesmith-smiley":
        dg = C.DirectedGraph.from_json(data)
        v = C.shoesmith_smiley(dg, [str(x) for x in need("S")])
        emit(args, {"corollary": name, "vertex": v})
        return
    g = graph_from_json(data)
    if name == "yeo":
        emit(args, {"corollary": name, "vertex": C.yeo_classic(g)})
    elif name == "grossman-haggkvist":
        r = C.grossman_haggkvist(g)
        emit(args, {"corollary": name, "kind": r.kind, "vertex": r.vertex, "cycle": r.cycle})
    elif name == "kotzig":
        emit(args, {"corollary": name, "bridge": C.kotzig(g, [str(e) for e in need("matching")])})
    elif name == "seymour-giles":
        phi = {str(k): str(v) for k, v in need("phi").items()}
        u = C.seymour_giles(g, phi)
        emit(args, {"corollary": name, "vertex": u, "bridge": phi[u]})
    elif name == "h-yeo":
        h = need("H")
        hc = C.HColoring.build([str(x) for x in h.get("vertices", [])], [tuple(map(str, e)) for e in h.get("edges", [])])
        emit(args, {"corollary": name, "vertex": C.h_yeo(g, hc)})
    else:  # pragma: no cover - argparse restricts the choices
        raise InputError(f"unknown corollary {name!r}")


# ---------------------------------------------------------------------------
# mll


def _ps(args: argparse.Namespace):
    from .mll import ps_from_json

    data = read_json(args.file)
    if not isinstance(data, dict):
        raise InputError("a proof structure file holds a JSON object")
    ps = ps_from_json(data)
    if args.max_vertices is not None and len(ps.vertices) > args.max_vertices:
        raise InputError(f"structure has {len(ps.vertices)} vertices, above --max-vertices {args.max_vertices}")
    return ps


def cmd_mll_check(args: argparse.Namespace) -> None:
    from .mll import dr_check

    r = dr_check(_ps(args))
    report = {"correct": r.correct, "switching_cycle": r.witness, "degree": r.degree}
    if not r.correct:
        raise Failed(report)
    emit(args, report)


def cmd_mll_seq(args: argparse.Namespace) -> None:
    from .mll import sequentialize, to_sexpr, to_text

    s = _strategy(args, MLL_STRATEGIES, _MLL_ALIAS, "all-pairs")
    d = sequentialize(_ps(args), s)
    text = to_sexpr(d)
    emit(args, {"strategy": s, "derivation": text, "rules": d.size()}, derivation=text, render_text=lambda: to_text(d))


def _derivation_source(name: str) -> str:
    text = read_text(name).strip()
    if text.startswith("{"):
        try:
            import json

            return str(json.loads(text)["derivation"])
        except (ValueError, KeyError, TypeError) as exc:
            raise InputError(f"{name}: expected an S-expression or a JSON object with 'derivation'") from exc
    return text


def cmd_mll_deseq(args: argparse.Namespace) -> None:
    from .mll import desequentialize, from_sexpr

    ps = desequentialize(from_sexpr(_derivation_source(args.file)))
    emit(args, ps.to_json())


# ---------------------------------------------------------------------------
# mall


def _net(args: argparse.Namespace):
    from .mall import net_from_json

    data = read_json(args.file)
    if not isinstance(data, dict):
        raise InputError("a MALL net file holds a JSON object")
    return net_from_json(data)


def cmd_mall_check(args: argparse.Namespace) -> None:
    from .mall import check_criterion

    r = check_criterion(_net(args), "connected" if args.connected else "standard")
    report = r.to_json()
    if not r.ok:
        raise Failed(report)
    emit(args, report)


def cmd_mall_seq(args: argparse.Namespace) -> None:
    from .mall import sequentialize_mall, to_sexpr, to_text

    s = _strategy(args, MALL_STRATEGIES, _MALL_ALIAS, "any")
    d = sequentialize_mall(_net(args), s, check=args.debug)
    text = to_sexpr(d)
    emit(args, {"strategy": s, "derivation": text, "rules": d.size()}, derivation=text, render_text=lambda: to_text(d))


def cmd_mall_deseq(args: argparse.Namespace) -> None:
    from .mall import desequentialize_mall, from_sexpr

    net = desequentialize_mall(from_sexpr(_derivation_source(args.file)))
    emit(args, net.to_json())


# ---------------------------------------------------------------------------
# oracle and generation


def cmd_oracle_verify(args: argparse.Namespace) -> None:
    from . import oracle

    data = read_json(args.file)
    if not isinstance(data, dict):
        raise InputError("expected a JSON object")
    kind = args.kind
    if kind == "auto":
        kind = "mall" if "linkings" in data else ("mll" if any("kind" in v for v in data.get("vertices", []) if isinstance(v, dict)) else "graph")
    if kind == "graph":
        from .yeo import find_cuspfree_cycle, splitting_vertices

        g = graph_from_json(data)
        brute = oracle.brute_splitting(g)
        engine = splitting_vertices(g)
        cyc = oracle.brute_cuspfree_cycles(g)
        report = {
            "kind": kind,
            "splitting_oracle": sorted(brute),
            "splitting_engine": sorted(engine),
            "cuspfree_cycles_oracle": len(cyc),
            "cuspfree_cycle_engine": find_cuspfree_cycle(g),
        }
        agree = brute == engine and bool(cyc) == (report["cuspfree_cycle_engine"] is not None)
    elif kind == "mll":
        from .mll import dr_check, ps_from_json

        ps = ps_from_json(data)
        b = oracle.brute_switchings(ps)
        r = dr_check(ps)
        report = {"kind": kind, "oracle": b, "engine": {"correct": r.correct, "degree": r.degree}}
        agree = b.correct == r.correct and b.degree == r.degree
    else:
        from .mall import check_criterion, net_from_json

        net = net_from_json(data)
        b = oracle.brute_mall_check(net)
        r = check_criterion(net)
        report = {"kind": kind, "oracle": {"P1": b.P1, "P2": b.P2, "P3": b.P3}, "engine": {"P1": r.P1, "P2": r.P2, "P3": r.P3}}
        agree = (b.P1, b.P2, b.P3) == (r.P1, r.P2, r.P3)
    report["agree"] = agree
    if not agree:
        raise Failed(report)
    emit(args, report)


def cmd_gen(args: argparse.Namespace) -> None:
    from .oracle import GeneratorConfig, generate

    fields: dict[str, Any] = {"seed": args.seed if args.seed is not None else 0}
    if args.max_vertices is not None:
        fields["vertices"] = args.max_vertices
    for key in ("edges", "colors", "rules", "withs"):
        val = getattr(args, key)
        if val is not None:
            fields[key] = val
    cfg = GeneratorConfig(**fields)
    fx = generate(cfg, args.kind)
    if args.format == "sexpr" and isinstance(fx.data, str):
        print(fx.data)
        return
    emit(args, {"manifest": fx.manifest, "data": fx.data})


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--strategy", choices=sorted(set(MLL_STRATEGIES) | set(MALL_STRATEGIES)))
    common.add_argument("--format", choices=("json", "text", "sexpr"), default=None)
    common.add_argument("--seed", type=int)
    common.add_argument("--max-vertices", type=int, dest="max_vertices")

    p = argparse.ArgumentParser(prog="proofweave", description="Splitting vertices in locally colored graphs and proof nets.")
    sub = p.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("graph", help="locally colored graphs").add_subparsers(dest="sub", required=True)
    x = g.add_parser("check", parents=[common], help="look for a cusp-free cycle")
    x.add_argument("file")
    x.set_defaults(func=cmd_graph_check)
    x = g.add_parser("split", parents=[common], help="find a splitting vertex")
    x.add_argument("file")
    x.set_defaults(func=cmd_graph_split)
    x = g.add_parser("corollary", parents=[common], help="classical splitting theorems")
    x.add_argument("name", choices=COROLLARIES)
    x.add_argument("file")
    x.add_argument("--aux", help="JSON with matching / phi / S / H")
    x.set_defaults(func=cmd_graph_corollary)

    m = sub.add_parser("mll", help="multiplicative proof structures").add_subparsers(dest="sub", required=True)
    for name, fn, hlp in (
        ("check", cmd_mll_check, "correctness criterion"),
        ("seq", cmd_mll_seq, "sequentialize a proof net"),
        ("deseq", cmd_mll_deseq, "translate a derivation (S-expression)"),
    ):
        x = m.add_parser(name, parents=[common], help=hlp)
        x.add_argument("file")
        x.set_defaults(func=fn, default_format="sexpr" if name == "seq" else "json")

    a = sub.add_parser("mall", help="additive proof nets").add_subparsers(dest="sub", required=True)
    for name, fn, hlp in (
        ("check", cmd_mall_check, "criterion P1-P3"),
        ("seq", cmd_mall_seq, "sequentialize a proof net"),
        ("deseq", cmd_mall_deseq, "translate a derivation (S-expression)"),
    ):
        x = a.add_parser(name, parents=[common], help=hlp)
        x.add_argument("file")
        if name == "check":
            x.add_argument("--connected", action="store_true", help="also check acyclic-and-connected switchings")
        if name == "seq":
            x.add_argument("--debug", action="store_true", help="re-check every split")
        x.set_defaults(func=fn, default_format="sexpr" if name == "seq" else "json")

    x = sub.add_parser("oracle-verify", parents=[common], help="compare the engine with brute force")
    x.add_argument("file")
    x.add_argument("--kind", choices=("auto", "graph", "mll", "mall"), default="auto")
    x.set_defaults(func=cmd_oracle_verify)

    x = sub.add_parser("gen", parents=[common], help="seeded random instance with manifest")
    x.add_argument("kind", choices=("graph", "mll-derivation", "mall-derivation", "matching-instance"))
    for key in ("edges", "colors", "rules", "withs"):
        x.add_argument(f"--{key}", type=int)
    x.set_defaults(func=cmd_gen)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse: usage errors exit 2, --help exits 0
        return int(exc.code or 0)
    if args.format is None:
        args.format = getattr(args, "default_format", "json")
    try:
        args.func(args)
    except Failed as f:
        print(dumps(witness(f.report)))
        return 1
    except PropertyFailure as exc:
        print(dumps({"error": type(exc).__name__, "message": str(exc), "witness": witness(exc.witness)}))
        return 1
    except (InputError, ProofweaveError) as exc:
        print(f"proofweave: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    return 0


def run() -> None:  # console-script entry
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    run()

