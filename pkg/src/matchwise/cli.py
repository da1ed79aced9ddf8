"""Command line interface: ``matchwise <command> ...``.

Exit codes: 0 success, 1 verification failures, 2 parse or input error,
3 a cap was hit, 4 a search ran out of budget without a verdict.
"""

from __future__ import annotations

import argparse
import shlex
import sys
import time
from fractions import Fraction

from . import bounds as bd
from .arrowing import METHODS, Budget, arrows
from .constructions import bundle_stats
from .errors import CapError, GraphError
from .expr import ParseError, parse, parse_graph_expr
from .graph import Graph, graph6_encode, isolate_free_core
from .report import Report
from .solver import SolverCaps, exact_generic_size_ramsey, exact_matching_size_ramsey
from .verify import SuiteConfig, run_suite

EXIT_FAIL, EXIT_PARSE, EXIT_CAPS, EXIT_UNDECIDED = 1, 2, 3, 4


def _edges_text(edges) -> str:
    return " ".join(f"{u}-{v}" for u, v in sorted(edges))


def _graph_inputs(rep: Report, name: str, text: str, G: Graph) -> None:
    rep.inputs[name] = text
    rep.inputs[f"{name}.graph6"] = graph6_encode(G)


def cmd_arrows(args, rep: Report) -> int:
    F = parse_graph_expr(args.host)
    G = parse_graph_expr(args.target)
    _graph_inputs(rep, "host", args.host, F)
    _graph_inputs(rep, "target", args.target, G)
    rep.inputs["t"] = str(args.t)
    v = arrows(F, args.t, G, args.method, Budget(args.budget))
    rep.add("method", v.method, "requested " + args.method)
    rep.add("work", v.work, "search-nodes")
    if v.arrows is None:
        rep.add("arrows", "undecided", v.method)
        return EXIT_UNDECIDED
    rep.add("arrows", v.arrows, v.method)
    if v.certificate is not None:
        c = v.certificate
        rep.add("certificate.red", _edges_text(c.red), "bad-colouring")
        rep.add("certificate.blue", _edges_text(e for e in F.edges if e not in c.red), "bad-colouring")
    return 0


def cmd_solve(args, rep: Report) -> int:
    G = parse_graph_expr(args.target)
    _graph_inputs(rep, "target", args.target, G)
    caps = SolverCaps(max_edges=args.max_edges, host_budget=args.budget, jobs=args.jobs)
    if args.red is not None:
        R = parse_graph_expr(args.red)
        _graph_inputs(rep, "red", args.red, R)
        res = exact_generic_size_ramsey(R, G, caps)
    else:
        if args.t is None:
            raise GraphError("solve needs --t or --red")
        rep.inputs["t"] = str(args.t)
        res = exact_matching_size_ramsey(args.t, G, caps)
        rep.add("lower_bound", bd.matching_lower(res.target, args.t), bd.DEGREE_LOWER)
        rep.add("upper_bound", bd.disjoint_upper(res.target, args.t), bd.DISJOINT_UPPER)
    for m in sorted(res.exhaustion_log):
        rep.add(f"hosts[m={m}]", res.exhaustion_log[m], "canonical-enumeration")
    if res.exact:
        rep.add("value", res.value, bd.EXACT)
        rep.add("witness", graph6_encode(res.witness_host), bd.EXACT)
        return 0
    rep.add("interval.lower", res.lower, bd.EXACT)
    rep.add("interval.upper", "inf" if res.upper is None else res.upper,
            bd.DISJOINT_UPPER if res.upper is not None else "")
    if res.undecided:
        rep.add("undecided_hosts", res.undecided, bd.EXACT)
        return EXIT_UNDECIDED
    return EXIT_CAPS


def cmd_bounds(args, rep: Report) -> int:
    node = parse(args.target)
    G = node.build()
    _graph_inputs(rep, "target", args.target, G)
    core, _ = isolate_free_core(G)
    if node.bundle is not None:
        env = bd.ratio_envelope(node.bundle, args.t_max)
    else:
        env = bd.ratio_envelope(core, args.t_max)
    for r in env.reports:
        rep.add(f"t={r.t}.lower", r.lower, r.lower_src)
        rep.add(f"t={r.t}.upper", r.upper, r.upper_src)
        rep.add(f"t={r.t}.upper_ratio", env.upper_ratio(r.t), r.upper_src)
    rep.add("rinf.lower", env.max_lower, bd.DEGREE_LOWER)
    rep.add("rinf.upper", env.inf_upper, "running-infimum")
    return 0


def cmd_family(args, rep: Report) -> int:
    alpha = Fraction(args.alpha)
    fam = bd.family_for_alpha(alpha, args.n)
    rep.inputs.update({"alpha": str(alpha), "N": str(args.n)})
    rep.add("case", fam.case, "family")
    rep.add("k", fam.k, "family")
    rep.add("s", fam.s, "family")
    rep.add("ell", ",".join(map(str, fam.ell)), "family")
    for name in ("q", "a", "r"):
        if getattr(fam, name) is not None:
            rep.add(name, getattr(fam, name), "family")
    n, m, delta = bundle_stats(fam.bundle)
    rep.add("n", n, "bundle-closed-form")
    rep.add("m", m, "bundle-closed-form")
    rep.add("max_degree", delta, "bundle-closed-form")
    env = bd.ratio_envelope(fam.bundle, args.t_max or args.n)
    rep.add("rinf.lower", env.max_lower, bd.DEGREE_LOWER)
    rep.add("rinf.upper", env.inf_upper, "running-infimum")
    rep.add("rinf.width", env.width, "running-infimum")
    return 0


def cmd_construct(args, out) -> int:
    G = parse_graph_expr(args.expr)
    if args.out == "dot":
        lines = ["graph G {"] + [f"  {v};" for v in range(G.n)]
        lines += [f"  {u} -- {v};" for u, v in G.edges] + ["}"]
        out.write("\n".join(lines) + "\n")
    else:
        out.write(graph6_encode(G) + "\n")
    return 0


def cmd_verify(args, out) -> int:
    cfg = SuiteConfig(seed=args.seed, max_n=args.max_n, max_m=args.max_m, max_t=args.max_t,
                      instances=args.instances, jobs=args.jobs)
    report = run_suite(cfg)
    text = report.to_json(args.timing) + "\n" if args.format == "json" else report.to_text() + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(report.to_json(args.timing) + "\n")
    out.write(text)
    return 0 if report.passed else EXIT_FAIL


def cmd_envelope(args, rep: Report) -> int:
    rep.inputs.update({"c": str(args.c), "K_c": repr(args.kc)})
    if args.cdelta is not None:
        rep.inputs["C_delta"] = repr(args.cdelta)
    delta = args.c - 1
    for M in range(2, args.m_max + 1):
        a = bd.AsymptoticParams(args.c, M, args.kc, args.cdelta)
        rep.add(f"core_growth[M={M}]", bd.core_growth_envelope(a), "core-growth-envelope")
        if args.cdelta is not None and delta >= 2:
            rep.add(f"krss[M={M}]", bd.krss_bound(delta, M, args.cdelta), "bounded-degree-self-ramsey")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="matchwise", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, default_fmt="table"):
        sp.add_argument("--format", choices=("table", "csv", "json"), default=default_fmt)
        sp.add_argument("--timing", action="store_true", help="include wall-clock time in the report")

    sp = sub.add_parser("arrows", help="decide F -> (tK2, G)")
    sp.add_argument("--host", required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--target", required=True)
    sp.add_argument("--method", choices=METHODS, default="auto")
    sp.add_argument("--budget", type=int, default=None, help="search-node limit")
    common(sp)

    sp = sub.add_parser("solve", help="exact r(tK2, G), or r(R, G) with --red")
    sp.add_argument("--t", type=int)
    sp.add_argument("--target", required=True)
    sp.add_argument("--red", default=None)
    sp.add_argument("--max-edges", type=int, default=12)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--budget", type=int, default=None, help="per-host search-node limit")
    common(sp)

    sp = sub.add_parser("bounds", help="per-t bounds and the bracket on the limit ratio")
    sp.add_argument("--target", required=True)
    sp.add_argument("--t-max", type=int, required=True)
    common(sp)

    sp = sub.add_parser("family", help="bundle family for a target limit alpha")
    sp.add_argument("--alpha", required=True, help="rational in [0,1], e.g. 1/2")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--t-max", type=int, default=None, help="default: N")
    common(sp)

    sp = sub.add_parser("construct", help="serialise a graph expression")
    sp.add_argument("--expr", required=True)
    sp.add_argument("--out", choices=("g6", "dot"), default="g6")

    sp = sub.add_parser("verify", help="run the property suite")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--instances", type=int, default=SuiteConfig.instances)
    sp.add_argument("--max-n", type=int, default=SuiteConfig.max_n)
    sp.add_argument("--max-m", type=int, default=SuiteConfig.max_m)
    sp.add_argument("--max-t", type=int, default=SuiteConfig.max_t)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--out", default=None, help="also write the JSON report here")
    common(sp)

    sp = sub.add_parser("envelope", help="core-growth and bounded-degree envelopes as CSV")
    sp.add_argument("--c", type=int, required=True)
    sp.add_argument("--m-max", type=int, required=True)
    sp.add_argument("--kc", type=float, required=True)
    sp.add_argument("--cdelta", type=float, default=None)
    common(sp, "csv")
    return p


_REPORTING = {"arrows": cmd_arrows, "solve": cmd_solve, "bounds": cmd_bounds,
              "family": cmd_family, "envelope": cmd_envelope}


def main(argv=None, out=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.command == "construct":
            return cmd_construct(args, out)
        if args.command == "verify":
            return cmd_verify(args, out)
        rep = Report(shlex.join(argv))
        start = time.perf_counter()
        code = _REPORTING[args.command](args, rep)
        if args.timing:
            rep.timing = time.perf_counter() - start
        out.write(rep.render(args.format))
        return code
    except CapError as exc:
        print(f"matchwise: cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAPS
    except (ParseError, GraphError, ValueError, ZeroDivisionError) as exc:
        print(f"matchwise: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
