"""Command-line front end: ``analyze``, ``check``, ``gen`` and ``scan``.

Exit codes: 0 consistent, 1 theorem counterexample, 2 usage or parse error,
3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from fractions import Fraction

from .budget import DEFAULT_BUDGET, BudgetExceeded
from .connectivity import binding_number, edge_connectivity, vertex_connectivity
from .factor import kaneko_check
from .graph import Graph, GraphError, isolated_count, omega, read_graph, write_graph
from .sun import sun_count
from .theorems import (
    BelowThresholdWarning,
    TheoremParams,
    certificate_dict,
    check_theorem,
    exhaustive_graphs,
    fmt,
    min_independent_max_degree,
    random_graphs,
    remark1_family,
    remark2_family,
    theorem_scan,
)

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _load(path: str) -> Graph:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return read_graph(text)
    except GraphError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _decimal(q: Fraction) -> str:
    return f"{float(q):.6f}"


def analysis_report(g: Graph, budget: int) -> dict:
    """All reported invariants of ``g`` in one JSON-ready dict."""
    report: dict = {
        "n": g.n,
        "edges": g.size,
        "omega": omega(g),
        "isolated": isolated_count(g),
        "sun": sun_count(g),
        "kappa": vertex_connectivity(g) if g.n else None,
        "lambda": edge_connectivity(g) if g.n else None,
    }
    if g.n:
        bind = binding_number(g, budget)
        report["bind"] = fmt(bind.value)
        report["bind_witness"] = list(bind.witness)
    else:
        report["bind"] = "undefined"
        report["bind_witness"] = None
    cert = kaneko_check(g, budget)
    report["has_p3_factor"] = cert.has_factor
    report["certificate"] = certificate_dict(cert)
    return report


def cmd_analyze(args) -> int:
    g = _load(args.file)
    rep = analysis_report(g, args.budget)
    if args.json:
        print(_dump(rep))
        return EXIT_OK
    print(f"order n            {rep['n']}")
    print(f"edges |E|          {rep['edges']}")
    print(f"components omega   {rep['omega']}")
    print(f"isolated i(G)      {rep['isolated']}")
    print(f"sun components     {rep['sun']}")
    print(f"kappa              {rep['kappa']}")
    print(f"lambda             {rep['lambda']}")
    if rep["bind"] == "undefined":
        print("bind               undefined")
    else:
        print(f"bind               {rep['bind']} (~{_decimal(Fraction(rep['bind']))}), X = {rep['bind_witness']}")
    print(f"P>=3-factor        {'yes' if rep['has_p3_factor'] else 'no'}")
    cert = rep["certificate"]
    if cert["type"] == "factor":
        print("factor paths       " + " | ".join("-".join(map(str, p)) for p in cert["paths"]))
    else:
        print(f"violation          X = {cert['X']}, sun(G-X) = {cert['sun_count']} > 2|X| = {2 * len(cert['X'])}")
    return EXIT_OK


def _params(args) -> TheoremParams:
    return TheoremParams(r=args.r, m=args.m, k=args.k)


def cmd_check(args) -> int:
    params = _params(args)
    try:
        params.validate(args.theorem)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    g = _load(args.file)
    rep = check_theorem(args.theorem, g, params, args.budget)
    code = EXIT_COUNTEREXAMPLE if rep.status == "counterexample" else EXIT_OK
    if args.json:
        print(_dump(rep.to_dict()))
        return code
    print(f"theorem {rep.theorem} with {', '.join(f'{k}={v}' for k, v in rep.params.items())}")
    for h in rep.hypotheses:
        mark = "ok  " if h.satisfied else "FAIL"
        extra = f"  witness {list(h.witness)}" if h.witness is not None else ""
        print(f"  [{mark}] {h.name}: {h.observed} (need {h.required}){extra}")
    c = rep.conclusion
    if c is None:
        print("  conclusion: not applicable (no deletion of that size)")
    else:
        label = f"(P>=3,{c.parameter})-factor {c.kind}"
        print(f"  conclusion: {label}: {'holds' if c.holds else 'fails'}")
        if not c.holds:
            print(f"    deletion {list(c.deletion)}; certificate {certificate_dict(c.certificate)}")
    print(f"status: {rep.status}")
    return code


def cmd_gen(args) -> int:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", BelowThresholdWarning)
        try:
            if args.family == "remark1":
                if args.r is None or args.m is None or args.t is None:
                    raise UsageError("remark1 needs --r, --m and --t")
                g = remark1_family(args.r, args.m, args.t)
                thresholds = {"n/3": fmt(Fraction(g.n, 3)), "(n-1)/3": fmt(Fraction(g.n - 1, 3))}
                params = {"r": args.r, "m": args.m, "t": args.t}
            else:
                if args.r is None or args.k is None or args.t is None:
                    raise UsageError("remark2 needs --r, --k and --t")
                g = remark2_family(args.r, args.k, args.t)
                k = args.k
                thresholds = {
                    "(n+2k)/3": fmt(Fraction(g.n + 2 * k, 3)),
                    "(n+2k-1)/3": fmt(Fraction(g.n + 2 * k - 1, 3)),
                }
                params = {"r": args.r, "k": args.k, "t": args.t}
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    info = {
        "family": args.family,
        "params": params,
        "n": g.n,
        "edges": g.size,
        "kappa": vertex_connectivity(g),
        "thresholds": thresholds,
        "min_independent_max_degree": min_independent_max_degree(g, 2 * args.r + 1),
    }
    text = write_graph(g, comment=f"{args.family} {' '.join(f'{k}={v}' for k, v in params.items())}")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        out = sys.stdout
    else:
        sys.stdout.write(text)
        out = sys.stderr
    if args.json:
        print(_dump(info), file=out)
    else:
        print(f"n = {info['n']}, |E| = {info['edges']}, kappa = {info['kappa']}", file=out)
        for name, val in thresholds.items():
            print(f"threshold {name} = {val}", file=out)
        print(f"min over independent {2 * args.r + 1}-sets of max degree = {info['min_independent_max_degree']}", file=out)
    return EXIT_OK


def _n_range(text: str) -> tuple[int, int]:
    for sep in ("-", ":", ","):
        if sep in text:
            lo, hi = text.split(sep, 1)
            return int(lo), int(hi)
    return int(text), int(text)


def cmd_scan(args) -> int:
    params = _params(args)
    try:
        params.validate(args.theorem)
        lo, hi = _n_range(args.n_range)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.source == "exhaustive":
        if lo != hi:
            raise UsageError("exhaustive source takes a single order, e.g. --n-range 6")
        try:
            graphs = exhaustive_graphs(lo, connected=args.connected)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    elif args.samples == 0:
        graphs = iter(())
    else:
        try:
            graphs = random_graphs(lo, hi, args.samples, args.seed, connected=args.connected)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    result = theorem_scan(args.theorem, params, graphs, args.budget)
    summary = result.summary()
    summary["source"] = {
        "kind": args.source,
        "n_range": [lo, hi],
        "samples": args.samples,
        "seed": args.seed,
        "connected": args.connected,
    }
    if args.json:
        print(_dump(summary))
    else:
        print(
            f"theorem {result.theorem} {result.params}: examined {result.examined}, "
            f"hypotheses satisfied {result.satisfied}, skipped {result.skipped}, "
            f"counterexamples {len(result.counterexamples)}"
        )
    return EXIT_OK if result.ok else EXIT_COUNTEREXAMPLE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_BUDGET,
        help=f"max order for subset enumeration (default {DEFAULT_BUDGET})",
    )
    theorem_args = argparse.ArgumentParser(add_help=False)
    theorem_args.add_argument("--theorem", type=int, choices=(2, 3, 4, 5), required=True)
    theorem_args.add_argument("--r", type=int)
    theorem_args.add_argument("--m", type=int)
    theorem_args.add_argument("--k", type=int)

    parser = argparse.ArgumentParser(prog="pathfactors", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="invariants and P>=3-factor certificate")
    p.add_argument("file", help="edge-list file, or - for stdin")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("check", parents=[common, theorem_args], help="check one theorem on a graph")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", parents=[common], help="write a sharpness-family graph")
    p.add_argument("--family", choices=("remark1", "remark2"), required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("scan", parents=[common, theorem_args], help="soundness scan over many graphs")
    p.add_argument("--n-range", default="8-10", help="order range lo-hi (default 8-10)")
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--source", choices=("random", "exhaustive"), default="random")
    p.add_argument("--connected", action="store_true", help="only connected graphs")
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
