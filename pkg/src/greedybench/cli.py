"""Command-line front end.

Subcommands: norm, dual, tga, certify, repro, list-scenarios.  Exit codes:
0 on success, 1 when a reproduction expectation fails, 2 on usage errors.
"""

import argparse
import json
import sys

from .certify import ks_lower_bound, SearchGrid, superdemocracy_report, ucc_growth
from .greedy import trace
from .norms import NormSpec
from .oracle import OracleConfig, dw_norm_bruteforce
from .polyhedral import dual_norm
from .rationals import decimal_str, format_rational, is_exact, parse_rational
from .scenarios import SCENARIOS, run_all, run_scenario, write_csv
from .vectors import SparseVector
from .weights import Weight


def _load_json(path):
    with open(path) as fh:
        return json.load(fh)


def _render(value):
    return format_rational(value) if is_exact(value) else decimal_str(value)


def _cmd_norm(args):
    spec = NormSpec.from_json(_load_json(args.spec))
    vec = SparseVector.from_json(_load_json(args.vector))
    if args.oracle:
        if spec.kind != "dw":
            print("the oracle path only audits the combined norm", file=sys.stderr)
            return 2
        value = dw_norm_bruteforce(spec.weight, vec, OracleConfig(e_window=args.oracle_window))
    else:
        value = spec.evaluate(vec, method=args.method)
    print(_render(value))
    return 0


def _cmd_dual(args):
    spec = NormSpec.from_json(_load_json(args.spec))
    if spec.kind != "polyhedral":
        print("dual norms are computed for polyhedral specs only", file=sys.stderr)
        return 2
    vec = SparseVector.from_json(_load_json(args.functional))
    coords = vec.coords(spec.family.dimension)
    print(_render(dual_norm(spec.family, coords)))
    return 0


def _cmd_tga(args):
    spec = NormSpec.from_json(_load_json(args.spec))
    vec = SparseVector.from_json(_load_json(args.vector))
    t = trace(vec, spec)
    if args.json:
        print(json.dumps(t.to_json()))
    else:
        for entry in t.to_json():
            print("m=%-3d residual=%-20s support=%s" % (entry["m"], entry["residual"], entry["support"]))
    return 0


def _cmd_certify(args):
    if args.constant == "ks":
        spec = NormSpec.from_json(_load_json(args.spec))
        if args.family == "default-grid":
            family = SearchGrid()
        else:
            raw = _load_json(args.family)
            family = [
                (SparseVector.from_json(inst["vector"]), tuple(inst["projection_set"]))
                for inst in raw["instances"]
            ]
        cert = ks_lower_bound(spec, family)
    elif args.constant == "superdemocracy":
        spec = NormSpec.from_json(_load_json(args.spec))
        cert = superdemocracy_report(spec, m_max=args.m_max)
    elif args.constant == "ucc":
        w = Weight.from_json(_load_json(args.weight))
        ratios = ucc_growth(w, args.m_max)
        print(json.dumps({"kind": "ucc_growth", "ratios": [format_rational(r) for r in ratios]}))
        return 0
    else:
        print("unknown constant %r" % args.constant, file=sys.stderr)
        return 2
    print(json.dumps(cert.to_json(), indent=2))
    return 0


def _scenario_params(args):
    params = {}
    if args.n is not None:
        params["n"] = args.n
    if args.d is not None:
        params["d"] = args.d
    if args.alpha is not None:
        params["alpha"] = parse_rational(args.alpha)
    if args.count is not None:
        params["count"] = args.count
    if args.grid is not None:
        params["grid"] = args.grid
    if args.m is not None:
        params["m"] = args.m
    if args.tail is not None:
        params["tail"] = parse_rational(args.tail)
    if args.seed is not None:
        params["seed"] = args.seed
    return params


def _cmd_repro(args):
    params = _scenario_params(args)
    if args.name == "all":
        if args.csv:
            print("--csv needs a single named scenario", file=sys.stderr)
            return 2
        reports = run_all(parallel=args.parallel, **params)
    else:
        if args.name not in SCENARIOS:
            print("unknown scenario %r (see list-scenarios)" % args.name, file=sys.stderr)
            return 2
        reports = [run_scenario(args.name, **params)]
    failed = 0
    for rep in reports:
        for check in rep.checks:
            if args.verbose or not check.passed:
                print(check.line())
        status = "PASS" if rep.passed else "FAIL"
        print("scenario %-16s %s  (%d checks)" % (rep.name, status, len(rep.checks)))
        if not rep.passed:
            failed += 1
        if args.csv:
            write_csv(rep, args.csv)
            print("wrote %s" % args.csv)
    return 1 if failed else 0


def _cmd_list_scenarios(args):
    for name, (_, summary) in SCENARIOS.items():
        print("%-18s %s" % (name, summary))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="greedybench",
        description="Exact evaluation of weighted sequence norms, greedy traces, and greedy-type constants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("norm", help="evaluate a norm on a vector")
    p.add_argument("--spec", required=True, help="NormSpec JSON file")
    p.add_argument("--vector", required=True, help="vector JSON file")
    p.add_argument("--method", default="auto", choices=["auto", "enumerate", "signature"])
    p.add_argument("--oracle", action="store_true", help=argparse.SUPPRESS)
    p.add_argument("--oracle-window", type=int, default=12, help=argparse.SUPPRESS)
    p.set_defaults(func=_cmd_norm)

    p = sub.add_parser("dual", help="evaluate the exact dual norm of a functional")
    p.add_argument("--spec", required=True, help="polyhedral NormSpec JSON file")
    p.add_argument("--functional", required=True, help="functional coordinates as vector JSON")
    p.set_defaults(func=_cmd_dual)

    p = sub.add_parser("tga", help="greedy residual curve of a vector")
    p.add_argument("--spec", required=True)
    p.add_argument("--vector", required=True)
    p.add_argument("--json", action="store_true", help="emit the trace as JSON")
    p.set_defaults(func=_cmd_tga)

    p = sub.add_parser("certify", help="compute a constant with a witness certificate")
    p.add_argument("constant", choices=["ks", "superdemocracy", "ucc"])
    p.add_argument("--spec", help="NormSpec JSON file")
    p.add_argument("--family", default="default-grid",
                   help="'default-grid' or a JSON file of explicit (vector, set) instances")
    p.add_argument("--weight", help="weight JSON file (ucc)")
    p.add_argument("--m-max", type=int, default=8)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("repro", help="run a reproduction scenario (or 'all')")
    p.add_argument("name")
    p.add_argument("--csv", help="write plot-ready CSV rows to this path")
    p.add_argument("--verbose", action="store_true", help="print every check, not just failures")
    p.add_argument("--parallel", action="store_true", help="run independent scenarios concurrently")
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--alpha")
    p.add_argument("--count", type=int)
    p.add_argument("--grid", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--tail")
    p.add_argument("--seed", type=int)
    p.set_defaults(func=_cmd_repro)

    p = sub.add_parser("list-scenarios", help="list the built-in scenarios")
    p.set_defaults(func=_cmd_list_scenarios)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.func(args)
    except (OSError, ValueError, KeyError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        code = 2
    return code


if __name__ == "__main__":
    sys.exit(main())
