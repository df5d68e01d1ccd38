"""Command line front end.

verify  run verification suites from a JSON scenario; write reports.
radf    print the radical lattice basis and cross-check a window.
eval    evaluate an element expression in a scenario's algebras.

Exit codes: 0 pass, 1 nonzero residual or mismatch, 2 invalid input.
"""

from __future__ import annotations

import argparse
import sys

from . import report as report_mod
from .matrices import lattice_membership
from .scenario import SUITE_ORDER, ScenarioError, build, load_scenario
from .suites import run_suites
from .syntax import ParseError, evaluate, format_value


def _parser():
    p = argparse.ArgumentParser(
        prog="looptorus",
        description="exact verification for twisted-torus loop algebra modules",
    )
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites from a scenario")
    v.add_argument("scenario", help="path to a scenario JSON file")
    v.add_argument(
        "--suite",
        action="append",
        choices=SUITE_ORDER,
        help="run only this suite (repeatable; default: scenario selection)",
    )
    v.add_argument("--seed", type=int, help="override the scenario seed")
    v.add_argument("--trials", type=int, help="override the trial count")
    v.add_argument("--window", type=int, help="override the degree window bound")
    v.add_argument("--report", metavar="PATH", help="write the JSON report here")
    v.add_argument("--csv", metavar="PATH", help="write a delimited suite summary here")
    v.add_argument("--figures", metavar="DIR", help="render PNG figures into this directory")

    r = sub.add_parser("radf", help="print the rad f basis with a window cross-check")
    r.add_argument("scenario", help="path to a scenario JSON file")
    r.add_argument("--window", type=int, help="override the cross-check window bound")

    e = sub.add_parser("eval", help="evaluate an element expression")
    e.add_argument("expr", help="expression, e.g. 't[1,0]*t[0,1]' or '[t[1,0], ad[0,1]]'")
    e.add_argument("--scenario", required=True, help="path to a scenario JSON file")
    e.add_argument(
        "--act-on",
        metavar="VEC",
        help="apply the result to this module vector, e.g. 'v[(1,0);0,0]'",
    )
    return p


def _load(path):
    scn = load_scenario(path)
    return scn, build(scn)


def cmd_verify(args) -> int:
    try:
        scn, env = _load(args.scenario)
    except ScenarioError as exc:
        print(f"invalid scenario: {exc.pointer or '/'}: {exc.reason}", file=sys.stderr)
        return 2
    names = tuple(args.suite) if args.suite else scn.suites
    names = tuple(dict.fromkeys(names))  # dedupe, keep declared order
    seed = scn.seed if args.seed is None else args.seed
    trials = scn.trials if args.trials is None else args.trials
    window = scn.window if args.window is None else args.window
    if trials < 1 or window < 1:
        print("invalid scenario: /trials: must be >= 1", file=sys.stderr)
        return 2
    results = run_suites(env, names, seed, trials, window, scn.probe_window)
    effective = {
        "seed": seed,
        "trials": trials,
        "window": window,
        "probe_window": scn.probe_window,
        "suites": list(names),
    }
    rep = report_mod.build_report(scn.raw, effective, results)
    for line in report_mod.summary_lines(rep):
        print(line)
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(report_mod.to_json(rep))
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(report_mod.to_csv(rep))
    if args.figures:
        from .figures import render_figures

        for path in render_figures(args.figures, env, rep):
            print(f"figure: {path}")
    return 0 if rep["pass"] else 1


def cmd_radf(args) -> int:
    try:
        scn, env = _load(args.scenario)
    except ScenarioError as exc:
        print(f"invalid scenario: {exc.pointer or '/'}: {exc.reason}", file=sys.stderr)
        return 2
    ctx = env.ctx
    basis = ctx.radf_basis
    print(f"rad f basis columns for n={ctx.n}, N={ctx.N}:")
    for col in basis:
        print("  " + str(list(col)))
    window = scn.window if args.window is None else args.window
    box = [()]
    for _ in range(ctx.n):
        box = [v + (x,) for v in box for x in range(-window, window + 1)]
    mism = [a for a in box if ctx.in_radf(a) != lattice_membership(basis, a)]
    if mism:
        print(f"window [-{window},{window}]^{ctx.n}: MISMATCH at {list(mism[0])}")
        return 1
    count = sum(1 for a in box if ctx.in_radf(a))
    print(f"window [-{window},{window}]^{ctx.n}: basis agrees on all {len(box)} degrees "
          f"({count} central)")
    return 0


def cmd_eval(args) -> int:
    try:
        scn, env = _load(args.scenario)
    except ScenarioError as exc:
        print(f"invalid scenario: {exc.pointer or '/'}: {exc.reason}", file=sys.stderr)
        return 2
    del scn
    try:
        val = evaluate(args.expr, env.ctx, env.alg, env.params, act_on=args.act_on)
    except ParseError as exc:
        print(f"parse error at position {exc.pos}: {exc.reason}", file=sys.stderr)
        return 2
    except (TypeError, ValueError) as exc:
        print(f"evaluation error: {exc}", file=sys.stderr)
        return 2
    print(format_value(val))
    return 0


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    handler = {"verify": cmd_verify, "radf": cmd_radf, "eval": cmd_eval}[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())
