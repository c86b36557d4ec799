"""Command-line interface.

Subcommands: `invariants <file|literal>`, `catalog [--run]`,
`verify <suite> [--seed N] [--trials N]`, and
`generate <kind> --seed N --crossings C`.  `--json` switches output to
JSON; the exit code is 0 iff every requested assertion passed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bracket as _bracket
from . import skein as _skein
from .catalog import catalog, run_catalog
from .diagram import (DiagramError, random_almost_positive_diagram,
                      random_positive_diagram)
from .report import invariants
from .verify import SUITES


def _build_parser():
    ap = argparse.ArgumentParser(
        prog="linkpoly",
        description="Exact link-diagram invariants and theorem suites")
    ap.add_argument("--json", action="store_true", help="JSON output")
    ap.add_argument("--state-cap", type=int,
                    default=_bracket.DEFAULT_STATE_CAP,
                    help="max crossings for the bracket state sum")
    ap.add_argument("--skein-budget", type=int,
                    default=_skein.DEFAULT_SKEIN_BUDGET,
                    help="max skein resolution nodes")
    sub = ap.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariants", help="full report for one input")
    p_inv.add_argument("input", help="braid 's: l1 l2 ...', PD text, or a "
                       "file containing either")

    p_cat = sub.add_parser("catalog", help="paper example catalog")
    p_cat.add_argument("--run", action="store_true",
                       help="recompute and check the expected values")

    p_ver = sub.add_parser("verify", help="run a verification suite")
    p_ver.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--trials", type=int, default=None)

    p_gen = sub.add_parser("generate", help="emit a random diagram")
    p_gen.add_argument("kind", choices=["positive", "almost-positive"])
    p_gen.add_argument("--seed", type=int, required=True)
    p_gen.add_argument("--crossings", type=int, required=True)
    p_gen.add_argument("--parallel", dest="parallel", action="store_true",
                       default=True,
                       help="almost-positive: force a parallel positive "
                       "crossing (default)")
    p_gen.add_argument("--no-parallel", dest="parallel", action="store_false")
    return ap


def _cmd_invariants(args):
    text = args.input
    if os.path.exists(text):
        with open(text) as fh:
            text = fh.read()
    rep = invariants(text, state_cap=args.state_cap,
                     skein_budget=args.skein_budget)
    print(rep.to_json() if args.json else rep.text())
    return 0 if not rep.failures else 1


def _cmd_catalog(args):
    if not args.run:
        entries = catalog()
        if args.json:
            print(json.dumps([{
                "label": e.label, "kind": e.kind, "source": e.source,
                "expected": [[x.quantity, str(x.value), x.citation]
                             for x in e.expected],
            } for e in entries], indent=2))
        else:
            for e in entries:
                print(f"{e.label}: {e.kind} {e.source}")
                for x in e.expected:
                    print(f"    {x.quantity} = {x.value}   [{x.citation}]")
        return 0
    results = run_catalog(budget=args.skein_budget)
    bad = 0
    payload = []
    for r in results:
        payload.append({
            "label": r.label, "ok": r.ok, "chirality": r.chirality,
            "elapsed": round(r.elapsed, 3),
            "checks": [[q, str(want), str(got), ok]
                       for q, want, got, ok in r.checks],
        })
        if not args.json:
            mark = "ok" if r.ok else "FAIL"
            print(f"[{mark:>4}] {r.label} ({r.chirality}, "
                  f"{r.elapsed:.2f}s)")
            for q, want, got, ok in r.checks:
                flag = "" if ok else "   <-- MISMATCH"
                print(f"        {q}: expected {want}, got {got}{flag}")
        bad += 0 if r.ok else 1
    if args.json:
        print(json.dumps(payload, indent=2))
    return 0 if bad == 0 else 1


def _cmd_verify(args):
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    bad = 0
    payload = []
    for name in names:
        fn = SUITES[name]
        kwargs = {}
        if name != "capo":
            kwargs["seed"] = args.seed
            if args.trials is not None:
                kwargs["trials"] = args.trials
        res = fn(**kwargs)
        payload.append({
            "suite": res.suite, "trials": res.trials, "passes": res.passes,
            "failures": res.failures, "findings": res.findings,
            "elapsed": round(res.elapsed, 3),
        })
        if not args.json:
            print(res.text())
        bad += 0 if res.ok else 1
    if args.json:
        print(json.dumps(payload, indent=2))
    return 0 if bad == 0 else 1


def _cmd_generate(args):
    if args.kind == "positive":
        D = random_positive_diagram(args.seed, args.crossings)
    else:
        D = random_almost_positive_diagram(args.seed, args.crossings,
                                           force_parallel_crossing=args.parallel)
    if args.json:
        print(json.dumps(D.to_json()))
    else:
        print(f"crossings {D.n}  writhe {D.writhe()}  "
              f"components {D.components()}")
        print(json.dumps(D.to_json()))
    return 0


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "invariants":
            return _cmd_invariants(args)
        if args.command == "catalog":
            return _cmd_catalog(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "generate":
            return _cmd_generate(args)
    except DiagramError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
