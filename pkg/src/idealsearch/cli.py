"""Command-line surface tying the modules together.

Every subcommand prints canonical JSON (or CSV for sweeps) on stdout and
exits nonzero when a checked invariant fails.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds
from .errors import IdealSearchError, InvariantViolation
from .exact import min_queries_recursive, optimal_decision_tree
from .generate import gen_chain, gen_complete_tree, gen_random_pointed
from .harness import rows_to_csv, sweep_trees, verify_small_exhaustive, worst_case_strategy
from .oracle import caching_wrapper, fixed_ideal_oracle
from .poset import Ideal, Poset
from .strategy import run


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _load_poset(path: str) -> Poset:
    with open(path, "r", encoding="utf-8") as fh:
        return Poset.from_json_obj(json.load(fh))


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_gen(args) -> int:
    if args.family == "chain":
        p = gen_chain(args.n)
    elif args.family == "tree":
        p = gen_complete_tree(args.l, args.n)
    else:
        p = gen_random_pointed(args.l, args.n, args.seed)
    _write_text(args.out, p.to_json_str())
    return 0


def cmd_stats(args) -> int:
    p = _load_poset(args.poset)
    _write_text(
        None,
        _dump(
            {
                "nodes": len(p),
                "covers": len(p.covers),
                "height": p.height,
                "degree": p.degree,
                "pointed": p.is_pointed(),
                "ideals": len(p) + 1,
            }
        ),
    )
    return 0


def cmd_bound(args) -> int:
    _write_text(None, _dump(bounds.bound_report(args.k, args.l, args.n)))
    return 0


def cmd_solve_exact(args) -> int:
    p = _load_poset(args.poset)
    q = min_queries_recursive(p, args.k, node_cap=args.node_cap)
    _write_text(None, _dump({"q": q, "nodes": len(p), "k": args.k}))
    return 0


def cmd_decision_tree(args) -> int:
    p = _load_poset(args.poset)
    _write_text(None, _dump(optimal_decision_tree(p, args.k, node_cap=args.node_cap)))
    return 0


def cmd_simulate(args) -> int:
    p = _load_poset(args.poset)
    if args.ideal == "empty":
        ideal = Ideal.empty()
    else:
        ideal = Ideal.principal(int(args.ideal))
    oracle = fixed_ideal_oracle(p, ideal)
    if args.derive:
        oracle = caching_wrapper(oracle, p, derive=True)
    got, transcript = run(p, args.k, oracle)
    _write_text(None, transcript.to_json_str())
    if got != ideal:
        print(f"identified {got.to_json_obj()}, expected {ideal.to_json_obj()}", file=sys.stderr)
        return 2
    return 0


def cmd_worst_case(args) -> int:
    p = _load_poset(args.poset)
    worst, witness = worst_case_strategy(p, args.k)
    _write_text(
        None,
        _dump(
            {
                "worst_case": worst,
                "witness": witness.to_json_obj(),
                "nodes": len(p),
                "k": args.k,
            }
        ),
    )
    return 0


def cmd_sweep(args) -> int:
    rows = sweep_trees(args.l, args.k, args.n_max)
    _write_text(args.out, rows_to_csv(rows))
    return 0


def cmd_verify(args) -> int:
    report = verify_small_exhaustive(
        node_cap=args.node_cap, k_max=args.k_max, seeds=args.seeds
    )
    _write_text(
        None,
        _dump(
            {
                "instances": report.instances,
                "runs": report.runs,
                "violations": report.violations,
            }
        ),
    )
    return 0 if report.ok else 2


def cmd_identities(args) -> int:
    grid = args.grid_max
    failures = []
    checks = 0
    for k in range(2, min(25, grid) + 1):
        for m in range(1, grid + 1):
            checks += 1
            if not bounds.ceil_floor_complement(m, k):
                failures.append(f"ceil_floor_complement({m},{k})")
            checks += 1
            if not bounds.ceil_fraction_remainder(m, k):
                failures.append(f"ceil_fraction_remainder({m},{k})")
            for i in range(0, k - 1):
                checks += 1
                if not bounds.nested_ceil_collapse(m, k, i):
                    failures.append(f"nested_ceil_collapse({m},{k},{i})")
            for degree in range(1, 9):
                if m > k:
                    checks += 1
                    if not bounds.query_bound_step_inequality(degree, m, k):
                        failures.append(f"query_bound_step_inequality({degree},{m},{k})")
    _write_text(None, _dump({"checks": checks, "failures": failures}))
    return 0 if not failures else 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="idealsearch",
        description="Hidden-ideal search on finite pointed posets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a poset JSON file")
    p.add_argument("--family", choices=["chain", "tree", "random"], required=True)
    p.add_argument("--l", type=int, default=2, help="degree cap (tree/random)")
    p.add_argument("--n", type=int, required=True, help="height (chain: length)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("stats", help="order statistics of a poset file")
    p.add_argument("poset")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("bound", help="bound report for (k, degree, height)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("solve-exact", help="optimal query count (small posets)")
    p.add_argument("poset")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--node-cap", type=int, default=22)
    p.set_defaults(func=cmd_solve_exact)

    p = sub.add_parser("decision-tree", help="an optimal strategy as nested JSON")
    p.add_argument("poset")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--node-cap", type=int, default=22)
    p.set_defaults(func=cmd_decision_tree)

    p = sub.add_parser("simulate", help="run the strategy against a fixed ideal")
    p.add_argument("poset")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--ideal", required=True, help="'empty' or a generator node id")
    p.add_argument("--derive", action="store_true", help="derive answers from order structure")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("worst-case", help="strategy worst case over all ideals")
    p.add_argument("poset")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_worst_case)

    p = sub.add_parser("sweep", help="complete-tree sweep as CSV")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="exhaustive small-instance verification")
    p.add_argument("--node-cap", type=int, default=64)
    p.add_argument("--k-max", type=int, default=4)
    p.add_argument("--seeds", type=int, default=200)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("identities", help="integer ceiling/floor identity grids")
    p.add_argument("--grid-max", type=int, default=100)
    p.set_defaults(func=cmd_identities)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 2
    except IdealSearchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
