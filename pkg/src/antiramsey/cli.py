"""Command line front end.

Exit codes: 0 success, 1 usage or input error, 2 budget exhausted,
3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Optional

import numpy as np

from .constructions import (
    ConstructionUndefined,
    build_phi_r,
    build_qclass_coloring,
    build_turan_extremal,
    random_surjective_coloring,
)
from .core import EdgeColoring, SubHypergraph, parse_profile
from .matching import SearchBudget, has_k_matching, max_matching
from .oracles import (
    DESK_GRID,
    FAILED,
    ar_exact,
    ar_formula,
    ar_theorems,
    ex_exact,
    reports_to_csv,
    verify_grid,
)
from .rainbow import STRATEGIES, find_rainbow_k, max_rainbow_matching

EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_FAILED = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _dump(obj, out: Optional[str]) -> None:
    text = json.dumps(obj, indent=2, sort_keys=False) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _budget(args) -> SearchBudget:
    if args.budget_nodes is not None and args.budget_nodes < 1:
        raise UsageError("--budget-nodes must be positive")
    if args.budget_ms is not None and args.budget_ms <= 0:
        raise UsageError("--budget-ms must be positive")
    return SearchBudget(
        node_cap=args.budget_nodes or 10_000_000,
        time_cap=args.budget_ms,
        seed=args.seed,
    )


def _profile_and_k(args, need_k: bool = True):
    text = args.profile_opt or args.profile
    if text is None:
        raise UsageError("a profile is required (e.g. 2x2x3)")
    try:
        profile = parse_profile(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    k = args.k_opt if args.k_opt is not None else args.k
    if need_k and k is None:
        raise UsageError("k is required")
    return profile, k


def cmd_construct(args) -> int:
    profile, k = _profile_and_k(args, need_k=args.kind != "qclass")
    try:
        if args.kind == "phi":
            obj = build_phi_r(profile, k)
            summary = f"phi {profile} k={k}: q={obj.q}"
        elif args.kind == "turan":
            obj = build_turan_extremal(profile, k)
            summary = f"turan {profile} k={k}: {obj.n_edges} edges"
        else:
            obj = build_qclass_coloring(profile)
            summary = f"qclass {profile}: q={obj.q}"
    except ConstructionUndefined as exc:
        raise UsageError(str(exc)) from None
    if args.out:
        _dump(obj.to_json(), args.out)
        print(summary)
    else:
        print(summary, file=sys.stderr)
        _dump(obj.to_json(), None)
    return EXIT_OK


def _load_object(path: str):
    try:
        obj = json.loads(Path(path).read_text())
        if "assignments" in obj:
            return EdgeColoring.from_json(obj)
        if "members" in obj:
            return SubHypergraph.from_json(obj)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"malformed input {path}: {exc}") from None
    raise UsageError(f"malformed input {path}: expected a subhypergraph or a coloring")


def cmd_solve(args) -> int:
    obj = _load_object(args.input)
    budget = _budget(args)
    k = args.k_opt
    if args.kind == "rainbow" and not isinstance(obj, EdgeColoring):
        raise UsageError("rainbow search needs a coloring")
    if k is not None and k < 1:
        raise UsageError("k must be at least 1")
    if args.kind == "matching":
        sub = obj.domain if isinstance(obj, EdgeColoring) else obj
        if k is None:
            res = max_matching(sub, budget)
            verdict = "optimal" if res.optimal else "indeterminate"
            out = {"verdict": verdict, "size": len(res.matching), "witness": res.matching.to_json(), "nodes": res.nodes}
        else:
            res = has_k_matching(sub, k, budget)
            verdict = res.status
            out = {"verdict": verdict, "k": k, "witness": res.witness.to_json() if res.witness else None, "nodes": res.nodes}
    else:
        if k is None:
            res = max_rainbow_matching(obj, budget)
            verdict = "optimal" if res.optimal else "indeterminate"
            out = {"verdict": verdict, "size": len(res.matching), "witness": res.matching.to_json(), "nodes": res.nodes}
        else:
            res = find_rainbow_k(obj, k, args.strategy, budget)
            verdict = res.status
            out = {"verdict": verdict, "k": k, "strategy": args.strategy,
                   "witness": res.witness.to_json() if res.witness else None, "nodes": res.nodes}
    _dump(out, args.out)
    return EXIT_BUDGET if verdict == "indeterminate" else EXIT_OK


def _load_grid(path: Optional[str]):
    if path is None:
        return [(parse_profile("x".join(map(str, p))), k) for p, k in DESK_GRID]
    try:
        cells = json.loads(Path(path).read_text())
        if not isinstance(cells, list):
            raise ValueError("grid must be a list")
        out = []
        for cell in cells:
            k = cell["k"]
            if not isinstance(k, int) or k < 1:
                raise ValueError(f"bad k {k!r}")
            out.append((parse_profile(cell["profile"]), k))
        return out
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"malformed grid file {path}: {exc}") from None


def cmd_verify(args) -> int:
    cells = _load_grid(args.grid)
    budget = _budget(args)
    reports = verify_grid(cells, budget=budget, workers=args.workers)
    payload = [r.to_json() for r in reports]
    csv_text = reports_to_csv(reports)
    if args.out:
        base = Path(args.out)
        base.with_suffix(".json").write_text(json.dumps(payload, indent=2) + "\n")
        base.with_suffix(".csv").write_text(csv_text)
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write(csv_text)
    failed = [r for r in reports if r.status == FAILED]
    for rep in failed:
        claims = ", ".join(c for c, s in sorted(rep.claims.items()) if s == FAILED)
        where = Path(args.out).with_suffix(".json") if args.out else "stdout"
        print(f"FAILED {rep.profile} k={rep.k}: {claims} (counterexample in {where})", file=sys.stderr)
    return EXIT_FAILED if failed else EXIT_OK


def _fuzz_trial(job):
    profile, k, q, seed, index, strategy, budget = job
    rng = np.random.default_rng([seed, index])
    coloring = random_surjective_coloring(profile, q, rng)
    res = find_rainbow_k(coloring, k, strategy, budget)
    return {
        "trial": index,
        "seed": [seed, index],
        "status": res.status,
        "witness": res.witness.to_json() if res.witness else None,
        "nodes": res.nodes,
    }


def run_fuzz(profile, k, q, trials, seed=0, strategy="generic", budget=None, workers=1) -> dict:
    """Random surjective q-colorings, each checked by the complete rainbow finder.

    Trial ``i`` draws from the generator seeded with ``[seed, i]``, so results
    do not depend on how trials are spread over workers.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if not 1 <= q <= profile.n_edges:
        raise ValueError(f"colors must lie in 1..{profile.n_edges}")
    if k < 1:
        raise ValueError("k must be at least 1")
    jobs = [(profile, k, q, seed, i, strategy, budget) for i in range(trials)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_fuzz_trial, jobs))
    else:
        results = [_fuzz_trial(j) for j in jobs]
    claimed = bool(ar_theorems(profile, k)) and q > ar_formula(profile, k)
    found = sum(r["status"] == "found" for r in results)
    absent = [r for r in results if r["status"] == "absent"]
    undecided = [r for r in results if r["status"] == "indeterminate"]
    return {
        "profile": str(profile),
        "k": k,
        "colors": q,
        "trials": trials,
        "seed": seed,
        "asserted": claimed,
        "ar_formula": ar_formula(profile, k) if ar_theorems(profile, k) else None,
        "found": found,
        "absent": len(absent),
        "indeterminate": len(undecided),
        "failures": [r["seed"] for r in absent] if claimed else [],
        "undecided": [r["seed"] for r in undecided],
    }


def cmd_fuzz(args) -> int:
    profile, k = _profile_and_k(args)
    if args.colors is None:
        raise UsageError("--colors is required")
    try:
        summary = run_fuzz(profile, k, args.colors, args.trials, args.seed, args.strategy,
                           _budget(args), args.workers)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _dump(summary, args.out)
    print(f"{summary['found']}/{summary['trials']} trials contain a rainbow M_{k}", file=sys.stderr)
    if summary["failures"]:
        return EXIT_FAILED
    if summary["undecided"]:
        return EXIT_BUDGET
    return EXIT_OK


def cmd_oracle(args) -> int:
    profile, k = _profile_and_k(args)
    budget = SearchBudget(node_cap=args.budget_nodes) if args.budget_nodes else None
    res = ex_exact(profile, k, budget) if args.kind == "ex" else ar_exact(profile, k, budget)
    out = {
        "profile": str(profile),
        "k": k,
        "quantity": args.kind,
        "value": res.value,
        "bracket": [res.lower, res.upper],
        "method": res.method,
        "maximizers": res.raw_count,
        "labels": sorted(lab.hex() for lab in res.labels) if res.labels is not None else None,
    }
    _dump(out, args.out)
    return EXIT_OK if res.exact else EXIT_BUDGET


def _common(p: argparse.ArgumentParser, positional: bool = True) -> None:
    if positional:
        p.add_argument("profile", nargs="?", help="part sizes, e.g. 5x5x5")
        p.add_argument("k", nargs="?", type=int)
    p.add_argument("--profile", dest="profile_opt")
    p.add_argument("--k", dest="k_opt", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget-nodes", type=int)
    p.add_argument("--budget-ms", type=float)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--strategy", choices=STRATEGIES, default="generic")
    p.add_argument("--out")
    p.add_argument("--format", choices=("json", "csv"), default="csv")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="antiramsey", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("construct", help="build phi_r, the Turán extremal hypergraph or the Q-class coloring")
    p.add_argument("kind", choices=("phi", "turan", "qclass"))
    _common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("solve", help="matching or rainbow matching search on a JSON object")
    p.add_argument("kind", choices=("matching", "rainbow"))
    p.add_argument("input")
    _common(p, positional=False)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check every claim on a grid of cells")
    p.add_argument("--grid", help="JSON list of {profile, k}; default: the desk grid")
    _common(p, positional=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fuzz", help="random colorings above the anti-Ramsey number")
    _common(p)
    p.add_argument("--colors", type=int)
    p.add_argument("--trials", type=int, default=100)
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("oracle", help="exact ex or ar by exhaustive search")
    p.add_argument("kind", choices=("ex", "ar"))
    _common(p)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"antiramsey: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
