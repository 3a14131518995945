"""``ssr`` command line: solve, gen, verify, bench.

Exit codes: 0 success, 1 runtime or verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import List, Optional

from .core import InstanceError
from .fptas import parse_epsilon, sol_apx_details, fptas_ssr_details
from .generate import format_instance, generate_instance
from .harness import run_bench, run_verify
from .oracle import MAX_ORACLE_N, brute_force_semi, brute_force_ssr
from .parsing import parse_instance
from .report import RunReport
from .semirestricted import ResourceLimitError, default_max_cells, exact_ssr_details, sol_ex_with_cells

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _bool(text: str) -> bool:
    low = text.lower()
    if low in ("true", "yes", "1"):
        return True
    if low in ("false", "no", "0"):
        return False
    raise argparse.ArgumentTypeError(f"expected true or false, got {text!r}")


def _epsilon(text: str) -> Fraction:
    try:
        return parse_epsilon(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _csv(kind):
    def parse(text: str):
        return [kind(tok) for tok in text.split(",") if tok.strip()]

    return parse


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ssr", description="Subset-Sums Ratio solvers")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="solve one instance")
    solve.add_argument("--input", help="instance file (default: standard input)")
    solve.add_argument("--mode", choices=("fptas", "exact", "brute"), default="fptas")
    solve.add_argument("--epsilon", type=_epsilon, help="required for --mode fptas")
    solve.add_argument("--p", type=int, help="solve Semi-Restricted SSR for this pivot")
    solve.add_argument("--format", choices=("json", "text"), default="json")
    solve.add_argument("--max-cells", type=int, default=None)
    solve.add_argument("--jobs", type=int, default=1, help="worker processes for per-pivot solves")
    solve.add_argument("--no-timing", action="store_true", help="emit elapsed_ms as null")

    gen = sub.add_parser("gen", help="emit a random instance")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--max-value", type=int, required=True)
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--distinct", type=_bool, default=True)
    gen.add_argument("--output", help="write to file instead of standard output")

    verify = sub.add_parser("verify", help="check solvers against brute force")
    verify.add_argument("--trials", type=int, default=200)
    verify.add_argument("--n-min", type=int, default=3)
    verify.add_argument("--n-max", type=int, default=12)
    verify.add_argument("--max-value", type=int, default=1000)
    verify.add_argument("--epsilons", type=_csv(_epsilon), default=[Fraction(1, 2), Fraction(1, 10)])
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--jobs", type=int, default=1)
    verify.add_argument("--format", choices=("json", "text"), default="json")

    bench = sub.add_parser("bench", help="measure FPTAS cost over n and epsilon")
    bench.add_argument("--n-list", type=_csv(int), default=[20, 40, 80])
    bench.add_argument("--epsilon-list", type=_csv(_epsilon), default=[Fraction(2, 5), Fraction(1, 5), Fraction(1, 10)])
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--repeats", type=int, default=1)
    bench.add_argument("--max-value", type=int, default=10**6)
    bench.add_argument("--max-cells", type=int, default=None)
    bench.add_argument("--format", choices=("json", "text"), default="json")
    return parser


def _read_input(path: Optional[str]) -> str:
    if path is None:
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def solve_command(args) -> RunReport:
    if args.mode == "fptas" and args.epsilon is None:
        raise UsageError("--epsilon is required for --mode fptas")
    try:
        inst = parse_instance(_read_input(args.input))
    except InstanceError as exc:
        raise UsageError(str(exc)) from exc
    if args.p is not None and not 1 <= args.p < inst.n:
        raise UsageError(f"--p must satisfy 1 <= p < n={inst.n}")
    if args.mode == "brute" and inst.n > MAX_ORACLE_N:
        raise UsageError(f"brute mode supports n <= {MAX_ORACLE_N}, got n={inst.n}")
    max_cells = args.max_cells if args.max_cells is not None else default_max_cells()
    eps = args.epsilon if args.mode == "fptas" else None

    start = time.perf_counter()
    cells: Optional[int] = None
    p_star = args.p
    if args.p is not None:
        if args.mode == "brute":
            pair = brute_force_semi(inst, args.p)
        elif args.mode == "exact":
            pair, cells = sol_ex_with_cells(inst, args.p, max_cells)
        else:
            res = sol_apx_details(inst, args.p, eps, max_cells)
            pair, cells = res.pair, res.table_cells
    elif args.mode == "brute":
        pair = brute_force_ssr(inst)
        p_star = None
    else:
        if args.mode == "exact":
            res = exact_ssr_details(inst, max_cells, args.jobs)
        else:
            res = fptas_ssr_details(inst, eps, max_cells, args.jobs)
        pair, cells, p_star = res.pair, res.table_cells, res.p_star
    elapsed = (time.perf_counter() - start) * 1000

    return RunReport(
        mode=args.mode,
        inst=inst,
        pair=pair,
        epsilon=eps,
        p=args.p,
        p_star=p_star,
        elapsed_ms=None if args.no_timing else elapsed,
        table_cells=cells,
    )


def gen_command(args) -> str:
    try:
        values = generate_instance(args.n, args.max_value, args.seed, args.distinct)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return format_instance(values)


def _verify_text(rep: dict) -> str:
    lines = [f"trials {rep['trials']}  failures {rep['failures']}"]
    ex = rep["exact"]
    lines.append(f"exact        failures {ex['failures']:>4}  worst quotient {ex['worst_quotient']['decimal']}")
    for col in rep["fptas"]:
        lines.append(
            f"fptas {col['epsilon']:<6} failures {col['failures']:>4}  worst quotient "
            f"{col['worst_quotient']['decimal']}  (bound {col['bound']['decimal']})"
        )
    for bad in rep["failed_trials"]:
        lines.append(f"FAIL trial {bad['trial']}: {', '.join(bad['checks'])} values={bad['values']}")
    return "\n".join(lines)


def _bench_text(rows: List[dict]) -> str:
    head = f"{'n':>5} {'eps':>6} {'median_ms':>12} {'cells':>14} {'9n^4/eps':>14} {'cells/(n^4/eps)':>16}"
    out = [head]
    for r in rows:
        out.append(
            f"{r['n']:>5} {r['epsilon']:>6} {r['median_ms']:>12.3f} {r['cells']:>14} "
            f"{r['predicted_cells']:>14} {r['cells_per_model']:>16.4f}"
        )
    return "\n".join(out)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "solve":
            report = solve_command(args)
            print(report.to_json() if args.format == "json" else report.to_text())
            return EXIT_OK
        if args.command == "gen":
            text = gen_command(args)
            if args.output:
                with open(args.output, "w", encoding="utf-8") as fh:
                    fh.write(text)
            else:
                sys.stdout.write(text)
            return EXIT_OK
        if args.command == "verify":
            try:
                rep = run_verify(
                    args.trials, args.n_min, args.n_max, args.max_value,
                    args.epsilons, args.seed, args.jobs,
                )
            except ValueError as exc:
                raise UsageError(str(exc)) from exc
            print(json.dumps(rep) if args.format == "json" else _verify_text(rep))
            return EXIT_FAIL if rep["failures"] else EXIT_OK
        if args.command == "bench":
            max_cells = args.max_cells if args.max_cells is not None else default_max_cells()
            rows = run_bench(
                args.n_list, args.epsilon_list, args.seed, args.repeats, max_cells, args.max_value
            )
            if args.format == "json":
                for row in rows:
                    print(json.dumps(row))
            else:
                print(_bench_text(rows))
            return EXIT_OK
    except UsageError as exc:
        print(f"ssr {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ResourceLimitError, RuntimeError, ValueError) as exc:
        print(f"ssr {args.command}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
