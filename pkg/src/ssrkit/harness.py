"""Verification against the oracle, and the scaling benchmark."""

from __future__ import annotations

import math
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .core import normalize_instance
from .fptas import fptas_ssr, fptas_ssr_details
from .generate import generate_instance, make_rng, random_values
from .oracle import MAX_ORACLE_N, brute_force_ssr
from .report import ratio_dict
from .semirestricted import exact_ssr


def _quotient_dict(q: Fraction) -> dict:
    return {
        "numerator": q.numerator,
        "denominator": q.denominator,
        "decimal": f"{float(q):.12g}",
    }


def verify_trial(args) -> dict:
    trial, seed, n_min, n_max, max_value, epsilons = args
    rng = make_rng((seed, trial))
    n = int(rng.integers(n_min, n_max, endpoint=True))
    values = random_values(n, max_value, rng)
    inst = normalize_instance(values)
    opt = brute_force_ssr(inst).ratio.to_fraction()
    exact = exact_ssr(inst).ratio.to_fraction()
    approx = {eps: fptas_ssr(inst, eps).ratio.to_fraction() for eps in epsilons}
    return {"trial": trial, "values": values, "opt": opt, "exact": exact, "approx": approx}


def run_verify(
    trials: int,
    n_min: int,
    n_max: int,
    max_value: int,
    epsilons: Sequence[Fraction],
    seed: int,
    jobs: int = 1,
) -> dict:
    if n_max > MAX_ORACLE_N:
        raise ValueError(f"n-max must be at most {MAX_ORACLE_N}")
    if not 2 <= n_min <= n_max:
        raise ValueError("need 2 <= n-min <= n-max")
    if max_value < n_max:
        raise ValueError("max-value must be at least n-max for distinct draws")
    tasks = [(t, seed, n_min, n_max, max_value, tuple(epsilons)) for t in range(trials)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(verify_trial, tasks, chunksize=8))
    else:
        results = [verify_trial(t) for t in tasks]

    exact_fail, exact_worst = 0, Fraction(1)
    apx_fail: Dict[Fraction, int] = {e: 0 for e in epsilons}
    apx_worst: Dict[Fraction, Fraction] = {e: Fraction(1) for e in epsilons}
    failed: List[dict] = []
    for res in sorted(results, key=lambda r: r["trial"]):
        bad = []
        q = res["exact"] / res["opt"]
        exact_worst = max(exact_worst, q)
        if res["exact"] != res["opt"]:
            exact_fail += 1
            bad.append("exact")
        for eps in epsilons:
            q = res["approx"][eps] / res["opt"]
            apx_worst[eps] = max(apx_worst[eps], q)
            if q > 1 + eps:
                apx_fail[eps] += 1
                bad.append(f"fptas eps={eps}")
        if bad:
            failed.append({"trial": res["trial"], "values": res["values"], "checks": bad})

    return {
        "trials": trials,
        "failures": len(failed),
        "exact": {"failures": exact_fail, "worst_quotient": _quotient_dict(exact_worst)},
        "fptas": [
            {
                "epsilon": str(eps),
                "failures": apx_fail[eps],
                "worst_quotient": _quotient_dict(apx_worst[eps]),
                "bound": _quotient_dict(1 + eps),
            }
            for eps in epsilons
        ],
        "failed_trials": failed,
    }


def cell_upper_bound(n: int, eps: Fraction) -> int:
    """``n (n - 1) (3 ceil(3 n^2 / eps) + 1)``: rows times columns over all pivots."""
    return n * (n - 1) * (3 * math.ceil(Fraction(3 * n * n) / eps) + 1)


def run_bench(
    n_list: Sequence[int],
    eps_list: Sequence[Fraction],
    seed: int,
    repeats: int = 1,
    max_cells: Optional[int] = None,
    max_value: int = 10**6,
) -> List[dict]:
    rows = []
    for n in n_list:
        values = generate_instance(n, max_value, (seed, n))
        inst = normalize_instance(values)
        for eps in eps_list:
            times, cells, ratio = [], None, None
            for _ in range(repeats):
                start = time.perf_counter()
                res = fptas_ssr_details(inst, eps, max_cells=max_cells)
                times.append((time.perf_counter() - start) * 1000)
                cells, ratio = res.table_cells, res.pair.ratio
            model = Fraction(n**4) / eps
            rows.append(
                {
                    "n": n,
                    "epsilon": str(eps),
                    "median_ms": round(statistics.median(times), 3),
                    "cells": cells,
                    "predicted_cells": math.ceil(9 * model),
                    "cell_bound": cell_upper_bound(n, eps),
                    "cells_per_model": round(float(cells / model), 6),
                    "ratio": ratio_dict(ratio),
                }
            )
    return rows
