"""Exhaustive ground-truth solvers.

Every index is assigned to s1, s2 or neither, for all 3**n assignments.
The enumeration is vectorised over blocks of assignments with numpy but
stays a plain enumeration: no pruning, no meet-in-the-middle.

Ties on the ratio are broken by the lexicographically smallest
``(sorted s1, sorted s2)``.
"""

from __future__ import annotations

import functools
from typing import Callable, Dict, Hashable, Optional

import numpy as np

from .core import Instance, SolutionPair, check_p, make_pair

MAX_ORACLE_N = 16
_LOW_BLOCK = 10
# above this total, cross-products may not fit in int64
_INT64_SAFE_TOTAL = 2**31


class OracleLimitError(ValueError):
    pass


@functools.lru_cache(maxsize=None)
def _digits(width: int) -> np.ndarray:
    """All base-3 assignments of ``width`` positions, digit k is position k."""
    count = 3**width
    codes = np.arange(count, dtype=np.int64)
    out = np.empty((count, width), dtype=np.int8)
    for k in range(width):
        out[:, k] = codes % 3
        codes //= 3
    out.setflags(write=False)
    return out


def _block_stats(digits: np.ndarray, values: np.ndarray, offset: int):
    in1 = digits == 1
    in2 = digits == 2
    sum1 = in1.astype(np.int64) @ values
    sum2 = in2.astype(np.int64) @ values
    pos = np.arange(1, digits.shape[1] + 1, dtype=np.int64) + offset
    max1 = np.where(in1, pos, 0).max(axis=1, initial=0)
    max2 = np.where(in2, pos, 0).max(axis=1, initial=0)
    return sum1, sum2, max1, max2


def _padded_sorted(member: np.ndarray) -> np.ndarray:
    # sorted 1-based indices per row, left-justified, padded with 0
    n = member.shape[1]
    big = n + 1
    idx = np.where(member, np.arange(1, n + 1), big)
    idx.sort(axis=1)
    idx[idx == big] = 0
    return idx


def _chunk_best(hi: np.ndarray, lo: np.ndarray, wide: bool) -> np.ndarray:
    """Positions of all rows attaining the exact minimum of ``hi/lo``."""
    f = hi / lo
    # sums are exact in float64, so every exact minimiser lies in this band
    near = np.flatnonzero(f <= f.min() * (1 + 1e-9))
    h, l = hi[near], lo[near]
    if wide:
        h, l = h.astype(object), l.astype(object)
    best = 0
    while True:
        smaller = h * l[best] < h[best] * l
        if not smaller.any():
            break
        best = int(np.flatnonzero(smaller)[0])
    return near[np.flatnonzero(h * l[best] == h[best] * l)]


def _search(
    inst: Instance, predicates: Dict[Hashable, Callable[[np.ndarray, np.ndarray], np.ndarray]]
) -> Dict[Hashable, Optional[SolutionPair]]:
    n = inst.n
    if n > MAX_ORACLE_N:
        raise OracleLimitError(f"brute force supports n <= {MAX_ORACLE_N}, got {n}")
    values = np.asarray(inst.values, dtype=np.int64)
    wide = sum(inst.values) > _INT64_SAFE_TOTAL

    low_w = min(n, _LOW_BLOCK)
    low_digits = _digits(low_w)
    high_digits = _digits(n - low_w)
    lsum1, lsum2, lmax1, lmax2 = _block_stats(low_digits, values[:low_w], 0)
    hsum1, hsum2, hmax1, hmax2 = _block_stats(high_digits, values[low_w:], low_w)

    found: Dict[Hashable, list] = {key: [] for key in predicates}
    for h in range(len(high_digits)):
        sum1 = lsum1 + hsum1[h]
        sum2 = lsum2 + hsum2[h]
        max1 = np.where(hmax1[h] > 0, hmax1[h], lmax1)
        max2 = np.where(hmax2[h] > 0, hmax2[h], lmax2)
        for key, pred in predicates.items():
            rows = np.flatnonzero(pred(max1, max2))
            if rows.size == 0:
                continue
            a, b = sum1[rows], sum2[rows]
            hi, lo = np.maximum(a, b), np.minimum(a, b)
            zero = lo == 0
            if zero.all():
                # every pair here has an infinite ratio
                hi, lo = np.ones_like(hi), np.zeros_like(lo)
                ties = np.arange(rows.size)
            else:
                rows, hi, lo = rows[~zero], hi[~zero], lo[~zero]
                ties = _chunk_best(hi, lo, wide)
            full = np.concatenate(
                [low_digits[rows[ties]], np.broadcast_to(high_digits[h], (ties.size, n - low_w))],
                axis=1,
            )
            key1 = _padded_sorted(full == 1)
            key2 = _padded_sorted(full == 2)
            keys = np.concatenate([key1, key2], axis=1)
            pick = np.lexsort(keys.T[::-1])[0]
            s1 = tuple(int(i) for i in key1[pick] if i)
            s2 = tuple(int(i) for i in key2[pick] if i)
            found[key].append(make_pair(s1, s2, inst))

    result: Dict[Hashable, Optional[SolutionPair]] = {}
    for key, pairs in found.items():
        result[key] = min(pairs, key=_order_key) if pairs else None
    return result


def _order_key(pair: SolutionPair):
    return (pair.ratio, pair.s1, pair.s2)


def brute_force_ssr(inst: Instance) -> SolutionPair:
    """Optimal pair over all disjoint nonempty index sets."""
    if inst.n < 2:
        raise ValueError("need n >= 2")
    return _search(inst, {None: lambda m1, m2: (m1 > 0) & (m2 > 0)})[None]


def _semi_predicate(p: int):
    return lambda m1, m2: (m1 == p) & (m2 > p)


def brute_force_semi(inst: Instance, p: int) -> SolutionPair:
    """Optimal pair subject to ``max s1 == p < max s2``."""
    check_p(inst, p)
    return _search(inst, {p: _semi_predicate(p)})[p]


def brute_force_semi_all(inst: Instance) -> Dict[int, SolutionPair]:
    """``brute_force_semi`` for every valid ``p`` in a single enumeration."""
    return _search(inst, {p: _semi_predicate(p) for p in range(1, inst.n)})
