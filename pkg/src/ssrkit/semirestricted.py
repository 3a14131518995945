"""Exact pseudo-polynomial solver for Semi-Restricted SSR.

For a pivot ``p`` the first set must have maximum index ``p`` and the
second set a maximum index above ``p``. Two cases are combined:

* the second set's maximum value is at least ``Q = a_1 + ... + a_p``: the
  answer is ``({1..p}, {smallest such index})`` in closed form;
* otherwise a table indexed by (row ``i``, difference ``d = sum1 - sum2``)
  keeps, per cell, the pair with the largest total ``sum1 + sum2``.

The table is filled one row at a time with numpy. Within a row, a cell
that receives several candidates of equal total keeps the one that would
arrive first in a sequential ascending-``d`` sweep, so the result is the
same as the cell-by-cell procedure (see ``tests/reference_dp.py``).
"""

from __future__ import annotations

import enum
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from .core import (
    EMPTY_PAIR,
    Instance,
    SolutionPair,
    better,
    check_p,
    duplicate_pair,
    make_pair,
)

DEFAULT_MAX_CELLS = 2 * 10**8


class ResourceLimitError(RuntimeError):
    """The DP table would exceed the configured cell budget."""


def default_max_cells() -> int:
    env = os.environ.get("SSR_MAX_CELLS")
    return int(env) if env else DEFAULT_MAX_CELLS


class Back(enum.IntEnum):
    EMPTY = 0
    START = 1
    SKIP = 2
    ADD_S1 = 3
    ADD_S2 = 4
    ADD_S2_FROM_P = 5


@dataclass(frozen=True)
class CaseSplit:
    Q: int
    m: int
    c_min_index: Optional[int]


def case_split(inst: Instance, p: int) -> CaseSplit:
    check_p(inst, p)
    Q = inst.prefix_sum(p)
    m = 0
    for i, v in enumerate(inst.values, start=1):
        if v < Q:
            m = i
    c_min = next((i for i in range(p + 1, inst.n + 1) if inst.value(i) >= Q), None)
    return CaseSplit(Q, m, c_min)


@dataclass(frozen=True)
class DpCell:
    """One table entry. ``pred`` is the (row, d) the entry was built from."""

    q: int
    x: int
    back: Back
    pred: Optional[Tuple[int, int]] = None


def ltst(incumbent: Optional[DpCell], candidate: DpCell) -> DpCell:
    """Keep the larger total sum; ties keep the incumbent."""
    if incumbent is None or candidate.x > incumbent.x:
        return candidate
    return incumbent


def _shift(row: np.ndarray, k: int) -> np.ndarray:
    # out[c] = row[c - k], empty (-1) where the source is outside the row
    out = np.full_like(row, -1)
    w = row.shape[0]
    if k >= w or -k >= w:
        return out
    if k > 0:
        out[k:] = row[:-k]
    elif k < 0:
        out[:k] = row[-k:]
    else:
        out[:] = row
    return out


def _merge(candidates) -> Tuple[np.ndarray, np.ndarray]:
    """Fold (totals, kind) candidates in arrival order; strict improvement wins."""
    best, kind = None, None
    for totals, code in candidates:
        if best is None:
            best = totals.copy()
            kind = np.where(totals >= 0, code, Back.EMPTY).astype(np.int8)
            continue
        upd = totals > best
        best[upd] = totals[upd]
        kind[upd] = code
    return best, kind


class DpTable:
    """Rows ``0..m`` over columns ``d`` in ``[-2Q, Q]``.

    ``totals[i][d + 2Q]`` is the cell's ``sum1 + sum2`` (-1 when empty) and
    ``backs[i][d + 2Q]`` its :class:`Back` code. Sets are recovered with
    :func:`reconstruct`.
    """

    def __init__(self, inst: Instance, p: int, split: CaseSplit):
        self.inst = inst
        self.p = p
        self.Q = split.Q
        self.m = split.m
        self.width = 3 * self.Q + 1
        self.totals: List[np.ndarray] = []
        self.backs: List[np.ndarray] = []

    @property
    def offset(self) -> int:
        return 2 * self.Q

    @property
    def cells(self) -> int:
        return (self.m + 1) * self.width

    def column(self, d: int) -> int:
        if not -2 * self.Q <= d <= self.Q:
            raise IndexError(f"d={d} outside [-2Q, Q] = [{-2 * self.Q}, {self.Q}]")
        return d + self.offset

    def occupied(self, row: int) -> np.ndarray:
        """Occupied ``d`` values of ``row``, ascending."""
        return np.flatnonzero(self.totals[row] >= 0) - self.offset

    def cell(self, row: int, d: int) -> Optional[DpCell]:
        c = self.column(d)
        x = int(self.totals[row][c])
        if x < 0:
            return None
        back = Back(int(self.backs[row][c]))
        s1, s2 = reconstruct(self, row, d)
        pred = _predecessor(self, row, d, back)
        return DpCell(max(s1 + s2), x, back, pred)


def _predecessor(table: DpTable, row: int, d: int, back: Back):
    if back is Back.START:
        return None
    a = table.inst.value(row)
    if back is Back.SKIP:
        return (row - 1, d)
    if back is Back.ADD_S1:
        return (row - 1, d - a)
    if back is Back.ADD_S2:
        return (row - 1, d + a)
    return (table.p, d + a)


def build_table(inst: Instance, p: int, max_cells: Optional[int] = None) -> Optional[DpTable]:
    """Fill the Case-2 table, or return None when Case 2 is void (``m <= p``)."""
    split = case_split(inst, p)
    if split.m <= p:
        return None
    table = DpTable(inst, p, split)
    limit = default_max_cells() if max_cells is None else max_cells
    if limit and table.cells > limit:
        raise ResourceLimitError(
            f"table of {table.cells} cells exceeds the limit of {limit} (set SSR_MAX_CELLS)"
        )
    Q, W = split.Q, table.width
    dtype = np.int32 if 3 * Q < 2**31 - 1 else np.int64
    a_p = inst.value(p)

    row0 = np.full(W, -1, dtype=dtype)
    back0 = np.zeros(W, dtype=np.int8)
    row0[table.column(a_p)] = a_p
    back0[table.column(a_p)] = Back.START
    table.totals.append(row0)
    table.backs.append(back0)

    for i in range(1, split.m + 1):
        prev = table.totals[i - 1]
        a = inst.value(i)
        if i < p:
            plus = _shift(prev, a)
            plus[plus >= 0] += a
            minus = _shift(prev, -a)
            minus[minus >= 0] += a
            if a > 0:
                order = [(plus, Back.ADD_S1), (prev, Back.SKIP), (minus, Back.ADD_S2)]
            else:
                order = [(prev, Back.SKIP), (plus, Back.ADD_S1), (minus, Back.ADD_S2)]
            totals, kind = _merge(order)
        elif i == p:
            totals = prev.copy()
            kind = np.where(prev >= 0, Back.SKIP, Back.EMPTY).astype(np.int8)
        else:
            minus = _shift(prev, -a)
            minus[minus >= 0] += a
            from_p = _shift(table.totals[p], -a)
            from_p[from_p >= 0] += a
            order = [(minus, Back.ADD_S2), (from_p, Back.ADD_S2_FROM_P)]
            if i > p + 1:
                order.insert(0, (prev, Back.SKIP))
            totals, kind = _merge(order)
        table.totals.append(totals)
        table.backs.append(kind)
    return table


def reconstruct(table: DpTable, row: int, d: int) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Follow backpointers from ``(row, d)`` to the start cell."""
    c = table.column(d)
    if table.totals[row][c] < 0:
        raise ValueError(f"cell ({row}, {d}) is empty")
    s1: List[int] = []
    s2: List[int] = []
    i = row
    inst = table.inst
    while True:
        back = table.backs[i][c]
        if back == Back.START:
            s1.append(table.p)
            break
        a = inst.value(i) if i > 0 else 0
        if back == Back.SKIP:
            i -= 1
        elif back == Back.ADD_S1:
            s1.append(i)
            c -= a
            i -= 1
        elif back == Back.ADD_S2:
            s2.append(i)
            c += a
            i -= 1
        elif back == Back.ADD_S2_FROM_P:
            s2.append(i)
            c += a
            i = table.p
        else:
            raise AssertionError(f"broken backpointer chain at row {i}")
    return tuple(sorted(s1)), tuple(sorted(s2))


def sol1(inst: Instance, p: int) -> SolutionPair:
    """Closed-form Case-1 pair, or EMPTY when no index above ``p`` reaches ``Q``."""
    split = case_split(inst, p)
    if split.c_min_index is None:
        return EMPTY_PAIR
    return make_pair(range(1, p + 1), (split.c_min_index,), inst)


def _first_min_ratio(hi: np.ndarray, lo: np.ndarray) -> int:
    """First position of the exact minimum of hi/lo (lo > 0 assumed)."""
    f = hi / lo
    near = np.flatnonzero(f <= f.min() * (1 + 1e-9))
    best = int(near[0])
    for k in near[1:]:
        k = int(k)
        if int(hi[k]) * int(lo[best]) < int(hi[best]) * int(lo[k]):
            best = k
    return best


def sol2_with_table(
    inst: Instance, p: int, max_cells: Optional[int] = None
) -> Tuple[SolutionPair, Optional[DpTable]]:
    table = build_table(inst, p, max_cells)
    if table is None:
        return EMPTY_PAIR, None
    ds = table.occupied(table.m)
    if ds.size == 0:
        return EMPTY_PAIR, table
    x = table.totals[table.m][ds + table.offset].astype(np.int64)
    sum1 = (x + ds) // 2
    sum2 = (x - ds) // 2
    hi, lo = np.maximum(sum1, sum2), np.minimum(sum1, sum2)
    keep = np.flatnonzero(lo > 0)
    if keep.size == 0:
        # only infinite ratios: the first occupied column still carries a feasible pair
        d = int(ds[0])
    else:
        d = int(ds[keep[_first_min_ratio(hi[keep], lo[keep])]])
    s1, s2 = reconstruct(table, table.m, d)
    return make_pair(s1, s2, inst), table


def sol2(inst: Instance, p: int, max_cells: Optional[int] = None) -> SolutionPair:
    """Best Case-2 pair read off the last table row."""
    return sol2_with_table(inst, p, max_cells)[0]


def sol_ex_with_cells(
    inst: Instance, p: int, max_cells: Optional[int] = None
) -> Tuple[SolutionPair, int]:
    first = sol1(inst, p)
    second, table = sol2_with_table(inst, p, max_cells)
    cells = table.cells if table is not None else 0
    if better(second, first):
        return second, cells
    return first, cells


def sol_ex(inst: Instance, p: int, max_cells: Optional[int] = None) -> SolutionPair:
    """Optimal Semi-Restricted pair for pivot ``p``; Case 1 wins ties."""
    return sol_ex_with_cells(inst, p, max_cells)[0]


@dataclass(frozen=True)
class SSRResult:
    pair: SolutionPair
    p_star: Optional[int]
    table_cells: int


def merge_by_p(results) -> SSRResult:
    """Minimum ratio over ``(p, pair, cells)`` triples, smallest ``p`` on ties."""
    best_pair, best_p, total = EMPTY_PAIR, None, 0
    for p, pair, cells in sorted(results, key=lambda r: r[0]):
        total += cells
        if best_p is None or better(pair, best_pair):
            best_pair, best_p = pair, p
    return SSRResult(best_pair, best_p, total)


def _exact_job(args):
    inst, p, max_cells = args
    pair, cells = sol_ex_with_cells(inst, p, max_cells)
    return p, pair, cells


def run_per_p(job, inst: Instance, extra: tuple, jobs: int = 1):
    tasks = [(inst, p) + extra for p in range(1, inst.n)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(job, tasks))
    return [job(t) for t in tasks]


def exact_ssr_details(
    inst: Instance, max_cells: Optional[int] = None, jobs: int = 1
) -> SSRResult:
    if inst.n < 2:
        raise ValueError("need n >= 2")
    dup = duplicate_pair(inst)
    if dup is not None:
        return SSRResult(dup, None, 0)
    return merge_by_p(run_per_p(_exact_job, inst, (max_cells,), jobs))


def exact_ssr(inst: Instance, max_cells: Optional[int] = None, jobs: int = 1) -> SolutionPair:
    """Exact SSR optimum as the best Semi-Restricted answer over all pivots."""
    return exact_ssr_details(inst, max_cells, jobs).pair
