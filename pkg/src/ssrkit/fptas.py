"""(1 + eps)-approximation for SSR by scaling and rounding.

For pivot ``p`` every value is divided by ``delta = eps * a_p / (3n)`` and
floored; the exact Semi-Restricted solver runs on the rounded values and
the chosen index sets are re-evaluated on the original ones. ``delta`` is
an exact :class:`~fractions.Fraction` and the floor is integer division.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Tuple, Union

from .core import Instance, SolutionPair, check_p, duplicate_pair, make_pair
from .semirestricted import SSRResult, merge_by_p, run_per_p, sol_ex_with_cells

EpsilonLike = Union[str, int, float, Fraction]


def parse_epsilon(value: EpsilonLike) -> Fraction:
    """Exact rational in (0, 1) from a decimal string such as ``"0.1"``."""
    if isinstance(value, float):
        value = repr(value)
    try:
        eps = Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"invalid epsilon {value!r}") from exc
    if not 0 < eps < 1:
        raise ValueError(f"epsilon must lie in (0, 1), got {value!r}")
    return eps


@dataclass(frozen=True)
class ScaledInstance:
    original: Instance
    p: int
    epsilon: Fraction
    delta: Fraction
    scaled_values: Tuple[int, ...]

    @property
    def instance(self) -> Instance:
        return Instance.from_sorted(self.scaled_values)

    @property
    def scaled_q(self) -> int:
        return sum(self.scaled_values[: self.p])

    @property
    def q_bound(self) -> Fraction:
        n = self.original.n
        return Fraction(3 * n * n) / self.epsilon


def scale_instance(inst: Instance, p: int, epsilon: EpsilonLike) -> ScaledInstance:
    check_p(inst, p)
    eps = parse_epsilon(epsilon)
    n = inst.n
    a_p = inst.value(p)
    delta = eps * a_p / (3 * n)
    # floor(a / delta) with delta = (num * a_p) / (3n * den)
    num = 3 * n * eps.denominator
    den = eps.numerator * a_p
    scaled = tuple(a * num // den for a in inst.values)
    out = ScaledInstance(inst, p, eps, delta, scaled)
    if out.scaled_q > out.q_bound:
        raise AssertionError(f"scaled Q={out.scaled_q} exceeds 3n^2/eps={out.q_bound}")
    return out


def rounding_bounds_hold(scaled: ScaledInstance, indices: Iterable[int]) -> bool:
    """Check ``sum a - n*delta <= delta * sum a' <= sum a`` and ``n*delta <= eps/3 * sum a``."""
    idx = tuple(indices)
    n = scaled.original.n
    true_sum = scaled.original.sum_of(idx)
    rounded = scaled.delta * sum(scaled.scaled_values[i - 1] for i in idx)
    slack = n * scaled.delta
    sandwich = true_sum - slack <= rounded <= true_sum
    small = slack <= scaled.epsilon / 3 * true_sum
    return sandwich and small


@dataclass(frozen=True)
class ApproxResult:
    pair: SolutionPair
    scaled: ScaledInstance
    scaled_pair: SolutionPair
    table_cells: int


def sol_apx_details(
    inst: Instance, p: int, epsilon: EpsilonLike, max_cells: Optional[int] = None
) -> ApproxResult:
    scaled = scale_instance(inst, p, epsilon)
    on_scaled, cells = sol_ex_with_cells(scaled.instance, p, max_cells)
    pair = make_pair(on_scaled.s1, on_scaled.s2, inst)
    return ApproxResult(pair, scaled, on_scaled, cells)


def sol_apx(
    inst: Instance, p: int, epsilon: EpsilonLike, max_cells: Optional[int] = None
) -> SolutionPair:
    """Semi-Restricted pair within a factor (1 + eps) of optimal, on original values."""
    return sol_apx_details(inst, p, epsilon, max_cells).pair


def _apx_job(args):
    inst, p, eps, max_cells = args
    res = sol_apx_details(inst, p, eps, max_cells)
    return p, res.pair, res.table_cells


def fptas_ssr_details(
    inst: Instance, epsilon: EpsilonLike, max_cells: Optional[int] = None, jobs: int = 1
) -> SSRResult:
    eps = parse_epsilon(epsilon)
    if inst.n < 2:
        raise ValueError("need n >= 2")
    dup = duplicate_pair(inst)
    if dup is not None:
        return SSRResult(dup, None, 0)
    return merge_by_p(run_per_p(_apx_job, inst, (eps, max_cells), jobs))


def fptas_ssr(
    inst: Instance, epsilon: EpsilonLike, max_cells: Optional[int] = None, jobs: int = 1
) -> SolutionPair:
    """Best of the per-pivot approximations; ratio at most (1 + eps) * OPT."""
    return fptas_ssr_details(inst, epsilon, max_cells, jobs).pair
