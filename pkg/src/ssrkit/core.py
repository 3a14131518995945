"""Instances, exact ratios and the ratio / max-ratio functions.

Indices are 1-based positions in the *sorted* instance throughout the
package. All ratio arithmetic is integer cross-multiplication; floats only
ever appear in display strings.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

MAX_VALUE = 2**40
MAX_N = 10_000

IndexSet = Tuple[int, ...]


class InstanceError(ValueError):
    """Raised when raw input does not form a valid instance."""


@functools.total_ordering
@dataclass(frozen=True)
class Ratio:
    """Unreduced nonnegative rational ``num/den``; ``den == 0`` encodes +inf."""

    num: int
    den: int

    def __post_init__(self):
        if self.num < 0 or self.den < 0:
            raise ValueError("ratio terms must be nonnegative")
        if self.den == 0 and self.num != 1:
            # single canonical representation of infinity
            object.__setattr__(self, "num", 1)

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    def __eq__(self, other):
        if not isinstance(other, Ratio):
            return NotImplemented
        return compare_ratios(self, other) == 0

    def __lt__(self, other):
        if not isinstance(other, Ratio):
            return NotImplemented
        return compare_ratios(self, other) < 0

    def __hash__(self):
        if self.is_infinite:
            return hash(("inf",))
        return hash(Fraction(self.num, self.den))

    def to_fraction(self) -> Fraction:
        if self.is_infinite:
            raise OverflowError("infinite ratio has no Fraction value")
        return Fraction(self.num, self.den)

    def reduced(self) -> "Ratio":
        if self.is_infinite:
            return self
        f = self.to_fraction()
        return Ratio(f.numerator, f.denominator)

    def decimal(self, digits: int = 12) -> str:
        """Display-only decimal with ``digits`` significant digits."""
        if self.is_infinite:
            return "inf"
        return _significant(Fraction(self.num, self.den), digits)

    def __str__(self):
        return "inf" if self.is_infinite else f"{self.num}/{self.den}"


INFINITY = Ratio(1, 0)


def _significant(value: Fraction, digits: int) -> str:
    # exact decimal rounding, half-up, without going through float
    if value == 0:
        return "0"
    exp = 0
    while value >= 10**exp:
        exp += 1
    while value < 10 ** (exp - 1):
        exp -= 1
    shift = digits - exp
    scaled = value * Fraction(10) ** shift
    rounded = (scaled.numerator * 2 + scaled.denominator) // (2 * scaled.denominator)
    if rounded >= 10**digits:
        rounded //= 10
        shift -= 1
    text = str(rounded)
    if shift <= 0:
        return text + "0" * (-shift)
    if shift >= len(text):
        text = "0" * (shift - len(text) + 1) + text
    head, tail = text[:-shift], text[-shift:].rstrip("0")
    return head if not tail else f"{head}.{tail}"


def compare_ratios(r1: Ratio, r2: Ratio) -> int:
    """Return -1, 0 or 1 as ``r1`` is less than, equal to or greater than ``r2``."""
    if r1.is_infinite or r2.is_infinite:
        return int(r1.is_infinite) - int(r2.is_infinite)
    lhs = r1.num * r2.den
    rhs = r2.num * r1.den
    return (lhs > rhs) - (lhs < rhs)


def ratio_of(sum1: int, sum2: int) -> Ratio:
    """``sum1/sum2``, or infinity when ``sum2`` is zero."""
    if sum1 < 0 or sum2 < 0:
        raise ValueError("sums must be nonnegative")
    if sum2 == 0:
        return INFINITY
    return Ratio(sum1, sum2)


def max_ratio_of_sums(sum1: int, sum2: int) -> Ratio:
    """Max ratio of two sums; infinite when the smaller one is zero."""
    hi, lo = (sum1, sum2) if sum1 >= sum2 else (sum2, sum1)
    return ratio_of(hi, lo)


@dataclass(frozen=True)
class Instance:
    """Sorted instance values with the map back to input positions.

    ``original_positions[k]`` is the 0-based input position of the value at
    sorted index ``k + 1``. Non-strict order (and zeros) are allowed only for
    instances built with :meth:`from_sorted`, which the rounding step uses.
    """

    values: Tuple[int, ...]
    original_positions: Tuple[int, ...]
    duplicate: Optional[Tuple[int, int]] = None

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def is_strict(self) -> bool:
        return self.duplicate is None

    def value(self, index: int) -> int:
        return self.values[index - 1]

    def sum_of(self, indices: Iterable[int]) -> int:
        total = 0
        for i in indices:
            if not 1 <= i <= self.n:
                raise IndexError(f"index {i} out of range 1..{self.n}")
            total += self.values[i - 1]
        return total

    def prefix_sum(self, p: int) -> int:
        return sum(self.values[:p])

    @classmethod
    def from_sorted(cls, values: Sequence[int]) -> "Instance":
        vals = tuple(int(v) for v in values)
        if any(v < 0 for v in vals):
            raise InstanceError("values must be nonnegative")
        if any(a > b for a, b in zip(vals, vals[1:])):
            raise InstanceError("values must be sorted non-decreasing")
        return cls(vals, tuple(range(len(vals))), _first_duplicate(vals))


def _first_duplicate(values: Sequence[int]) -> Optional[Tuple[int, int]]:
    for k in range(1, len(values)):
        if values[k - 1] == values[k]:
            return (k, k + 1)
    return None


def normalize_instance(raw: Sequence[int]) -> Instance:
    """Validate raw input and sort it, keeping original positions."""
    vals = list(raw)
    if len(vals) < 2:
        raise InstanceError("an instance needs at least 2 entries")
    if len(vals) > MAX_N:
        raise InstanceError(f"at most {MAX_N} entries are supported")
    for pos, v in enumerate(vals):
        if isinstance(v, bool) or not isinstance(v, int):
            raise InstanceError(f"entry {pos} is not an integer: {v!r}")
        if v <= 0:
            raise InstanceError(f"entry {pos} is non-positive: {v}")
        if v > MAX_VALUE:
            raise InstanceError(f"entry {pos} exceeds the value bound 2**40: {v}")
    order = sorted(range(len(vals)), key=lambda k: (vals[k], k))
    values = tuple(vals[k] for k in order)
    return Instance(values, tuple(order), _first_duplicate(values))


@dataclass(frozen=True)
class SolutionPair:
    """Two disjoint sorted-index sets, their sums and their max ratio."""

    s1: IndexSet
    s2: IndexSet
    sum1: int
    sum2: int
    ratio: Ratio = field(compare=False)

    @property
    def is_empty(self) -> bool:
        return not self.s1 and not self.s2

    @property
    def is_feasible(self) -> bool:
        return bool(self.s1) and bool(self.s2)

    def swapped(self) -> "SolutionPair":
        return SolutionPair(self.s2, self.s1, self.sum2, self.sum1, self.ratio)


EMPTY_PAIR = SolutionPair((), (), 0, 0, INFINITY)


def max_ratio(s1: Iterable[int], s2: Iterable[int], inst: Instance) -> Ratio:
    """Max of the two directed ratios; infinite when either set is empty."""
    s1, s2 = tuple(s1), tuple(s2)
    sum1, sum2 = inst.sum_of(s1), inst.sum_of(s2)
    if not s1 or not s2:
        return INFINITY
    return max_ratio_of_sums(sum1, sum2)


def make_pair(s1: Iterable[int], s2: Iterable[int], inst: Instance) -> SolutionPair:
    """Build a :class:`SolutionPair` evaluated against ``inst``."""
    a, b = tuple(sorted(s1)), tuple(sorted(s2))
    if set(a) & set(b):
        raise ValueError("index sets must be disjoint")
    if not a and not b:
        return EMPTY_PAIR
    return SolutionPair(a, b, inst.sum_of(a), inst.sum_of(b), max_ratio(a, b, inst))


def duplicate_pair(inst: Instance) -> Optional[SolutionPair]:
    """The trivial ratio-1 answer for an instance with equal values."""
    if inst.duplicate is None:
        return None
    i, j = inst.duplicate
    return make_pair((i,), (j,), inst)


def check_p(inst: Instance, p: int) -> None:
    if not 1 <= p < inst.n:
        raise ValueError(f"p must satisfy 1 <= p < n={inst.n}, got {p}")


def better(candidate: SolutionPair, incumbent: SolutionPair) -> bool:
    """True when ``candidate`` has strictly smaller max ratio."""
    return compare_ratios(candidate.ratio, incumbent.ratio) < 0
