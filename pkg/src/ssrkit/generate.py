"""Seeded random instances.

Uses numpy's ``Generator`` with the PCG64 bit generator. A seed may be an
int or a sequence of ints (fed to ``SeedSequence``), which is how the
harness derives one independent stream per trial.
"""

from __future__ import annotations

from typing import List, Sequence, Union

import numpy as np

from .core import MAX_VALUE

Seed = Union[int, Sequence[int]]


def make_rng(seed: Seed) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def random_values(
    n: int, max_value: int, rng: np.random.Generator, distinct: bool = True
) -> List[int]:
    if n < 1:
        raise ValueError("n must be positive")
    if not 1 <= max_value <= MAX_VALUE:
        raise ValueError(f"max_value must lie in [1, 2**40], got {max_value}")
    if distinct:
        if n > max_value:
            raise ValueError(f"cannot draw {n} distinct values from 1..{max_value}")
        draw = rng.choice(max_value, size=n, replace=False) + 1
    else:
        draw = rng.integers(1, max_value, size=n, endpoint=True)
    return [int(v) for v in draw]


def generate_instance(n: int, max_value: int, seed: Seed, distinct: bool = True) -> List[int]:
    """``n`` values in ``1..max_value`` in generation order (unsorted)."""
    return random_values(n, max_value, make_rng(seed), distinct)


def format_instance(values: Sequence[int]) -> str:
    return " ".join(str(v) for v in values) + "\n"
