"""Exact and approximate solvers for the Subset-Sums Ratio problem."""

from .core import (
    EMPTY_PAIR,
    INFINITY,
    Instance,
    InstanceError,
    Ratio,
    SolutionPair,
    compare_ratios,
    max_ratio,
    normalize_instance,
    ratio_of,
)
from .fptas import fptas_ssr, parse_epsilon, scale_instance, sol_apx
from .oracle import brute_force_semi, brute_force_ssr
from .semirestricted import exact_ssr, sol1, sol2, sol_ex

__all__ = [
    "EMPTY_PAIR",
    "INFINITY",
    "Instance",
    "InstanceError",
    "Ratio",
    "SolutionPair",
    "brute_force_semi",
    "brute_force_ssr",
    "compare_ratios",
    "exact_ssr",
    "fptas_ssr",
    "max_ratio",
    "normalize_instance",
    "parse_epsilon",
    "ratio_of",
    "scale_instance",
    "sol1",
    "sol2",
    "sol_apx",
    "sol_ex",
]
