"""Instance files: whitespace-separated positive decimal integers."""

from __future__ import annotations

import re
from typing import List, Tuple

from .core import MAX_VALUE, Instance, InstanceError, normalize_instance

_TOKEN = re.compile(r"\S+")
_INTEGER = re.compile(r"[+-]?[0-9]+")


def tokenize(text: str) -> List[Tuple[int, int, int]]:
    """``(value, line, column)`` per token, 1-based positions."""
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        for match in _TOKEN.finditer(line):
            tok, col = match.group(), match.start() + 1
            where = f"line {lineno}, column {col}"
            if not _INTEGER.fullmatch(tok):
                raise InstanceError(f"{where}: not an integer: {tok!r}")
            value = int(tok)
            if value <= 0:
                raise InstanceError(f"{where}: non-positive entry {value}")
            if value > MAX_VALUE:
                raise InstanceError(f"{where}: entry {value} exceeds the value bound 2**40")
            out.append((value, lineno, col))
    return out


def parse_values(text: str) -> List[int]:
    tokens = tokenize(text)
    if not tokens:
        raise InstanceError("empty input")
    return [v for v, _, _ in tokens]


def parse_instance(text: str) -> Instance:
    return normalize_instance(parse_values(text))
