"""Run reports emitted by the ``solve`` command."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import Instance, Ratio, SolutionPair


def ratio_dict(ratio: Ratio) -> dict:
    if ratio.is_infinite:
        return {"numerator": 1, "denominator": 0, "decimal": "inf"}
    r = ratio.reduced()
    return {"numerator": r.num, "denominator": r.den, "decimal": ratio.decimal(12)}


def side_dict(indices, inst: Instance) -> dict:
    return {
        "indices": list(indices),
        "positions": [inst.original_positions[i - 1] for i in indices],
        "values": [inst.value(i) for i in indices],
        "sum": inst.sum_of(indices),
    }


@dataclass
class RunReport:
    mode: str
    inst: Instance
    pair: SolutionPair
    epsilon: Optional[Fraction] = None
    p: Optional[int] = None
    p_star: Optional[int] = None
    elapsed_ms: Optional[float] = None
    table_cells: Optional[int] = None

    def to_dict(self) -> dict:
        # field order is part of the output format
        return {
            "mode": self.mode,
            "n": self.inst.n,
            "epsilon": None if self.epsilon is None else str(self.epsilon),
            "p": self.p,
            "p_star": self.p_star,
            "ratio": ratio_dict(self.pair.ratio),
            "s1": side_dict(self.pair.s1, self.inst),
            "s2": side_dict(self.pair.s2, self.inst),
            "elapsed_ms": None if self.elapsed_ms is None else round(self.elapsed_ms, 3),
            "table_cells": self.table_cells,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_text(self) -> str:
        d = self.to_dict()
        r = d["ratio"]
        lines = [
            f"mode       {d['mode']}" + (f" (eps={d['epsilon']})" if d["epsilon"] else ""),
            f"n          {d['n']}",
            f"ratio      {r['numerator']}/{r['denominator']} ~ {r['decimal']}",
        ]
        for name in ("s1", "s2"):
            side = d[name]
            lines.append(f"{name:<10} sum={side['sum']} indices={side['indices']} values={side['values']}")
        if d["p"] is not None:
            lines.append(f"p          {d['p']}")
        if d["p_star"] is not None:
            lines.append(f"p_star     {d['p_star']}")
        if d["table_cells"] is not None:
            lines.append(f"cells      {d['table_cells']}")
        if d["elapsed_ms"] is not None:
            lines.append(f"elapsed    {d['elapsed_ms']} ms")
        return "\n".join(lines)
