"""Bound-check records shared by the sum evaluators and counters.

HARD checks carry explicit constants and must hold literally; MONITORED
checks track the ratio observed/bound against a configurable ceiling
(absorbing unspecified p^{o(1)} factors at desk scale).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

HARD = "HARD"
MONITORED = "MONITORED"

DEFAULT_RATIO_CEILING = 4.0


@dataclass
class BoundCheck:
    label: str
    observed: float
    bound: float
    kind: str  # HARD or MONITORED
    passed: bool
    ratio: float = field(default=float("nan"))
    lower_bound: bool = False  # True when the inequality is observed >= bound
    skipped: bool = False
    note: str = ""

    def __post_init__(self):
        if self.ratio != self.ratio:  # not supplied
            self.ratio = self.observed / self.bound if self.bound else float("inf")

    def to_dict(self) -> dict:
        def _num(v: float):
            return v if math.isfinite(v) else None  # valid JSON for skipped checks

        return {
            "label": self.label,
            "observed": _num(self.observed),
            "bound": _num(self.bound),
            "ratio": _num(self.ratio),
            "kind": self.kind,
            "passed": self.passed,
            "skipped": self.skipped,
            "note": self.note,
        }


def hard_check(label: str, observed: float, bound: float, *, lower_bound: bool = False,
               note: str = "") -> BoundCheck:
    ok = observed >= bound if lower_bound else observed <= bound
    return BoundCheck(label=label, observed=observed, bound=bound, kind=HARD,
                      passed=ok, lower_bound=lower_bound, note=note)


def monitored_check(label: str, observed: float, bound: float,
                    ceiling: float = DEFAULT_RATIO_CEILING, *, note: str = "") -> BoundCheck:
    ratio = observed / bound if bound else float("inf")
    return BoundCheck(label=label, observed=observed, bound=bound, kind=MONITORED,
                      passed=ratio <= ceiling, ratio=ratio, note=note)


def skipped_check(label: str, kind: str, note: str) -> BoundCheck:
    return BoundCheck(label=label, observed=float("nan"), bound=float("nan"),
                      kind=kind, passed=True, ratio=float("nan"),
                      skipped=True, note=note)
