"""The generalized Hardy inequality and its evaluation on probability tables.

    I = F * p(a...a) - x * sum_alpha p(b_alpha a_rest) - y * sum_beta p(b-bar_beta a_rest) <= 0

with ``F = min_m [x C(m, ka) + y C(n - m, kb)]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Mapping, Optional

from .errors import IncompleteTableError
from .scenario import (
    ProjectorString,
    Scenario,
    Weight,
    alpha_strings,
    beta_strings,
    success_string,
)
from .settings import solve, verify


def f_value(n: int, ka: int, kb: int, x: Weight = 1, y: Weight = 1) -> Fraction:
    """Minimum of ``x C(m, ka) + y C(n - m, kb)`` over ``0 <= m <= n`` (exact)."""
    x, y = Fraction(x), Fraction(y)
    return min(x * comb(m, ka) + y * comb(n - m, kb) for m in range(n + 1))


def f_coefficient(s: Scenario) -> Fraction:
    return f_value(s.n, s.ka, s.kb, s.x, s.y)


@dataclass(frozen=True)
class ProbabilityEstimate:
    value: float
    sigma: float = 0.0
    source: str = "theory"
    counts: Optional[tuple[int, int]] = None

    @property
    def zero_count(self) -> bool:
        return self.counts is not None and self.counts[0] == 0

    def to_dict(self) -> dict:
        out = {"value": self.value, "sigma": self.sigma, "source": self.source}
        if self.counts is not None:
            out["k"], out["N"] = self.counts
            out["zeroCount"] = self.zero_count
        return out


@dataclass(frozen=True)
class ProbabilityTable:
    entries: Mapping[ProjectorString, ProbabilityEstimate] = field(default_factory=dict)

    @classmethod
    def from_values(cls, values: Mapping, source: str = "theory") -> ProbabilityTable:
        """Build from ``{string: value}`` or ``{string: (value, sigma)}``; keys may be text."""
        entries = {}
        for key, val in values.items():
            st = key if isinstance(key, ProjectorString) else ProjectorString.parse(key)
            if isinstance(val, ProbabilityEstimate):
                entries[st] = val
            elif isinstance(val, tuple):
                entries[st] = ProbabilityEstimate(float(val[0]), float(val[1]), source)
            else:
                entries[st] = ProbabilityEstimate(float(val), 0.0, source)
        return cls(entries)

    def __getitem__(self, st: ProjectorString) -> ProbabilityEstimate:
        return self.entries[st]

    def __contains__(self, st) -> bool:
        return st in self.entries

    def missing(self, s: Scenario) -> list[ProjectorString]:
        needed = [success_string(s)] + alpha_strings(s) + beta_strings(s)
        return [st for st in needed if st not in self.entries]


@dataclass(frozen=True)
class IValue:
    value: float
    sigma: float
    f: Fraction
    scenario: Scenario

    @property
    def violated(self) -> bool:
        return self.value > 0

    @property
    def n_sigma(self) -> float:
        if self.sigma == 0:
            return math.inf if self.value > 0 else (-math.inf if self.value < 0 else 0.0)
        return self.value / self.sigma

    def label(self) -> str:
        s = self.scenario
        return f"I[{s.n};{s.ka},{s.kb};{s.x},{s.y}]"

    def to_dict(self) -> dict:
        s = self.scenario
        return {
            "value": self.value,
            "sigma": self.sigma,
            "f": str(self.f),
            "n": s.n,
            "ka": s.ka,
            "kb": s.kb,
            "x": str(s.x),
            "y": str(s.y),
        }

    def __str__(self):
        return f"{self.label()} = {format_uncertain(self.value, self.sigma)}"


def format_uncertain(value: float, sigma: float, decimals: int = 3) -> str:
    """``0.055(22)`` style: deviation in units of the last printed digit."""
    digits = round(sigma * 10**decimals)
    return f"{value:.{decimals}f}({digits})"


def evaluate(s: Scenario, table: ProbabilityTable) -> IValue:
    gaps = table.missing(s)
    if gaps:
        raise IncompleteTableError(gaps)
    f = f_coefficient(s)
    x, y = float(s.x), float(s.y)
    succ = table[success_string(s)]
    alphas = [table[st] for st in alpha_strings(s)]
    betas = [table[st] for st in beta_strings(s)]

    value = (
        float(f) * succ.value
        - x * math.fsum(e.value for e in alphas)
        - y * math.fsum(e.value for e in betas)
    )
    var = (
        float(f) ** 2 * succ.sigma**2
        + x**2 * math.fsum(e.sigma**2 for e in alphas)
        + y**2 * math.fsum(e.sigma**2 for e in betas)
    )
    return IValue(value, math.sqrt(var), f, s)


def theory_table(s: Scenario) -> ProbabilityTable:
    report = verify(s, solve(s))
    return ProbabilityTable.from_values(report.table(), source="theory")


def quantum_value(s: Scenario) -> IValue:
    return evaluate(s, theory_table(s))
