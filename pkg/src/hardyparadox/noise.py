"""White-noise robustness of the inequality.

For ``rho = V |G><G| + (1 - V) 1/2^n`` the inequality value is affine in V,
so two endpoints fix the whole curve and the critical visibility.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from . import qstate
from .errors import NoThresholdError
from .inequality import evaluate, f_coefficient, quantum_value, ProbabilityTable
from .scenario import Scenario, constraint_strings, success_string
from .settings import realize, solve


@dataclass(frozen=True)
class VisibilityCurve:
    scenario: Scenario
    i_at_v1: float
    i_at_v0: Fraction
    v_crit: float

    def value_at(self, visibility: float) -> float:
        return visibility * self.i_at_v1 + (1 - visibility) * float(self.i_at_v0)

    def sweep(self, points: int = 11) -> list[tuple[float, float]]:
        grid = [k / (points - 1) for k in range(points)] if points > 1 else [1.0]
        return [(v, self.value_at(v)) for v in grid]

    def to_dict(self) -> dict:
        return {
            "scenario": self.scenario.label(),
            "iAtV0": float(self.i_at_v0),
            "iAtV1": self.i_at_v1,
            "vCrit": self.v_crit,
        }


def mixed_value(s: Scenario) -> Fraction:
    """Inequality value on the maximally mixed state: every rank-1 string has 1/2^n."""
    return (f_coefficient(s) - s.x * comb(s.n, s.ka) - s.y * comb(s.n, s.kb)) / 2**s.n


def visibility_threshold(s: Scenario) -> VisibilityCurve:
    i0 = mixed_value(s)
    if i0 >= 0:
        raise NoThresholdError(f"{s.label()}: maximally mixed state already gives I = {i0} >= 0")
    i1 = quantum_value(s).value
    if i1 <= 1e-12:
        raise NoThresholdError(
            f"{s.label()}: the pure GHZ state does not violate the inequality (I = {i1:.3g})"
        )
    v_crit = -float(i0) / (i1 - float(i0))
    return VisibilityCurve(s, i1, i0, v_crit)


def noisy_value(s: Scenario, visibility: float) -> float:
    """Inequality value from explicit noisy-state probabilities (no affine shortcut)."""
    ms = solve(s)
    rho = qstate.NoisyGHZ(s.n, visibility)
    strings = [success_string(s)] + constraint_strings(s)
    table = ProbabilityTable.from_values(
        {st: qstate.noisy_joint_probability(rho, realize(st, ms)) for st in strings},
        source="noise",
    )
    return evaluate(s, table).value


def sweep_values(s: Scenario, visibilities: Sequence[float]) -> list[tuple[float, float]]:
    return [(v, noisy_value(s, v)) for v in visibilities]


def critical_visibility_closed_form(s: Scenario) -> float:
    """Same threshold written via the success probability: constraints vanish at V = 1."""
    f = float(f_coefficient(s))
    success = (1 + math.cos(s.n * solve(s).theta_a)) / 2**s.n
    i0 = float(mixed_value(s))
    return -i0 / (f * success - i0)
