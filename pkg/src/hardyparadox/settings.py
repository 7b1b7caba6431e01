"""Measurement settings that realize a scenario on the GHZ state.

Every party measures ``a`` or ``b``, each a rank-1 projector
``amp_h|H> + amp_v e^{i theta}|V>``. The zero conditions on the GHZ state
reduce to a log-linear system in the amplitudes and a linear system in the
two phases.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import qstate
from .errors import NoSymmetricSolutionError, UnsupportedSettingsError
from .qstate import QubitProjector, wrap_phase
from .scenario import ProjectorString, Scenario, Symbol, constraint_strings, success_string

_EQ_AMP = 1 / math.sqrt(2)
_AMP_TOL = 1e-12


@dataclass(frozen=True)
class MeasurementSettings:
    theta_a: float
    theta_b: float
    a_amp_h: float = _EQ_AMP
    a_amp_v: float = _EQ_AMP
    b_amp_h: float = _EQ_AMP
    b_amp_v: float = _EQ_AMP
    m1: int = 0
    m2: int = 0

    def __post_init__(self):
        object.__setattr__(self, "theta_a", wrap_phase(self.theta_a))
        object.__setattr__(self, "theta_b", wrap_phase(self.theta_b))

    @property
    def a(self) -> QubitProjector:
        return QubitProjector(self.a_amp_h, self.a_amp_v, self.theta_a)

    @property
    def b(self) -> QubitProjector:
        return QubitProjector(self.b_amp_h, self.b_amp_v, self.theta_b)

    def is_equatorial(self) -> bool:
        amps = (self.a_amp_h, self.a_amp_v, self.b_amp_h, self.b_amp_v)
        return all(abs(v - _EQ_AMP) <= _AMP_TOL for v in amps)

    def to_dict(self) -> dict:
        return {
            "thetaA": self.theta_a,
            "thetaB": self.theta_b,
            "aAmpH": self.a_amp_h,
            "aAmpV": self.a_amp_v,
            "bAmpH": self.b_amp_h,
            "bAmpV": self.b_amp_v,
            "m1": self.m1,
            "m2": self.m2,
        }


@dataclass(frozen=True)
class WaveplatePair:
    qwp: float
    hwp: float


COMPUTATIONAL_WAVEPLATES = WaveplatePair(0.0, 0.0)


def equatorial_waveplates(theta: float) -> WaveplatePair:
    """QWP at 45 deg and HWP at ``22.5 - theta/4`` (degrees) measure phase ``theta``."""
    return WaveplatePair(45.0, 22.5 - math.degrees(theta) / 4)


def _solve_amplitudes(s: Scenario) -> tuple[float, float, float, float]:
    # with r = log(amp_h / amp_v) per observable:
    #   (n - ka) r_a + ka r_b = 0  and  (n - kb) r_a - kb r_b = 0
    det = -(s.n - s.ka) * s.kb - s.ka * (s.n - s.kb)
    if det == 0:
        raise NoSymmetricSolutionError(f"{s.label()}: amplitude system is singular")
    return _EQ_AMP, _EQ_AMP, _EQ_AMP, _EQ_AMP


def _branch(total_over_pi: float) -> int:
    """Integer m with ``total = (2m + 1) pi``."""
    m = round((total_over_pi - 1) / 2)
    if abs(total_over_pi - (2 * m + 1)) > 1e-9:
        raise ArithmeticError(f"phase sum {total_over_pi} pi is not an odd multiple of pi")
    return m


def solve(s: Scenario) -> MeasurementSettings:
    """Solve the zero conditions for the two equatorial settings.

    ``ka != kb`` uses the branch ``m1 = m2 = 0``. When ``ka == kb == k`` the
    phase system is rank one and consistent only for even ``k``; the
    representative ``theta_a = 0, theta_b = pi/k`` is returned.
    """
    n, ka, kb = s.n, s.ka, s.kb
    if ka == kb and ka % 2 == 1:
        raise NoSymmetricSolutionError(
            f"{s.label()}: |alpha| = |beta| = {ka} is odd; the phase conditions "
            f"(2 m1 + 1) pi = (2 m2 + 1 - {ka}) pi have no integer branch"
        )
    amps = _solve_amplitudes(s)
    # (n - ka) ta + ka tb = (2 m1 + 1) pi ; (n - kb) ta + kb tb = (2 m2 + 1 - kb) pi
    det = n * (kb - ka)
    if det != 0:
        rhs1, rhs2 = Fraction(1), Fraction(1 - kb)
        ta = (rhs1 * kb - ka * rhs2) / det
        tb = ((n - ka) * rhs2 - (n - kb) * rhs1) / det
        theta_a, theta_b = float(ta) * math.pi, float(tb) * math.pi
    else:
        theta_a, theta_b = 0.0, math.pi / ka
    theta_a, theta_b = wrap_phase(theta_a), wrap_phase(theta_b)
    # record the branch matching the wrapped phases
    m1 = _branch(((n - ka) * theta_a + ka * theta_b) / math.pi)
    m2 = _branch(((n - kb) * theta_a + kb * theta_b + kb * math.pi) / math.pi)
    return MeasurementSettings(theta_a, theta_b, *amps, m1=m1, m2=m2)


def residuals(s: Scenario, ms: MeasurementSettings) -> tuple[float, float, float, float]:
    """The four zero-condition residuals (two phase, two amplitude)."""
    n, ka, kb = s.n, s.ka, s.kb
    r1 = (n - ka) * ms.theta_a + ka * ms.theta_b - (2 * ms.m1 + 1) * math.pi
    r2 = (n - kb) * ms.theta_a + kb * ms.theta_b + kb * math.pi - (2 * ms.m2 + 1) * math.pi
    r3 = ms.b_amp_h**ka * ms.a_amp_h ** (n - ka) - ms.b_amp_v**ka * ms.a_amp_v ** (n - ka)
    r4 = ms.b_amp_v**kb * ms.a_amp_h ** (n - kb) - ms.b_amp_h**kb * ms.a_amp_v ** (n - kb)
    return r1, r2, r3, r4


def realize(string: ProjectorString, ms: MeasurementSettings) -> list[QubitProjector]:
    a, b = ms.a, ms.b
    table = {
        Symbol.A: a,
        Symbol.A_BAR: qstate.orthogonal(a),
        Symbol.B: b,
        Symbol.B_BAR: qstate.orthogonal(b),
    }
    return [table[sym] for sym in string]


def waveplates(ms: MeasurementSettings) -> dict[str, WaveplatePair]:
    if not ms.is_equatorial():
        raise UnsupportedSettingsError("wave-plate mapping needs equatorial settings")
    return {"a": equatorial_waveplates(ms.theta_a), "b": equatorial_waveplates(ms.theta_b)}


@dataclass(frozen=True)
class Verification:
    scenario: Scenario
    settings: MeasurementSettings
    constraints: tuple[tuple[ProjectorString, float], ...]
    success: float
    success_closed_form: float
    tolerance: float = field(default=1e-10)

    @property
    def max_constraint(self) -> float:
        return max(p for _, p in self.constraints)

    @property
    def constraints_vanish(self) -> bool:
        return self.max_constraint <= self.tolerance

    @property
    def paradox(self) -> bool:
        """Constraints vanish while the success probability stays positive."""
        return self.constraints_vanish and self.success > self.tolerance

    def table(self) -> dict[ProjectorString, float]:
        out = {st: p for st, p in self.constraints}
        out[success_string(self.scenario)] = self.success
        return out


def verify(s: Scenario, ms: MeasurementSettings) -> Verification:
    psi = qstate.ghz(s.n)
    cons = tuple(
        (st, qstate.joint_probability(psi, realize(st, ms))) for st in constraint_strings(s)
    )
    success = qstate.joint_probability(psi, realize(success_string(s), ms))
    closed = (1 + math.cos(s.n * ms.theta_a)) / 2**s.n
    return Verification(s, ms, cons, success, closed)
