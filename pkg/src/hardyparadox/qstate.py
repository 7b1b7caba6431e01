"""Exact dense state vectors for GHZ states and rank-1 qubit projectors.

Basis convention: H is 0, V is 1, and qubit 1 is the most significant
position of a basis index.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DimensionError, SizeError

MAX_QUBITS = 20
_NORM_TOL = 1e-12


def wrap_phase(phase: float) -> float:
    """Map an angle into (-pi, pi]."""
    wrapped = math.remainder(phase, 2 * math.pi)
    if wrapped <= -math.pi:
        wrapped += 2 * math.pi
    return wrapped


@dataclass(frozen=True)
class StateVector:
    n: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.n < 1:
            raise DimensionError(f"qubit count must be positive, got {self.n}")
        amps = np.asarray(self.amplitudes, dtype=complex)
        if amps.shape != (2**self.n,):
            raise DimensionError(f"expected {2**self.n} amplitudes, got shape {amps.shape}")
        norm = float(np.vdot(amps, amps).real)
        if abs(norm - 1.0) > _NORM_TOL:
            raise ValueError(f"state is not normalized (norm^2 = {norm!r})")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    def overlap(self, other: StateVector) -> complex:
        return complex(np.vdot(self.amplitudes, other.amplitudes))


@dataclass(frozen=True)
class QubitProjector:
    """Rank-1 projector onto ``amp_h|H> + amp_v e^{i phase}|V>``."""

    amp_h: float
    amp_v: float
    phase: float = 0.0

    def __post_init__(self):
        if not (0.0 <= self.amp_h <= 1.0 and 0.0 <= self.amp_v <= 1.0):
            raise ValueError("projector amplitudes must lie in [0, 1]")
        if abs(self.amp_h**2 + self.amp_v**2 - 1.0) > _NORM_TOL:
            raise ValueError("projector amplitudes must satisfy amp_h^2 + amp_v^2 = 1")
        object.__setattr__(self, "phase", wrap_phase(self.phase))

    @classmethod
    def equatorial(cls, phase: float) -> QubitProjector:
        return cls(1 / math.sqrt(2), 1 / math.sqrt(2), phase)

    @classmethod
    def from_vector(cls, h: complex, v: complex) -> QubitProjector:
        """Canonical projector for an arbitrary nonzero vector (global phase removed)."""
        norm = math.hypot(abs(h), abs(v))
        if norm == 0:
            raise ValueError("zero vector does not define a projector")
        amp_h, amp_v = abs(h) / norm, abs(v) / norm
        if amp_v == 0:
            return cls(1.0, 0.0, 0.0)
        rel = np.angle(v) - (np.angle(h) if amp_h > 0 else 0.0)
        return cls(min(amp_h, 1.0), min(amp_v, 1.0), float(rel))

    def vector(self) -> np.ndarray:
        return np.array([self.amp_h, self.amp_v * np.exp(1j * self.phase)], dtype=complex)

    def matrix(self) -> np.ndarray:
        v = self.vector()
        return np.outer(v, v.conj())


H = QubitProjector(1.0, 0.0, 0.0)
V = QubitProjector(0.0, 1.0, 0.0)


@dataclass(frozen=True)
class NoisyGHZ:
    """``visibility * |G_n><G_n| + (1 - visibility) * 1/2^n``."""

    n: int
    visibility: float

    def __post_init__(self):
        if not 0.0 <= self.visibility <= 1.0:
            raise ValueError(f"visibility must lie in [0, 1], got {self.visibility}")
        _check_size(self.n)

    def density_matrix(self) -> np.ndarray:
        # 4^n entries; only for cross-checks at small n
        psi = ghz(self.n).amplitudes
        dim = 2**self.n
        return self.visibility * np.outer(psi, psi.conj()) + (1 - self.visibility) * np.eye(dim) / dim


def _check_size(n: int, cap: int = MAX_QUBITS) -> None:
    if n < 1:
        raise DimensionError(f"qubit count must be positive, got {n}")
    if n > cap:
        raise SizeError(f"{n} qubits exceeds the dense-state cap of {cap}")


def ghz(n: int, cap: int = MAX_QUBITS) -> StateVector:
    _check_size(n, cap)
    amps = np.zeros(2**n, dtype=complex)
    amps[0] = amps[-1] = 1 / math.sqrt(2)
    return StateVector(n, amps)


def orthogonal(p: QubitProjector) -> QubitProjector:
    """Projector onto ``amp_v|H> - amp_h e^{i phase}|V>``."""
    return QubitProjector(p.amp_v, p.amp_h, p.phase + math.pi)


def joint_probability(state: StateVector, projectors: Sequence[QubitProjector]) -> float:
    if len(projectors) != state.n:
        raise DimensionError(f"{len(projectors)} projectors given for {state.n} qubits")
    psi = state.amplitudes.reshape((2,) * state.n)
    # contract qubit 1 first; it is the leading axis
    for p in projectors:
        psi = np.tensordot(p.vector().conj(), psi, axes=(0, 0))
    return float(abs(complex(psi)) ** 2)


def noisy_joint_probability(rho: NoisyGHZ, projectors: Sequence[QubitProjector]) -> float:
    if len(projectors) != rho.n:
        raise DimensionError(f"{len(projectors)} projectors given for {rho.n} qubits")
    pure = joint_probability(ghz(rho.n), projectors)
    # Tr(P_1 x ... x P_n)/2^n = 1/2^n for rank-1 factors
    return rho.visibility * pure + (1 - rho.visibility) / 2**rho.n


def equatorial_closed_form(n: int, phases: Sequence[float]) -> float:
    """GHZ success probability for equatorial projectors, ``(1 + cos(sum)) / 2^n``."""
    if len(phases) != n:
        raise DimensionError(f"{len(phases)} phases given for {n} qubits")
    return (1 + math.cos(math.fsum(phases))) / 2**n
