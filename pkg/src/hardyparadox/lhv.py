"""Local hidden variable side: exhaustive deterministic-strategy enumeration.

A deterministic strategy fixes, for every party k, the outcome of both
observables ``(a_k, b_k)``. There are ``4^n`` of them. Strategy index ``i``
stores party 1 in the most significant base-4 digit, digit ``2 a_k + b_k``.
Because the inequality is affine in the behavior, its maximum over the local
polytope is attained on these vertices.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import lcm
from typing import Optional, Sequence

import numpy as np

from .errors import DimensionError, SizeError
from .inequality import f_coefficient
from .scenario import (
    ProjectorString,
    Scenario,
    alpha_strings,
    beta_strings,
    success_string,
)

ENUMERATION_CAP = 10
FACET_CAP = 4
THREADS_ENV = "HARDY_THREADS"
_CHUNK = 1 << 16


@dataclass(frozen=True)
class DeterministicStrategy:
    outcomes: tuple[tuple[int, int], ...]

    def __post_init__(self):
        outs = tuple((int(a), int(b)) for a, b in self.outcomes)
        if not outs:
            raise DimensionError("strategy needs at least one party")
        if any(v not in (0, 1) for pair in outs for v in pair):
            raise ValueError("outcomes must be 0 or 1")
        object.__setattr__(self, "outcomes", outs)

    @property
    def n(self) -> int:
        return len(self.outcomes)

    @classmethod
    def from_index(cls, index: int, n: int) -> DeterministicStrategy:
        if not 0 <= index < 4**n:
            raise ValueError(f"strategy index {index} out of range for n={n}")
        digits = [(index >> (2 * (n - 1 - k))) & 3 for k in range(n)]
        return cls(tuple((d >> 1, d & 1) for d in digits))

    @property
    def index(self) -> int:
        idx = 0
        for a, b in self.outcomes:
            idx = (idx << 2) | (2 * a + b)
        return idx

    def outcome(self, party: int, basis: str) -> int:
        a, b = self.outcomes[party]
        return a if basis == "a" else b

    def to_dict(self) -> dict:
        return {"a": [a for a, _ in self.outcomes], "b": [b for _, b in self.outcomes]}

    def __str__(self):
        return " ".join(f"({a},{b})" for a, b in self.outcomes)


def strategy_probability(d: DeterministicStrategy, string: ProjectorString) -> int:
    if d.n != string.n:
        raise DimensionError(f"strategy has {d.n} parties, string has {string.n}")
    for k, sym in enumerate(string):
        want = 0 if sym.barred else 1
        if d.outcome(k, sym.basis) != want:
            return 0
    return 1


def thread_count(default: Optional[int] = None) -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw is None:
        return default or os.cpu_count() or 1
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{THREADS_ENV} must be an integer >= 1, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{THREADS_ENV} must be an integer >= 1, got {value}")
    return value


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise SizeError(f"n = {n} exceeds the enumeration cap of {cap}")


def _integer_weights(s: Scenario) -> tuple[int, int, int, int]:
    """F, x, y scaled by a common denominator, plus that denominator."""
    f = f_coefficient(s)
    den = lcm(f.denominator, s.x.denominator, s.y.denominator)
    return int(f * den), int(s.x * den), int(s.y * den), den


def _bits(indices: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    shifts = 2 * (n - 1 - np.arange(n))
    digits = (indices[:, None] >> shifts[None, :]) & 3
    return (digits >> 1).astype(bool), (digits & 1).astype(bool)


def _string_indicator(a: np.ndarray, b: np.ndarray, string: ProjectorString) -> np.ndarray:
    hit = np.ones(a.shape[0], dtype=bool)
    for k, sym in enumerate(string):
        col = a[:, k] if sym.basis == "a" else b[:, k]
        hit &= ~col if sym.barred else col
    return hit


def _scaled_values(s: Scenario, indices: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Integer ``den * I`` for each strategy, plus success and weighted-violation arrays."""
    f, x, y, _ = _integer_weights(s)
    alphas, betas = alpha_strings(s), beta_strings(s)
    # int64 unless huge weight denominators could overflow it
    worst = f + x * len(alphas) + y * len(betas)
    dtype = np.int64 if worst < 2**62 else object
    a, b = _bits(indices, s.n)
    success = _string_indicator(a, b, success_string(s))
    violation = np.zeros(indices.shape[0], dtype=dtype)
    for st in alphas:
        violation += x * _string_indicator(a, b, st).astype(dtype)
    for st in betas:
        violation += y * _string_indicator(a, b, st).astype(dtype)
    return f * success.astype(dtype) - violation, success, violation


def strategy_values(s: Scenario, indices: Optional[np.ndarray] = None) -> list[Fraction]:
    """Exact inequality value of each listed strategy (all strategies by default)."""
    _check_cap(s.n, ENUMERATION_CAP)
    if indices is None:
        indices = np.arange(4**s.n, dtype=np.int64)
    scaled, _, _ = _scaled_values(s, np.asarray(indices, dtype=np.int64))
    den = _integer_weights(s)[3]
    return [Fraction(int(v), den) for v in scaled]


def _chunks(total: int, size: int = _CHUNK):
    for start in range(0, total, size):
        yield start, min(start + size, total)


@dataclass(frozen=True)
class ClassicalBound:
    scenario: Scenario
    max_value: Fraction
    argmax: tuple[int, ...]

    @property
    def saturating_count(self) -> int:
        return len(self.argmax)

    def strategies(self) -> list[DeterministicStrategy]:
        return [DeterministicStrategy.from_index(i, self.scenario.n) for i in self.argmax]


def classical_max(
    s: Scenario, cap: int = ENUMERATION_CAP, workers: Optional[int] = None
) -> ClassicalBound:
    """Exact maximum of the inequality over all ``4^n`` deterministic strategies."""
    _check_cap(s.n, cap)
    total = 4**s.n

    def scan(bounds):
        lo, hi = bounds
        vals, _, _ = _scaled_values(s, np.arange(lo, hi, dtype=np.int64))
        best = int(vals.max())
        return best, (np.flatnonzero(vals == best) + lo).tolist()

    chunks = list(_chunks(total))
    workers = workers or thread_count()
    if workers > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(scan, chunks))
    else:
        parts = [scan(c) for c in chunks]

    best = max(p[0] for p in parts)
    argmax = sorted(i for value, idx in parts if value == best for i in idx)
    den = _integer_weights(s)[3]
    return ClassicalBound(s, Fraction(best, den), tuple(argmax))


@dataclass(frozen=True)
class ParadoxCheck:
    scenario: Scenario
    holds: bool
    witness: Optional[DeterministicStrategy]
    success_strategies: int
    min_weighted_violation: Optional[Fraction]


def logical_paradox_check(s: Scenario, cap: int = ENUMERATION_CAP) -> ParadoxCheck:
    """Does every strategy with success 1 break at least one zero condition?"""
    _check_cap(s.n, cap)
    den = _integer_weights(s)[3]
    witness = None
    count = 0
    min_violation = None
    for lo, hi in _chunks(4**s.n):
        indices = np.arange(lo, hi, dtype=np.int64)
        _, success, violation = _scaled_values(s, indices)
        if not success.any():
            continue
        count += int(success.sum())
        v = violation[success]
        low = int(v.min())
        min_violation = low if min_violation is None else min(min_violation, low)
        clean = indices[success & (violation == 0)]
        if witness is None and clean.size:
            witness = DeterministicStrategy.from_index(int(clean[0]), s.n)
    return ParadoxCheck(
        s,
        witness is None,
        witness,
        count,
        None if min_violation is None else Fraction(min_violation, den),
    )


# -- behavior vectors and the facet test -----------------------------------


def settings_order(n: int) -> list[str]:
    """All ``2^n`` settings, e.g. ``"aab"``, lexicographic with ``a < b``."""
    return ["".join(t) for t in product("ab", repeat=n)]


def behavior_vector(d: DeterministicStrategy) -> np.ndarray:
    """0/1 conditional distribution, laid out setting-major then outcome pattern.

    Pattern bits are read with qubit 1 as the most significant bit.
    """
    n = d.n
    vec = np.zeros(4**n, dtype=np.int64)
    for si, setting in enumerate(settings_order(n)):
        pattern = 0
        for k, basis in enumerate(setting):
            pattern = (pattern << 1) | d.outcome(k, basis)
        vec[si * 2**n + pattern] = 1
    return vec


def _entry_index(string: ProjectorString) -> int:
    n = string.n
    si = int(string.bases().replace("a", "0").replace("b", "1"), 2)
    return si * 2**n + int(string.pattern(), 2)


def inequality_coefficients(s: Scenario) -> list[Fraction]:
    """Coefficient vector of the inequality in the behavior-vector embedding."""
    coef = [Fraction(0)] * 4**s.n
    coef[_entry_index(success_string(s))] += f_coefficient(s)
    for st in alpha_strings(s):
        coef[_entry_index(st)] -= s.x
    for st in beta_strings(s):
        coef[_entry_index(st)] -= s.y
    return coef


def exact_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    m = np.array([[int(v) for v in r] for r in rows], dtype=object)
    if m.size == 0:
        return 0
    nrows, ncols = m.shape
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == nrows:
            break
        nz = np.flatnonzero(m[rank:, col] != 0)
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            m[[rank, piv]] = m[[piv, rank]]
        p = m[rank, col]
        below = m[rank + 1 :, col : col + 1]
        # every update is an exact division by the previous pivot
        m[rank + 1 :, col:] = (m[rank + 1 :, col:] * p - below * m[rank, col:]) // prev
        prev = p
        rank += 1
    return rank


def affine_dimension(points: np.ndarray) -> int:
    points = np.asarray(points)
    if len(points) == 0:
        return -1
    return exact_rank((points[1:] - points[0]).tolist())


@dataclass(frozen=True)
class FacetReport:
    scenario: Scenario
    polytope_dim: int
    saturating_dim: int
    saturating_count: int

    @property
    def is_facet(self) -> bool:
        return self.saturating_dim == self.polytope_dim - 1


def vertex_matrix(n: int) -> np.ndarray:
    return np.array(
        [behavior_vector(DeterministicStrategy.from_index(i, n)) for i in range(4**n)]
    )


def facet_rank(s: Scenario, cap: int = FACET_CAP) -> FacetReport:
    _check_cap(s.n, cap)
    verts = vertex_matrix(s.n)
    coef = inequality_coefficients(s)
    den = lcm(*(c.denominator for c in coef))
    icoef = np.array([int(c * den) for c in coef], dtype=np.int64)
    values = verts @ icoef
    saturating = verts[values == 0]
    return FacetReport(s, affine_dimension(verts), affine_dimension(saturating), len(saturating))
