"""Synthetic counts datasets: sampled from theory, rounded from theory, or
matched to quoted probability/deviation pairs."""

from __future__ import annotations

import math
import statistics
from typing import Mapping, Optional, Sequence, Union

import numpy as np

from . import qstate
from .ingest import Basis, CountsDataset, SettingRecord, witness_phases
from .scenario import ProjectorString, Scenario, constraint_strings, success_string
from .settings import MeasurementSettings, solve

Rng = Union[int, np.random.Generator, None]


def _projector(basis: Basis, bit: int) -> qstate.QubitProjector:
    if basis.kind == "computational":
        return qstate.H if bit else qstate.V
    p = qstate.QubitProjector.equatorial(basis.phase)
    return p if bit else qstate.orthogonal(p)


def patterns(n: int) -> list[str]:
    return [format(i, f"0{n}b") for i in range(2**n)]


def pattern_distribution(bases: Sequence[Basis], visibility: float = 1.0) -> np.ndarray:
    """Probability of each detector pattern (index = pattern read as binary, qubit 1 MSB)."""
    n = len(bases)
    rho = qstate.NoisyGHZ(n, visibility)
    probs = np.empty(2**n)
    for i, pat in enumerate(patterns(n)):
        projs = [_projector(b, int(bit)) for b, bit in zip(bases, pat)]
        probs[i] = qstate.noisy_joint_probability(rho, projs)
    probs = np.clip(probs, 0.0, None)
    return probs / probs.sum()


def hardy_settings(s: Scenario, ms: Optional[MeasurementSettings] = None) -> list[tuple[str, tuple[Basis, ...]]]:
    """Distinct settings needed for the success and constraint strings, in first-use order."""
    ms = ms or solve(s)
    seen: dict[str, tuple[Basis, ...]] = {}
    for st in [success_string(s)] + constraint_strings(s):
        label = st.bases()
        if label not in seen:
            seen[label] = tuple(
                Basis.equatorial(ms.theta_a if c == "a" else ms.theta_b) for c in label
            )
    return list(seen.items())


def witness_settings(n: int) -> list[tuple[str, tuple[Basis, ...]]]:
    out = [("HV", (Basis.computational(),) * n)]
    out += [(f"M{k}", (Basis.equatorial(ph),) * n) for k, ph in enumerate(witness_phases(n))]
    return out


def largest_remainder(probs: np.ndarray, total: int) -> np.ndarray:
    """Integer counts summing to ``total`` closest to ``probs * total``."""
    raw = np.asarray(probs, dtype=float) * total
    counts = np.floor(raw).astype(np.int64)
    short = total - int(counts.sum())
    if short > 0:
        order = np.argsort(-(raw - counts), kind="stable")
        counts[order[:short]] += 1
    return counts


def _record(label: str, bases, counts) -> SettingRecord:
    n = len(bases)
    return SettingRecord(label, tuple(bases), {p: int(c) for p, c in zip(patterns(n), counts)})


def _rng(seed: Rng) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def _setting_list(s: Optional[Scenario], n: int, witness: bool):
    out = hardy_settings(s) if s is not None else []
    if witness:
        out += witness_settings(n)
    return out


def sample_dataset(
    s: Optional[Scenario],
    shots: int,
    seed: Rng = 0,
    visibility: float = 1.0,
    witness: bool = False,
    n: Optional[int] = None,
) -> CountsDataset:
    """Multinomial counts with ``shots`` events per setting."""
    n = s.n if s is not None else n
    rng = _rng(seed)
    records = [
        _record(label, bases, rng.multinomial(shots, pattern_distribution(bases, visibility)))
        for label, bases in _setting_list(s, n, witness)
    ]
    return CountsDataset(n, tuple(records))


def expected_dataset(
    s: Optional[Scenario],
    shots: int,
    visibility: float = 1.0,
    witness: bool = False,
    n: Optional[int] = None,
) -> CountsDataset:
    """Noise-free counts: theory probabilities rounded to integers per setting."""
    n = s.n if s is not None else n
    records = [
        _record(label, bases, largest_remainder(pattern_distribution(bases, visibility), shots))
        for label, bases in _setting_list(s, n, witness)
    ]
    return CountsDataset(n, tuple(records))


def _binomial_sigma(k: int, total: int) -> float:
    return math.sqrt(k * (total - k) / total**3)


def _best_total(targets: list[tuple[float, float]], lo: int, hi: int, decimals: int) -> Optional[int]:
    half = 0.5 * 10**-decimals + 1e-12
    best, best_cost = None, math.inf
    for total in range(lo, hi):
        ks = [round(p * total) for p, _ in targets]
        if sum(ks) > total or any(abs(k / total - p) > half for k, (p, _) in zip(ks, targets)):
            continue
        cost = sum((_binomial_sigma(k, total) - sd) ** 2 for k, (_, sd) in zip(ks, targets) if sd > 0)
        if cost < best_cost:
            best, best_cost = total, cost
    return best


def match_quoted(
    s: Scenario,
    quoted: Mapping[Union[str, ProjectorString], tuple[float, float]],
    decimals: int = 3,
    search: tuple[int, int] = (50, 5000),
) -> CountsDataset:
    """Counts whose per-string ``k/N`` rounds to the quoted probability and whose
    binomial deviations best match the quoted ones.

    Strings sharing a setting share its total ``N``. Events not assigned to a
    quoted pattern are spread over the remaining patterns in proportion to the
    ideal GHZ distribution for that setting.
    """
    ms = solve(s)
    by_string = {
        (k if isinstance(k, ProjectorString) else ProjectorString.parse(k)): v
        for k, v in quoted.items()
    }
    groups: dict[str, list[tuple[ProjectorString, float, float]]] = {}
    for st, (p, sd) in by_string.items():
        groups.setdefault(st.bases(), []).append((st, p, sd))

    totals: dict[str, int] = {}
    for label, items in groups.items():
        if any(sd > 0 for _, _, sd in items):
            total = _best_total([(p, sd) for _, p, sd in items], *search, decimals)
            if total is None:
                raise ValueError(f"no total in {search} reproduces the quoted values for {label}")
            totals[label] = total
    fallback = round(statistics.median(totals.values())) if totals else search[1] // 2
    for label in groups:
        totals.setdefault(label, fallback)

    records = []
    for label, bases in hardy_settings(s, ms):
        if label not in groups:
            continue
        total = totals[label]
        fixed = {st.pattern(): round(p * total) for st, p, _ in groups[label]}
        pats = patterns(s.n)
        ideal = pattern_distribution(bases)
        free = np.array([0.0 if pat in fixed else ideal[i] for i, pat in enumerate(pats)])
        if free.sum() <= 0:
            free = np.array([0.0 if pat in fixed else 1.0 for pat in pats])
        rest = largest_remainder(free / free.sum(), total - sum(fixed.values()))
        counts = [fixed.get(pat, int(rest[i])) for i, pat in enumerate(pats)]
        records.append(_record(label, bases, counts))
    return CountsDataset(s.n, tuple(records))
