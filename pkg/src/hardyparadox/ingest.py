"""Coincidence-count datasets: parsing, probability estimates, Hardy and witness reports.

Pattern bits follow the detector ports: 1 is the transmitted port (projection
onto the setting's own vector, i.e. an unbarred symbol), 0 the reflected port.
In the computational basis 1 means H and 0 means V.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Mapping, Optional, Sequence, Union

import jsonschema

from . import schemas
from .errors import ConsistencyError, MissingSettingError, ParseError
from .inequality import IValue, ProbabilityEstimate, ProbabilityTable, evaluate, format_uncertain
from .scenario import (
    ProjectorString,
    Scenario,
    alpha_strings,
    beta_strings,
    display_width,
    success_string,
)
from .settings import MeasurementSettings, solve

PHASE_TOL = 1e-9


@dataclass(frozen=True)
class Basis:
    kind: str  # "computational" or "equatorial"
    phase: Optional[float] = None

    @classmethod
    def computational(cls) -> Basis:
        return cls("computational")

    @classmethod
    def equatorial(cls, phase: float) -> Basis:
        return cls("equatorial", float(phase))

    def matches_phase(self, phase: float) -> bool:
        if self.kind != "equatorial":
            return False
        return abs(math.remainder(self.phase - phase, 2 * math.pi)) <= PHASE_TOL

    def to_dict(self) -> dict:
        if self.kind == "computational":
            return {"type": "computational"}
        return {"type": "equatorial", "phase_rad": self.phase}


@dataclass(frozen=True)
class SettingRecord:
    label: str
    bases: tuple[Basis, ...]
    counts: Mapping[str, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def count(self, pattern: str) -> int:
        return self.counts.get(pattern, 0)

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "bases": [b.to_dict() for b in self.bases],
            "counts": dict(sorted(self.counts.items())),
        }


@dataclass(frozen=True)
class CountsDataset:
    n: int
    settings: tuple[SettingRecord, ...]

    def to_document(self) -> dict:
        return {"n": self.n, "settings": [rec.to_dict() for rec in self.settings]}

    def find(self, predicate) -> Optional[SettingRecord]:
        for rec in self.settings:
            if predicate(rec):
                return rec
        return None


def _json_path(error: jsonschema.ValidationError) -> str:
    path = "$"
    for part in error.absolute_path:
        path += f"[{part}]" if isinstance(part, int) else f".{part}"
    return path


def parse_counts(document: Mapping[str, Any]) -> CountsDataset:
    validator = jsonschema.Draft202012Validator(schemas.COUNTS_FILE)
    error = jsonschema.exceptions.best_match(validator.iter_errors(document))
    if error is not None:
        raise ParseError(_json_path(error), error.message)

    n = document["n"]
    records = []
    for i, raw in enumerate(document["settings"]):
        where = f"$.settings[{i}]"
        if len(raw["bases"]) != n:
            raise ConsistencyError(f"{where}.bases", f"{len(raw['bases'])} bases for n = {n}")
        for pattern in raw["counts"]:
            if len(pattern) != n:
                raise ConsistencyError(
                    f"{where}.counts.{pattern}", f"pattern length {len(pattern)} != n = {n}"
                )
        if sum(raw["counts"].values()) <= 0:
            raise ParseError(f"{where}.counts", "setting has no recorded events")
        bases = tuple(
            Basis.computational() if b["type"] == "computational" else Basis.equatorial(b["phase_rad"])
            for b in raw["bases"]
        )
        records.append(SettingRecord(raw.get("label", f"setting{i}"), bases, dict(raw["counts"])))
    return CountsDataset(n, tuple(records))


def load_counts(path: Union[str, Path]) -> CountsDataset:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(str(path), f"cannot read file ({exc.strerror})") from exc
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(str(path), f"invalid JSON: {exc}") from exc
    return parse_counts(document)


def save_counts(dataset: CountsDataset, path: Union[str, Path]) -> None:
    Path(path).write_text(json.dumps(dataset.to_document(), indent=2) + "\n", encoding="utf-8")


def binomial_estimate(k: int, total: int, source: str = "counts") -> ProbabilityEstimate:
    """``k/N`` with deviation ``sqrt(k (N - k) / N^3)``."""
    if total <= 0 or not 0 <= k <= total:
        raise ValueError(f"need 0 <= k <= N and N > 0, got k={k}, N={total}")
    return ProbabilityEstimate(k / total, math.sqrt(k * (total - k) / total**3), source, (k, total))


def _phases_for(string: ProjectorString, ms: MeasurementSettings) -> list[float]:
    return [ms.theta_a if sym.basis == "a" else ms.theta_b for sym in string]


def setting_for(dataset: CountsDataset, string: ProjectorString, ms: MeasurementSettings):
    phases = _phases_for(string, ms)
    return dataset.find(
        lambda rec: all(b.matches_phase(p) for b, p in zip(rec.bases, phases))
    )


def _describe_bases(string: ProjectorString, ms: MeasurementSettings) -> str:
    return ", ".join(f"q{k}: {b} (phase {p:.6f})" for k, (b, p) in
                     enumerate(zip(string.bases(), _phases_for(string, ms)), start=1))


def estimate(dataset: CountsDataset, string: ProjectorString, ms: MeasurementSettings) -> ProbabilityEstimate:
    if string.n != dataset.n:
        raise MissingSettingError(f"string {string} has {string.n} qubits, dataset has {dataset.n}")
    rec = setting_for(dataset, string, ms)
    if rec is None:
        raise MissingSettingError(
            f"no setting measures {string.ascii()}; required bases: {_describe_bases(string, ms)}"
        )
    return binomial_estimate(rec.count(string.pattern()), rec.total, source=f"counts:{rec.label}")


@dataclass(frozen=True)
class ReportRow:
    string: ProjectorString
    kind: str  # "success", "alpha" or "beta"
    setting: str
    estimate: ProbabilityEstimate

    def to_dict(self) -> dict:
        return {
            "string": self.string.ascii(),
            "kind": self.kind,
            "setting": self.setting,
            "estimate": self.estimate.to_dict(),
        }


@dataclass(frozen=True)
class HardyReport:
    scenario: Scenario
    rows: tuple[ReportRow, ...]
    ivalue: IValue

    @property
    def n_sigma(self) -> float:
        return self.ivalue.n_sigma

    @property
    def violated(self) -> bool:
        return self.ivalue.violated

    @property
    def zero_count_rows(self) -> list[ReportRow]:
        return [r for r in self.rows if r.estimate.zero_count]

    def to_dict(self) -> dict:
        nsig = self.n_sigma
        return {
            "scenario": _scenario_dict(self.scenario),
            "rows": [r.to_dict() for r in self.rows],
            "I": self.ivalue.to_dict(),
            "nSigma": nsig if math.isfinite(nsig) else str(nsig),
            "violated": self.violated,
        }

    def to_text(self, unicode: bool = True) -> str:
        width = max(display_width(_fmt_string(r.string, unicode)) for r in self.rows)
        lines = [f"scenario {self.scenario}", f"{'projector':<{width}}  probability"]
        for row in self.rows:
            est = row.estimate
            shown = "0" if est.zero_count else format_uncertain(est.value, est.sigma)
            flag = "  (zero count)" if est.zero_count else ""
            mark = "*" if row.kind == "success" else " "
            name = _fmt_string(row.string, unicode)
            pad = " " * (width - display_width(name))
            lines.append(f"{name}{pad}  {shown}{mark}{flag}".rstrip())
        lines.append(str(self.ivalue))
        nsig = self.n_sigma
        lines.append(f"standard deviations above zero: {nsig:.1f}")
        lines.append("violation: " + ("yes" if self.violated else "no"))
        return "\n".join(lines)


def _fmt_string(st: ProjectorString, unicode: bool) -> str:
    return st.subscripted() if unicode else st.ascii()


def _scenario_dict(s: Scenario) -> dict:
    return {"n": s.n, "ka": s.ka, "kb": s.kb, "x": str(s.x), "y": str(s.y)}


def hardy_report(
    dataset: CountsDataset, s: Scenario, ms: Optional[MeasurementSettings] = None
) -> HardyReport:
    ms = ms or solve(s)
    wanted = [(success_string(s), "success")]
    wanted += [(st, "alpha") for st in alpha_strings(s)]
    wanted += [(st, "beta") for st in beta_strings(s)]

    missing = [st for st, _ in wanted if setting_for(dataset, st, ms) is None]
    if missing:
        detail = "; ".join(f"{st.ascii()} [{_describe_bases(st, ms)}]" for st in missing)
        raise MissingSettingError(f"dataset lacks settings for {len(missing)} string(s): {detail}")

    rows = []
    for st, kind in wanted:
        rec = setting_for(dataset, st, ms)
        rows.append(ReportRow(st, kind, rec.label, estimate(dataset, st, ms)))
    table = ProbabilityTable({r.string: r.estimate for r in rows})
    return HardyReport(s, tuple(rows), evaluate(s, table))


# -- entanglement witness ---------------------------------------------------


@dataclass(frozen=True)
class WitnessResult:
    n: int
    w_exact: Fraction
    w_sigma: float
    fidelity_exact: Fraction

    @property
    def w_value(self) -> float:
        return float(self.w_exact)

    @property
    def fidelity(self) -> float:
        return float(self.fidelity_exact)

    @property
    def fidelity_sigma(self) -> float:
        return self.w_sigma

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "wValue": self.w_value,
            "wSigma": self.w_sigma,
            "fidelity": self.fidelity,
            "fidelitySigma": self.fidelity_sigma,
        }


def fidelity_from_witness(w: Union[float, str, Fraction]) -> Fraction:
    """GHZ fidelity ``1/2 - W``; decimal strings are kept exact."""
    w = Fraction(str(w)) if isinstance(w, float) else Fraction(w)
    return Fraction(1, 2) - w


def witness_phases(n: int) -> list[float]:
    return [k * math.pi / n for k in range(n)]


def witness(dataset: CountsDataset) -> WitnessResult:
    n = dataset.n
    comp = dataset.find(lambda rec: all(b.kind == "computational" for b in rec.bases))
    if comp is None:
        raise MissingSettingError("witness needs a setting with every qubit in the H/V basis")
    total = comp.total
    pop = Fraction(comp.count("1" * n) + comp.count("0" * n), total)
    var = float(pop * (1 - pop)) / total / 4

    corr = Fraction(0)
    for k, phase in enumerate(witness_phases(n)):
        rec = dataset.find(lambda r: all(b.matches_phase(phase) for b in r.bases))
        if rec is None:
            raise MissingSettingError(
                f"witness needs M_{k}: every qubit equatorial with phase {k}*pi/{n} = {phase:.6f}"
            )
        tot_k = rec.total
        expect = Fraction(
            sum((-1) ** pattern.count("0") * c for pattern, c in rec.counts.items()), tot_k
        )
        corr += (-1) ** k * expect
        var += float(1 - expect**2) / tot_k / (2 * n) ** 2

    fidelity = pop / 2 + corr / (2 * n)
    w = Fraction(1, 2) - fidelity
    return WitnessResult(n, w, math.sqrt(max(var, 0.0)), fidelity_from_witness(w))


def estimates_for(dataset: CountsDataset, strings: Sequence[ProjectorString], ms: MeasurementSettings):
    return {st: estimate(dataset, st, ms) for st in strings}
