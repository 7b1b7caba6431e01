"""Command-line front end.

Exit codes: 0 success, 1 input/parse errors, 2 domain errors, 64 usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from . import ingest, lhv, noise, synth
from .errors import DomainError, InputError
from .inequality import f_coefficient, quantum_value
from .scenario import (
    Scenario,
    alpha_strings,
    constraint_strings,
    display_width,
    success_string,
    validate,
)
from .settings import COMPUTATIONAL_WAVEPLATES, equatorial_waveplates, solve, verify, waveplates

EXIT_OK, EXIT_INPUT, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}\n")


@dataclass
class Output:
    payload: dict
    table: str
    header: Sequence[str] = ()
    rows: list = field(default_factory=list)

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.payload, indent=2, ensure_ascii=False) + "\n"
        if fmt == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(self.header)
            writer.writerows(self.rows)
            return buf.getvalue()
        return self.table.rstrip("\n") + "\n"


def _num(v: float) -> str:
    return f"{v:.12g}"


def _pad(text: str, width: int) -> str:
    return text + " " * (width - display_width(text))


def _align(rows: Sequence[Sequence[str]]) -> str:
    widths = [max(display_width(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join(
        "  ".join(_pad(cell, w) for cell, w in zip(row, widths)).rstrip() for row in rows
    )


def _scenario_dict(s: Scenario) -> dict:
    return {"n": s.n, "ka": s.ka, "kb": s.kb, "x": str(s.x), "y": str(s.y)}


def _scenario(args) -> Scenario:
    return validate(args.n, args.ka, args.kb, args.x, args.y)


def _wp_dict(wp) -> dict:
    return {"qwpDeg": wp.qwp, "hwpDeg": wp.hwp}


def _deg(v: float) -> str:
    return f"{v:.2f}"


def cmd_solve(args) -> Output:
    s = _scenario(args)
    ms = solve(s)
    wps = waveplates(ms)
    payload = {
        "scenario": _scenario_dict(s),
        "settings": ms.to_dict(),
        "waveplates": {k: _wp_dict(v) for k, v in wps.items()},
    }
    table = _align([
        ["n", "|alpha|", "|beta|", "HWP_a", "HWP_b"],
        [str(s.n), str(s.ka), str(s.kb), _deg(wps["a"].hwp) + "°", _deg(wps["b"].hwp) + "°"],
    ])
    table += (
        f"\n\nQWP at {wps['a'].qwp:g}° for both bases"
        f"\ntheta_a = {_num(ms.theta_a)} rad, theta_b = {_num(ms.theta_b)} rad"
        f"\namplitudes a = ({_num(ms.a_amp_h)}, {_num(ms.a_amp_v)}),"
        f" b = ({_num(ms.b_amp_h)}, {_num(ms.b_amp_v)}); branch m1={ms.m1}, m2={ms.m2}"
    )
    header = ["n", "ka", "kb", "thetaA", "thetaB", "qwpDeg", "hwpADeg", "hwpBDeg"]
    rows = [[s.n, s.ka, s.kb, _num(ms.theta_a), _num(ms.theta_b), _num(wps["a"].qwp),
             _num(wps["a"].hwp), _num(wps["b"].hwp)]]
    return Output(payload, table, header, rows)


def cmd_verify(args) -> Output:
    s = _scenario(args)
    rep = verify(s, solve(s))
    alphas = set(alpha_strings(s))
    cons = [
        {"string": st.ascii(), "kind": "alpha" if st in alphas else "beta", "probability": p}
        for st, p in rep.constraints
    ]
    payload = {
        "scenario": _scenario_dict(s),
        "constraints": cons,
        "success": rep.success,
        "successClosedForm": rep.success_closed_form,
        "maxConstraint": rep.max_constraint,
        "paradox": rep.paradox,
    }
    lines = [["projector", "kind", "probability"]]
    lines += [[st.subscripted(), c["kind"], f"{p:.3e}"] for (st, p), c in zip(rep.constraints, cons)]
    lines.append([success_string(s).subscripted(), "success", _num(rep.success)])
    table = _align(lines)
    table += f"\n\nclosed form (1 + cos(n theta_a))/2^n = {_num(rep.success_closed_form)}"
    table += "\nparadox realized: " + ("yes" if rep.paradox else "no")
    rows = [[c["string"], c["kind"], repr(c["probability"])] for c in cons]
    rows.append([success_string(s).ascii(), "success", repr(rep.success)])
    return Output(payload, table, ["string", "kind", "probability"], rows)


def cmd_ivalue(args) -> Output:
    s = _scenario(args)
    iv = quantum_value(s)
    table = f"{iv.label()} = {_num(iv.value)}  (F = {iv.f})"
    d = iv.to_dict()
    return Output(d, table, list(d), [list(d.values())])


def cmd_lhv_bound(args) -> Output:
    s = _scenario(args)
    bound = lhv.classical_max(s)
    payload = {
        "scenario": _scenario_dict(s),
        "classicalMax": str(bound.max_value),
        "saturatingCount": bound.saturating_count,
    }
    table = _align([
        ["scenario", "strategies", "classical max", "saturating"],
        [str(s), str(4**s.n), str(bound.max_value), str(bound.saturating_count)],
    ])
    return Output(payload, table, list(payload), [[s.label(), str(bound.max_value), bound.saturating_count]])


def cmd_paradox(args) -> Output:
    s = _scenario(args)
    chk = lhv.logical_paradox_check(s)
    payload = {
        "scenario": _scenario_dict(s),
        "holds": chk.holds,
        "successStrategies": chk.success_strategies,
        "minWeightedViolation": None if chk.min_weighted_violation is None else str(chk.min_weighted_violation),
        "witness": None if chk.witness is None else chk.witness.to_dict(),
    }
    table = f"{s.label()}: zero conditions force p(a...a) = 0 classically: " + ("yes" if chk.holds else "no")
    table += f"\nstrategies with success 1: {chk.success_strategies}"
    if chk.min_weighted_violation is not None:
        table += f"; each breaks weighted constraints >= {chk.min_weighted_violation} (F = {f_coefficient(s)})"
    if chk.witness is not None:
        table += f"\ncounterexample strategy (a,b) per party: {chk.witness}"
    rows = [[s.label(), chk.holds, chk.success_strategies, payload["minWeightedViolation"]]]
    return Output(payload, table, ["scenario", "holds", "successStrategies", "minWeightedViolation"], rows)


def cmd_facet(args) -> Output:
    s = _scenario(args)
    bound = lhv.classical_max(s)
    rep = lhv.facet_rank(s)
    payload = {
        "scenario": _scenario_dict(s),
        "classicalMax": str(bound.max_value),
        "saturatingCount": rep.saturating_count,
        "polytopeDim": rep.polytope_dim,
        "saturatingDim": rep.saturating_dim,
        "isFacet": rep.is_facet,
    }
    table = _align([
        ["scenario", "polytope dim", "saturating dim", "saturating vertices", "facet"],
        [str(s), str(rep.polytope_dim), str(rep.saturating_dim), str(rep.saturating_count),
         "yes" if rep.is_facet else "no"],
    ])
    if not rep.is_facet:
        table += f"\nnot a facet: saturating face has dimension {rep.saturating_dim}, a facet needs {rep.polytope_dim - 1}"
    header = list(payload)
    return Output(payload, table, header, [[s.label()] + list(payload.values())[1:]])


def cmd_visibility(args) -> Output:
    s = _scenario(args)
    curve = noise.visibility_threshold(s)
    payload = curve.to_dict()
    table = _align([
        ["scenario", "I(V=0)", "I(V=1)", "critical V"],
        [str(s), _num(float(curve.i_at_v0)), _num(curve.i_at_v1), _num(curve.v_crit)],
    ])
    header = ["scenario", "iAtV0", "iAtV1", "vCrit"]
    rows = [[s.label(), repr(float(curve.i_at_v0)), repr(curve.i_at_v1), repr(curve.v_crit)]]
    if args.sweep:
        sweep = curve.sweep(args.sweep)
        payload["sweep"] = [{"visibility": v, "I": i} for v, i in sweep]
        table += "\n\n" + _align([["V", "I"]] + [[f"{v:.4f}", _num(i)] for v, i in sweep])
        header = ["visibility", "I"]
        rows = [[repr(v), repr(i)] for v, i in sweep]
    return Output(payload, table, header, rows)


def _plan_basis(basis) -> dict:
    if basis.kind == "computational":
        return {"type": "computational", **_wp_dict(COMPUTATIONAL_WAVEPLATES)}
    return {"type": "equatorial", "phaseRad": basis.phase, **_wp_dict(equatorial_waveplates(basis.phase))}


def cmd_plan(args) -> Output:
    s = _scenario(args)
    solved = cmd_solve(args)
    ms = solve(s)
    strings_by_setting: dict[str, list[str]] = {}
    for st in [success_string(s)] + constraint_strings(s):
        strings_by_setting.setdefault(st.bases(), []).append(st.ascii())
    hardy = [
        {"label": label, "purpose": "hardy", "bases": [_plan_basis(b) for b in bases],
         "strings": strings_by_setting[label]}
        for label, bases in synth.hardy_settings(s, ms)
    ]
    wit = [
        {"label": label, "purpose": "witness", "bases": [_plan_basis(b) for b in bases]}
        for label, bases in synth.witness_settings(s.n)
    ]
    payload = dict(solved.payload, hardySettings=hardy, witnessSettings=wit)

    lines = [["setting", "purpose", "QWP/HWP per qubit (deg)", "reads"]]
    rows = []
    for item in hardy + wit:
        plates = " ".join(f"{b['qwpDeg']:g}/{_deg(b['hwpDeg'])}" for b in item["bases"])
        reads = ", ".join(item.get("strings", [])) or ("H...H + V...V" if item["label"] == "HV" else "parity")
        lines.append([item["label"], item["purpose"], plates, reads])
        rows.append([item["label"], item["purpose"], plates, reads])
    table = solved.table + "\n\n" + _align(lines)
    return Output(payload, table, ["setting", "purpose", "waveplates", "reads"], rows)


def cmd_analyze(args) -> Output:
    s = _scenario(args)
    dataset = ingest.load_counts(args.file)
    rep = ingest.hardy_report(dataset, s)
    payload = rep.to_dict()
    header = ["string", "kind", "setting", "k", "N", "value", "sigma"]
    rows = [
        [r.string.ascii(), r.kind, r.setting, r.estimate.counts[0], r.estimate.counts[1],
         repr(r.estimate.value), repr(r.estimate.sigma)]
        for r in rep.rows
    ]
    rows.append(["I", "", "", "", "", repr(rep.ivalue.value), repr(rep.ivalue.sigma)])
    return Output(payload, rep.to_text(), header, rows)


def cmd_witness(args) -> Output:
    dataset = ingest.load_counts(args.file)
    res = ingest.witness(dataset)
    payload = res.to_dict()
    table = (
        f"W = {res.w_value:.4f} ± {res.w_sigma:.4f}\n"
        f"fidelity = {res.fidelity:.4f} ± {res.fidelity_sigma:.4f}"
    )
    if res.w_sigma > 0:
        table += f"\nW below zero by {-res.w_value / res.w_sigma:.1f} standard deviations"
    return Output(payload, table, list(payload), [list(payload.values())])


_SCENARIO_COMMANDS: dict[str, tuple[Callable, str]] = {
    "solve": (cmd_solve, "solve the measurement settings and wave-plate angles"),
    "verify": (cmd_verify, "GHZ probabilities of every zero condition and of success"),
    "ivalue": (cmd_ivalue, "quantum value of the inequality"),
    "lhv-bound": (cmd_lhv_bound, "classical bound by enumerating deterministic strategies"),
    "paradox": (cmd_paradox, "logical check of the classical implication"),
    "facet": (cmd_facet, "exact affine-rank test of facet-ness"),
    "visibility": (cmd_visibility, "white-noise threshold"),
    "plan": (cmd_plan, "full measurement plan with wave-plate angles"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hardy", description="Generalized Hardy paradox toolkit for GHZ states.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    def add_format(p):
        p.add_argument("--format", choices=("json", "csv", "table"), default="table")

    def add_scenario(p):
        p.add_argument("n", type=int)
        p.add_argument("ka", type=int, help="|alpha|")
        p.add_argument("kb", type=int, help="|beta|")
        p.add_argument("--x", default="1", help="weight of the alpha terms (default 1)")
        p.add_argument("--y", default="1", help="weight of the beta terms (default 1)")

    for name, (func, help_text) in _SCENARIO_COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        add_scenario(p)
        add_format(p)
        if name == "visibility":
            p.add_argument("--sweep", type=int, nargs="?", const=11, default=None, metavar="POINTS",
                           help="also tabulate I(V) on an even grid (default 11 points)")
        p.set_defaults(func=func)

    p = sub.add_parser("analyze", help="evaluate the inequality on a counts file")
    p.add_argument("file")
    add_scenario(p)
    add_format(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("witness", help="GHZ entanglement witness and fidelity from a counts file")
    p.add_argument("file")
    add_format(p)
    p.set_defaults(func=cmd_witness)
    return parser


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        stderr.write(str(exc))
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    try:
        out = args.func(args)
    except DomainError as exc:
        stderr.write(f"hardy {args.command}: {exc}\n")
        return EXIT_DOMAIN
    except (InputError, OSError) as exc:
        stderr.write(f"hardy {args.command}: {exc}\n")
        return EXIT_INPUT
    stdout.write(out.render(args.format))
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
