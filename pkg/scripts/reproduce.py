"""Print every quoted experimental number next to the value this package computes.

    python scripts/reproduce.py
"""

from hardyparadox import ingest, lhv, measured, noise
from hardyparadox.inequality import evaluate
from hardyparadox.settings import solve, verify, waveplates

DATA = ingest.__file__.rsplit("/", 1)[0] + "/data/"


def main():
    print("settings and ideal predictions")
    for key in measured.SCENARIOS:
        s = measured.scenario(key)
        ms = solve(s)
        wps = waveplates(ms)
        rep = verify(s, ms)
        quoted = measured.HWP_DEGREES[key]
        print(f"  {s.label():8} HWP a {wps['a'].hwp:6.2f} (quoted {quoted[0]:5.2f})"
              f"  b {wps['b'].hwp:6.2f} (quoted {quoted[1]:5.2f})"
              f"  p(success) {rep.success:.5f} (quoted {float(measured.SUCCESS[key]):.5f})"
              f"  max constraint {rep.max_constraint:.1e}")

    print("inequality from quoted probabilities / from bundled counts")
    for key in measured.SCENARIOS:
        s = measured.scenario(key)
        from_table = evaluate(s, measured.table(key))
        from_counts = ingest.hardy_report(ingest.load_counts(DATA + measured.fixture_name(key)), s)
        value, sigma = measured.I_VALUES[key]
        print(f"  {s.label():8} {from_table}  {from_counts.ivalue}  quoted {value:.3f}({sigma:.3f})"
              f"  {from_counts.n_sigma:.1f} sd")

    print("local bound, facet test, critical visibility")
    for key in measured.SCENARIOS:
        s = measured.scenario(key)
        bound = lhv.classical_max(s)
        facet = lhv.facet_rank(s)
        curve = noise.visibility_threshold(s)
        print(f"  {s.label():8} max {bound.max_value}  dims {facet.saturating_dim}/{facet.polytope_dim}"
              f"  facet {facet.is_facet}  V_crit {curve.v_crit:.4f}")

    print("witness -> fidelity")
    for n, (w, sd) in measured.WITNESS.items():
        print(f"  n={n}  W {w} +- {sd}  ->  F {float(ingest.fidelity_from_witness(w)):.3f}"
              f"  (quoted {measured.FIDELITY[n][0]})")


if __name__ == "__main__":
    main()
