"""Regenerate the bundled counts files that reproduce the measured probabilities.

    python scripts/make_fixtures.py [outdir]
"""

import sys
from pathlib import Path

from hardyparadox import ingest, measured, synth

DEFAULT_OUT = Path(__file__).resolve().parents[1] / "src" / "hardyparadox" / "data"


def main(outdir=DEFAULT_OUT):
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for key in measured.SCENARIOS:
        s = measured.scenario(key)
        dataset = synth.match_quoted(s, measured.PROBABILITIES[key])
        path = outdir / measured.fixture_name(key)
        ingest.save_counts(dataset, path)
        report = ingest.hardy_report(dataset, s)
        print(f"{path.name}: {report.ivalue}")


if __name__ == "__main__":
    main(*sys.argv[1:])
