import json
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hardyparadox import ingest, measured, synth
from hardyparadox.errors import ConsistencyError, MissingSettingError, ParseError
from hardyparadox.inequality import quantum_value
from hardyparadox.scenario import ProjectorString, validate
from hardyparadox.settings import solve


def minimal_doc():
    return {"n": 1, "settings": [{"label": "z", "bases": [{"type": "computational"}], "counts": {"0": 1, "1": 1}}]}


def test_parse_minimal():
    ds = ingest.parse_counts(minimal_doc())
    assert ds.n == 1 and len(ds.settings) == 1 and ds.settings[0].total == 2


def test_parse_rejects_non_binary_pattern():
    doc = {"n": 3, "settings": [{"bases": [{"type": "computational"}] * 3, "counts": {"210": 4}}]}
    with pytest.raises(ParseError) as err:
        ingest.parse_counts(doc)
    assert "settings[0].counts" in err.value.path


@pytest.mark.parametrize(
    "mutate, exc",
    [
        (lambda d: d["settings"][0]["counts"].update({"1": -1}), ParseError),
        (lambda d: d["settings"][0]["counts"].update({"01": 1}), ConsistencyError),
        (lambda d: d["settings"][0]["bases"].append({"type": "computational"}), ConsistencyError),
        (lambda d: d["settings"][0]["bases"][0].update({"type": "equatorial"}), ParseError),
        (lambda d: d["settings"][0].update({"counts": {"0": 0}}), ParseError),
        (lambda d: d.pop("n"), ParseError),
    ],
)
def test_parse_rejections(mutate, exc):
    doc = minimal_doc()
    mutate(doc)
    with pytest.raises(exc):
        ingest.parse_counts(doc)


def test_load_counts_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ParseError):
        ingest.load_counts(bad)
    with pytest.raises(ParseError):
        ingest.load_counts(tmp_path / "absent.json")


def test_save_load_round_trip(tmp_path):
    ds = synth.sample_dataset(validate(3, 2, 2), 500, seed=1, witness=True)
    path = tmp_path / "ds.json"
    ingest.save_counts(ds, path)
    assert ingest.load_counts(path) == ds


def test_binomial_estimate():
    est = ingest.binomial_estimate(25, 100)
    assert est.value == 0.25
    assert est.sigma == pytest.approx(math.sqrt(0.25 * 0.75 / 100), abs=1e-15)
    zero = ingest.binomial_estimate(0, 448)
    assert (zero.value, zero.sigma, zero.zero_count) == (0.0, 0.0, True)
    anchor = ingest.binomial_estimate(59, 448)
    assert round(anchor.value, 3) == 0.132 and round(anchor.sigma, 3) == 0.016


def test_estimate_missing_setting():
    s = validate(3, 3, 1)
    ds = synth.expected_dataset(s, 1000)
    ds = ingest.CountsDataset(3, ds.settings[:1])
    with pytest.raises(MissingSettingError, match="b b b"):
        ingest.estimate(ds, ProjectorString.parse("b b b"), solve(s))
    with pytest.raises(MissingSettingError):
        ingest.hardy_report(ds, s)


@given(st.sampled_from([(3, 2, 2), (3, 3, 1), (4, 4, 1)]), st.integers(0, 2**31))
@settings(max_examples=15)
def test_per_setting_estimates_sum_to_one(key, seed):
    s = validate(*key)
    ds = synth.sample_dataset(s, 777, seed=seed)
    for rec in ds.settings:
        total = sum(Fraction(c, rec.total) for c in rec.counts.values())
        assert total == 1


def test_fixture_reports_match_published(data_dir, measured_key):
    s = measured.scenario(measured_key)
    rep = ingest.hardy_report(ingest.load_counts(data_dir / measured.fixture_name(measured_key)), s)
    value, sigma = measured.I_VALUES[measured_key]
    assert abs(rep.ivalue.value - value) <= 0.002
    assert abs(rep.ivalue.sigma - sigma) <= 0.002
    assert rep.violated


def test_fixture_reproduces_every_quoted_probability(data_dir, measured_key):
    s = measured.scenario(measured_key)
    rep = ingest.hardy_report(ingest.load_counts(data_dir / measured.fixture_name(measured_key)), s)
    quoted = {ProjectorString.parse(k): v for k, v in measured.PROBABILITIES[measured_key].items()}
    for row in rep.rows:
        p, sd = quoted[row.string]
        assert round(row.estimate.value, 3) == pytest.approx(p)
        assert abs(row.estimate.sigma - sd) <= 0.002


def test_zero_count_flagged(data_dir):
    rep = ingest.hardy_report(ingest.load_counts(data_dir / measured.fixture_name((4, 4, 1))), validate(4, 4, 1))
    zero = rep.zero_count_rows
    assert [r.string.ascii() for r in zero] == ["a b- a a"]
    assert "zero count" in rep.to_text()


def test_ideal_dataset_reproduces_quantum_value():
    s = validate(3, 2, 2)
    rep = ingest.hardy_report(synth.expected_dataset(s, 100_000), s)
    assert rep.ivalue.value == pytest.approx(quantum_value(s).value, abs=1e-4)
    assert rep.ivalue.sigma < 0.002


@pytest.mark.parametrize("key", [(3, 2, 2), (3, 3, 1), (4, 2, 2), (4, 4, 1)])
def test_sampled_round_trip_within_three_sigma(key):
    s = validate(*key)
    ds = synth.sample_dataset(s, 20_000, seed=7)
    ms = solve(s)
    for rec in ds.settings:
        ideal = synth.pattern_distribution(rec.bases)
        for i, pat in enumerate(synth.patterns(s.n)):
            est = ingest.binomial_estimate(rec.count(pat), rec.total)
            bound = 3 * math.sqrt(ideal[i] * (1 - ideal[i]) / rec.total)
            assert abs(est.value - ideal[i]) <= bound + 1e-12
    assert ingest.hardy_report(ds, s, ms).violated


class TestWitness:
    def test_ideal_ghz(self):
        for n in (3, 4):
            res = ingest.witness(synth.expected_dataset(None, 10_000, witness=True, n=n))
            assert res.w_exact == Fraction(-1, 2)
            assert res.fidelity == 1

    def test_white_noise(self):
        res = ingest.witness(synth.expected_dataset(None, 8000, visibility=0.0, witness=True, n=3))
        assert res.fidelity_exact == Fraction(1, 8)
        assert res.w_exact == Fraction(3, 8)

    @pytest.mark.parametrize("vis", [0.3, 0.9])
    def test_noisy_fidelity_oracle(self, vis):
        # <G|rho|G> = V + (1 - V)/2^n for the white-noise mixture
        n = 4
        res = ingest.witness(synth.expected_dataset(None, 10**6, visibility=vis, witness=True, n=n))
        assert res.fidelity == pytest.approx(vis + (1 - vis) / 2**n, abs=5e-5)

    def test_fidelity_plus_witness(self):
        ds = synth.sample_dataset(None, 3000, seed=3, visibility=0.8, witness=True, n=3)
        res = ingest.witness(ds)
        assert res.fidelity_exact + res.w_exact == Fraction(1, 2)
        assert res.fidelity_sigma == res.w_sigma > 0

    def test_published_relation(self):
        assert ingest.fidelity_from_witness("-0.417") == Fraction("0.917")
        assert ingest.fidelity_from_witness(-0.398) == Fraction("0.898")

    def test_missing_setting(self):
        ds = synth.expected_dataset(None, 1000, witness=True, n=3)
        trimmed = ingest.CountsDataset(3, tuple(r for r in ds.settings if r.label != "M1"))
        with pytest.raises(MissingSettingError, match="M_1"):
            ingest.witness(trimmed)

    def test_sigma_shrinks_with_counts(self):
        small = ingest.witness(synth.sample_dataset(None, 500, seed=1, visibility=0.9, witness=True, n=3))
        large = ingest.witness(synth.sample_dataset(None, 50_000, seed=1, visibility=0.9, witness=True, n=3))
        assert large.w_sigma < small.w_sigma


def test_largest_remainder_sums():
    probs = np.array([0.2, 0.3, 0.5])
    assert synth.largest_remainder(probs, 7).sum() == 7


def test_match_quoted_rounds_to_quotes():
    ds = synth.match_quoted(validate(3, 2, 2), measured.PROBABILITIES[(3, 2, 2)])
    assert json.loads(json.dumps(ds.to_document()))["n"] == 3
