from fractions import Fraction
from math import comb

import numpy as np
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from hardyparadox import lhv
from hardyparadox.errors import DimensionError, SizeError
from hardyparadox.inequality import f_coefficient
from hardyparadox.lhv import DeterministicStrategy, strategy_probability
from hardyparadox.scenario import (
    ProjectorString,
    Scenario,
    alpha_strings,
    beta_strings,
    enumerate_scenarios,
    success_string,
    validate,
)

SCENARIOS4 = enumerate_scenarios(4)


def brute_value(s, d):
    """Oracle: inequality value by direct per-string evaluation."""
    f = f_coefficient(s)
    value = f * strategy_probability(d, success_string(s))
    value -= s.x * sum(strategy_probability(d, st) for st in alpha_strings(s))
    value -= s.y * sum(strategy_probability(d, st) for st in beta_strings(s))
    return value


def counting_value(s, d):
    """Oracle: count satisfied subsets S with Z <= S <= {b = 1} (or {b = 0}),
    Z being the parties whose a-outcome is 0."""
    a = [p[0] for p in d.outcomes]
    b = [p[1] for p in d.outcomes]
    zeros = {k for k in range(s.n) if a[k] == 0}
    ones_b = {k for k in range(s.n) if b[k] == 1}
    zeros_b = set(range(s.n)) - ones_b
    alpha = comb(len(ones_b - zeros), s.ka - len(zeros)) if zeros <= ones_b and len(zeros) <= s.ka else 0
    beta = comb(len(zeros_b - zeros), s.kb - len(zeros)) if zeros <= zeros_b and len(zeros) <= s.kb else 0
    return f_coefficient(s) * (not zeros) - s.x * alpha - s.y * beta


def test_strategy_index_round_trip():
    for i in range(64):
        assert DeterministicStrategy.from_index(i, 3).index == i


def test_strategy_probability_examples():
    all_ones = DeterministicStrategy(((1, 1),) * 3)
    assert strategy_probability(all_ones, ProjectorString.parse("b b b")) == 1
    assert strategy_probability(all_ones, ProjectorString.parse("b- a a")) == 0
    a1b0 = DeterministicStrategy(((1, 0),) * 3)
    assert strategy_probability(a1b0, ProjectorString.parse("a b- b-")) == 1


def test_strategy_probability_length_mismatch():
    with pytest.raises(DimensionError):
        strategy_probability(DeterministicStrategy(((1, 1),) * 2), ProjectorString.parse("a a a"))


@pytest.mark.parametrize("s", SCENARIOS4 + [validate(3, 2, 2, 2, 3), validate(4, 3, 1, "1/2", 5)], ids=str)
def test_vectorized_values_match_oracles(s):
    values = lhv.strategy_values(s)
    for i, v in enumerate(values):
        d = DeterministicStrategy.from_index(i, s.n)
        assert v == brute_value(s, d) == counting_value(s, d)


def test_classical_max_331():
    s = validate(3, 3, 1)
    bound = lhv.classical_max(s)
    assert bound.max_value == 0
    all_ones = DeterministicStrategy(((1, 1),) * 3)
    assert brute_value(s, all_ones) == 0
    assert all_ones.index in bound.argmax


def test_classical_max_examples():
    assert lhv.classical_max(validate(4, 2, 2)).max_value == 0
    bound = lhv.classical_max(validate(3, 2, 2, 2, 3))
    assert bound.max_value == 0
    assert 0 in bound.argmax  # the all-zero strategy


@pytest.mark.parametrize("s", enumerate_scenarios(5), ids=str)
def test_classical_max_zero_and_argmax_oracle(s):
    bound = lhv.classical_max(s)
    assert bound.max_value == 0
    if s.n <= 4:
        expected = [i for i in range(4**s.n) if counting_value(s, DeterministicStrategy.from_index(i, s.n)) == 0]
        assert list(bound.argmax) == expected


@given(st.sampled_from(enumerate_scenarios(4)), st.fractions(min_value=Fraction(1, 7), max_value=7))
def test_argmax_invariant_under_scaling(s, c):
    base, scaled = lhv.classical_max(s), lhv.classical_max(s.rescaled(c))
    assert scaled.argmax == base.argmax
    assert scaled.max_value == c * base.max_value


@given(
    st.sampled_from(enumerate_scenarios(4)),
    st.fractions(min_value=Fraction(1, 9), max_value=9),
    st.fractions(min_value=Fraction(1, 9), max_value=9),
)
def test_classical_max_zero_for_any_weights(s, x, y):
    weighted = Scenario(s.n, s.ka, s.kb, x, y)
    assert lhv.classical_max(weighted).max_value == 0
    assert lhv.logical_paradox_check(weighted).holds


def test_parallel_reduction_is_order_independent():
    s = validate(7, 4, 2)
    serial = lhv.classical_max(s, workers=1)
    threaded = lhv.classical_max(s, workers=4)
    assert serial == threaded
    assert serial.max_value == 0


def test_enumeration_cap():
    with pytest.raises(SizeError):
        lhv.classical_max(validate(11, 11, 1))
    with pytest.raises(SizeError):
        lhv.facet_rank(validate(5, 3, 1))


@pytest.mark.parametrize("key", [(3, 2, 2), (4, 4, 1), (2, 2, 1)])
def test_logical_paradox_examples(key):
    chk = lhv.logical_paradox_check(validate(*key))
    assert chk.holds and chk.witness is None


def test_logical_paradox_reports_witness_without_beta_conditions(monkeypatch):
    monkeypatch.setattr(lhv, "beta_strings", lambda s: [])
    chk = lhv.logical_paradox_check(validate(3, 3, 1))
    assert not chk.holds
    # a = 1 everywhere gives success; b = 0 on some party avoids "b b b"
    assert all(a == 1 for a, _ in chk.witness.outcomes)
    assert any(b == 0 for _, b in chk.witness.outcomes)


@pytest.mark.parametrize("s", enumerate_scenarios(5), ids=str)
def test_success_strategies_pay_at_least_f(s):
    chk = lhv.logical_paradox_check(s)
    assert chk.holds
    assert chk.min_weighted_violation == f_coefficient(s)
    assert chk.success_strategies == 2**s.n  # a fixed to 1, b free


def test_behavior_vectors_are_deterministic():
    n = 3
    for i in range(4**n):
        vec = lhv.behavior_vector(DeterministicStrategy.from_index(i, n)).reshape(2**n, 2**n)
        assert set(np.unique(vec)) <= {0, 1}
        assert (vec.sum(axis=1) == 1).all()


def test_coefficients_reproduce_values():
    for s in SCENARIOS4:
        coef = lhv.inequality_coefficients(s)
        for i in range(0, 4**s.n, 7):
            d = DeterministicStrategy.from_index(i, s.n)
            vec = lhv.behavior_vector(d)
            assert sum(c * int(v) for c, v in zip(coef, vec)) == brute_value(s, d)


@given(st.lists(st.lists(st.integers(-3, 3), min_size=5, max_size=5), min_size=1, max_size=7))
def test_exact_rank_matches_sympy(rows):
    assert lhv.exact_rank(rows) == sympy.Matrix(rows).rank()


def test_exact_rank_structured():
    m = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
    assert lhv.exact_rank(m) == 2
    assert lhv.exact_rank([[0, 0], [0, 0]]) == 0
    assert lhv.exact_rank([]) == 0


def test_polytope_dimension_n3():
    rep = lhv.facet_rank(validate(3, 3, 1))
    assert rep.polytope_dim == 3**3 - 1
    verts = lhv.vertex_matrix(3)
    assert sympy.Matrix((verts[1:] - verts[0]).tolist()).rank() == 26


@pytest.mark.parametrize("key", [(3, 3, 1), (3, 2, 2)])
def test_facets_n3(key):
    rep = lhv.facet_rank(validate(*key))
    assert rep.is_facet
    assert rep.saturating_dim == 25


def test_facet_saturating_set_agrees_with_bound():
    s = validate(3, 2, 2)
    assert lhv.facet_rank(s).saturating_count == lhv.classical_max(s).saturating_count


def test_thread_count_env(monkeypatch):
    monkeypatch.setenv(lhv.THREADS_ENV, "3")
    assert lhv.thread_count() == 3
    monkeypatch.setenv(lhv.THREADS_ENV, "0")
    with pytest.raises(ValueError):
        lhv.thread_count()


def test_huge_weight_denominators_stay_exact():
    assert lhv.classical_max(Scenario(3, 2, 2, Fraction(41941711, 5662296), Fraction(3))).max_value == 0
    c = Fraction(17812652084431, 1979183564937) ** 2
    bound = lhv.classical_max(Scenario(3, 2, 2).rescaled(c))
    assert bound.max_value == 0
    assert bound.argmax == lhv.classical_max(Scenario(3, 2, 2)).argmax
