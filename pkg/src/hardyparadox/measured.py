"""Transcribed results of the 3- and 4-photon GHZ experiment.

Probabilities are quoted to three decimals with one-standard-deviation
errors from Poissonian counting. The single bare ``0`` in the [4;4,1] data
has no quoted deviation and is kept as ``(0.0, 0.0)``.
"""

from __future__ import annotations

from fractions import Fraction

from .inequality import ProbabilityTable
from .scenario import Scenario

# (n, ka, kb) -> {projector string: (probability, sigma)}
PROBABILITIES: dict[tuple[int, int, int], dict[str, tuple[float, float]]] = {
    (3, 3, 1): {
        "b b b": (0.019, 0.007),
        "b- a a": (0.008, 0.005),
        "a b- a": (0.032, 0.009),
        "a a b-": (0.017, 0.007),
        "a a a": (0.132, 0.016),
    },
    (3, 2, 2): {
        "a b b": (0.016, 0.006),
        "a b- b-": (0.024, 0.005),
        "b a b": (0.007, 0.004),
        "b- a b-": (0.020, 0.007),
        "b b a": (0.014, 0.006),
        "b- b- a": (0.028, 0.009),
        "a a a": (0.259, 0.022),
    },
    (4, 4, 1): {
        "b b b b": (0.005, 0.003),
        "b- a a a": (0.002, 0.002),
        "a b- a a": (0.0, 0.0),
        "a a b- a": (0.007, 0.004),
        "a a a b-": (0.005, 0.003),
        "a a a a": (0.093, 0.012),
    },
    (4, 2, 2): {
        "a a b b": (0.008, 0.003),
        "a b a b": (0.004, 0.002),
        "a b b a": (0.006, 0.003),
        "b a b a": (0.007, 0.003),
        "b a a b": (0.005, 0.002),
        "b b a a": (0.007, 0.003),
        "a a b- b-": (0.011, 0.004),
        "a b- a b-": (0.010, 0.003),
        "a b- b- a": (0.012, 0.004),
        "b- a b- a": (0.009, 0.003),
        "b- a a b-": (0.010, 0.003),
        "b- b- a a": (0.006, 0.003),
        "a a a a": (0.127, 0.012),
    },
}

# reported inequality values at x = y = 1: (value, sigma)
I_VALUES: dict[tuple[int, int, int], tuple[float, float]] = {
    (3, 3, 1): (0.055, 0.022),
    (3, 2, 2): (0.150, 0.027),
    (4, 4, 1): (0.074, 0.013),
    (4, 2, 2): (0.159, 0.025),
}

# ideal success probabilities p(a...a) for the solved settings
SUCCESS: dict[tuple[int, int, int], Fraction] = {
    (3, 3, 1): Fraction(1, 8),
    (3, 2, 2): Fraction(1, 4),
    (4, 4, 1): Fraction(3, 32),
    (4, 2, 2): Fraction(1, 8),
}

# half-wave plate angles in degrees (a, b) as quoted; QWP is 45 deg throughout
HWP_DEGREES: dict[tuple[int, int, int], tuple[float, float]] = {
    (3, 3, 1): (30.0, 7.5),
    (3, 2, 2): (22.5, 0.0),
    (4, 4, 1): (26.2, 11.25),
    (4, 2, 2): (22.5, 0.0),
}

# entanglement witness and GHZ fidelity, keyed by photon number: (value, sigma)
WITNESS: dict[int, tuple[str, float]] = {3: ("-0.417", 0.009), 4: ("-0.398", 0.008)}
FIDELITY: dict[int, tuple[str, float]] = {3: ("0.917", 0.009), 4: ("0.898", 0.008)}

SCENARIOS = tuple(PROBABILITIES)


def table(key: tuple[int, int, int]) -> ProbabilityTable:
    return ProbabilityTable.from_values(PROBABILITIES[key], source="measured")


def scenario(key: tuple[int, int, int]) -> Scenario:
    return Scenario(*key)


def fixture_name(key: tuple[int, int, int]) -> str:
    return "measured_{}_{}_{}.json".format(*key)
