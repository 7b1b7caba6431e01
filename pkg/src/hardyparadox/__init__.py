"""Generalized Hardy paradox toolkit for n-qubit GHZ states."""

from .errors import HardyError
from .inequality import IValue, evaluate, f_coefficient, quantum_value
from .scenario import ProjectorString, Scenario, Symbol, validate
from .settings import MeasurementSettings, solve, verify

__all__ = [
    "HardyError",
    "IValue",
    "MeasurementSettings",
    "ProjectorString",
    "Scenario",
    "Symbol",
    "evaluate",
    "f_coefficient",
    "quantum_value",
    "solve",
    "validate",
    "verify",
]

__version__ = "0.1.0"
