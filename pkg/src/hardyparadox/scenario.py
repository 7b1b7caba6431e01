"""Scenario algebra for the generalized ``[n; ka, kb]`` Hardy paradox.

A scenario fixes ``n`` parties, the size ``ka`` of every subset measured
with ``b`` (all others ``a``) and the size ``kb`` of every subset measured
with ``b-bar``. The paradox demands all of those strings vanish, which
classically forces the all-``a`` success probability to zero.
"""

from __future__ import annotations

import enum
import unicodedata
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Union

from .errors import InvalidScenarioError, WeightError

Weight = Union[int, float, str, Fraction]


class Symbol(enum.Enum):
    A = "a"
    A_BAR = "ā"
    B = "b"
    B_BAR = "b̄"

    @property
    def basis(self) -> str:
        return "a" if self in (Symbol.A, Symbol.A_BAR) else "b"

    @property
    def barred(self) -> bool:
        return self in (Symbol.A_BAR, Symbol.B_BAR)

    @property
    def ascii(self) -> str:
        return self.basis + ("-" if self.barred else "")

    @classmethod
    def parse(cls, token: str) -> Symbol:
        try:
            return _TOKENS[token]
        except KeyError:
            raise ValueError(f"unknown projector symbol {token!r}") from None


_TOKENS = {
    "a": Symbol.A, "ā": Symbol.A_BAR, "a-": Symbol.A_BAR, "A": Symbol.A_BAR,
    "b": Symbol.B, "b̄": Symbol.B_BAR, "b-": Symbol.B_BAR, "B": Symbol.B_BAR,
}


@dataclass(frozen=True)
class ProjectorString:
    """One projector symbol per qubit, qubit 1 first."""

    symbols: tuple[Symbol, ...]

    def __post_init__(self):
        syms = tuple(self.symbols)
        if not syms:
            raise ValueError("projector string must be nonempty")
        if not all(isinstance(s, Symbol) for s in syms):
            raise TypeError("projector string entries must be Symbol members")
        object.__setattr__(self, "symbols", syms)

    def __lt__(self, other):
        return self.key() < other.key()

    def key(self) -> str:
        return self.ascii()

    @classmethod
    def parse(cls, text: str) -> ProjectorString:
        """Parse ``"a b- a a"`` (ASCII), ``"a b̄ a a"`` or compact ``"abBa"`` forms."""
        tokens = text.split()
        if len(tokens) == 1 and len(text.strip()) > 1 and "-" not in text:
            tokens = _split_compact(text.strip())
        return cls(tuple(Symbol.parse(t) for t in tokens))

    @property
    def n(self) -> int:
        return len(self.symbols)

    def __len__(self):
        return len(self.symbols)

    def __iter__(self) -> Iterator[Symbol]:
        return iter(self.symbols)

    def bases(self) -> str:
        """The measurement setting, e.g. ``"abb"``; barring only selects the port."""
        return "".join(s.basis for s in self.symbols)

    def pattern(self) -> str:
        """Detector pattern selected by this string: 1 for unbarred, 0 for barred."""
        return "".join("0" if s.barred else "1" for s in self.symbols)

    def render(self) -> str:
        return " ".join(s.value for s in self.symbols)

    def ascii(self) -> str:
        return " ".join(s.ascii for s in self.symbols)

    def subscripted(self) -> str:
        return "".join(f"{s.value}{k}" for k, s in enumerate(self.symbols, start=1))

    def __str__(self):
        return self.render()


def _split_compact(text: str) -> list[str]:
    out: list[str] = []
    for ch in text:
        if ch == "̄" and out:
            out[-1] += ch
        else:
            out.append(ch)
    return out


def _as_fraction(w: Weight, name: str) -> Fraction:
    try:
        value = Fraction(str(w)) if isinstance(w, float) else Fraction(w)
    except (TypeError, ValueError, ZeroDivisionError):
        raise WeightError(f"weight {name}={w!r} is not a number") from None
    if value <= 0:
        raise WeightError(f"weight {name} must be positive, got {value}")
    return value


@dataclass(frozen=True)
class Scenario:
    n: int
    ka: int
    kb: int
    x: Fraction = Fraction(1)
    y: Fraction = Fraction(1)

    def __post_init__(self):
        for name in ("n", "ka", "kb"):
            if not isinstance(getattr(self, name), int) or isinstance(getattr(self, name), bool):
                raise InvalidScenarioError(f"{name} must be an integer")
        n, ka, kb = self.n, self.ka, self.kb
        if ka < 2:
            raise InvalidScenarioError(f"need 2 <= |alpha|, got |alpha| = {ka}")
        if ka > n:
            raise InvalidScenarioError(f"need |alpha| <= n, got |alpha| = {ka} > n = {n}")
        if kb < 1:
            raise InvalidScenarioError(f"need 1 <= |beta|, got |beta| = {kb}")
        if kb > ka:
            raise InvalidScenarioError(f"need |beta| <= |alpha|, got {kb} > {ka}")
        if ka + kb > n + 1:
            raise InvalidScenarioError(
                f"need |alpha| + |beta| <= n + 1, got {ka} + {kb} = {ka + kb} > {n + 1}"
            )
        object.__setattr__(self, "x", _as_fraction(self.x, "x"))
        object.__setattr__(self, "y", _as_fraction(self.y, "y"))

    def label(self) -> str:
        return f"[{self.n};{self.ka},{self.kb}]"

    def weights_label(self) -> str:
        return f"({self.x},{self.y})"

    def __str__(self):
        return f"{self.label()}{self.weights_label()}"

    def rescaled(self, c: Weight) -> Scenario:
        c = _as_fraction(c, "c")
        return Scenario(self.n, self.ka, self.kb, self.x * c, self.y * c)


def validate(n: int, ka: int, kb: int, x: Weight = 1, y: Weight = 1) -> Scenario:
    return Scenario(n, ka, kb, x, y)


def enumerate_scenarios(max_n: int, min_n: int = 2) -> list[Scenario]:
    """All valid ``(n, ka, kb)`` with unit weights, ordered by n, ka, kb."""
    out = []
    for n in range(min_n, max_n + 1):
        for ka in range(2, n + 1):
            for kb in range(1, min(ka, n + 1 - ka) + 1):
                out.append(Scenario(n, ka, kb))
    return out


def _marked(n: int, subset: Iterable[int], mark: Symbol) -> ProjectorString:
    chosen = set(subset)
    return ProjectorString(tuple(mark if k in chosen else Symbol.A for k in range(n)))


def alpha_strings(s: Scenario) -> list[ProjectorString]:
    """``b`` on every ka-subset, ``a`` elsewhere, lexicographic subset order."""
    return [_marked(s.n, c, Symbol.B) for c in combinations(range(s.n), s.ka)]


def beta_strings(s: Scenario) -> list[ProjectorString]:
    return [_marked(s.n, c, Symbol.B_BAR) for c in combinations(range(s.n), s.kb)]


def constraint_strings(s: Scenario) -> list[ProjectorString]:
    return alpha_strings(s) + beta_strings(s)


def constraint_count(s: Scenario) -> int:
    return comb(s.n, s.ka) + comb(s.n, s.kb)


def success_string(s: Scenario) -> ProjectorString:
    return ProjectorString((Symbol.A,) * s.n)


def display_width(text: str) -> int:
    """Terminal columns, ignoring combining marks such as the bar in ``b̄``."""
    return sum(1 for ch in text if not unicodedata.combining(ch))
