"""Verdicts, strategies and their certificates."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from ..cloning import (
    ONE,
    ZERO_PLUS,
    CloningVector,
    OrderingAssignment,
    SuccessMode,
    apply_cloning,
    check_success_exact,
    estimate_success_probability,
)
from ..election import Election
from ..errors import SearchSpaceTooLarge
from ..rules import Rule, winners

INF = math.inf


class Verdict(enum.Enum):
    ALREADY_WINNER = "AlreadyWinner"
    MANIPULABLE = "Manipulable"
    NOT_MANIPULABLE = "NotManipulable"
    NECESSARY_CONDITION_FAILS = "NecessaryConditionFails"
    INCONCLUSIVE = "Inconclusive"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Witness:
    """One explicit ordering assignment under which a clone of c wins."""

    assignment: OrderingAssignment
    kind = "witness"


@dataclass(frozen=True)
class AllOrderings:
    """Success under every ordering assignment, guaranteed by a counting argument."""

    kind = "all_orderings"


@dataclass(frozen=True)
class SampledEvidence:
    seed: int
    samples: int
    successes: int
    kind = "sampled"

    @property
    def estimate(self):
        return Fraction(self.successes, self.samples) if self.samples else None


Certificate = Union[Witness, AllOrderings, SampledEvidence]


@dataclass(frozen=True)
class Strategy:
    vector: CloningVector
    mode: SuccessMode
    certificate: Certificate
    label: str = ""

    @property
    def extra(self) -> int:
        return self.vector.extra


@dataclass
class AnalysisReport:
    rule: Rule
    preferred: int
    verdict: Verdict
    election: Election = field(repr=False)
    derived: dict = field(default_factory=dict)
    strategy: Optional[Strategy] = None
    alternatives: tuple = ()
    violated: str = ""
    note: str = ""
    # the strategy uses as few extra clones as any successful cloning in its mode
    optimal: bool = False

    @property
    def manipulable(self) -> bool:
        return self.verdict is Verdict.MANIPULABLE

    def summary(self) -> str:
        e = self.election
        head = f"{self.rule}: preferred {e.label(self.preferred)} -> {self.verdict}"
        if self.strategy is not None:
            head += f" with {self.strategy.vector.describe(e)} ({self.strategy.certificate.kind})"
        if self.violated:
            head += f" [violated: {self.violated}]"
        return head


def already_winner(e: Election, rule: Rule, c: int) -> Optional[AnalysisReport]:
    if c in winners(e, rule):
        return AnalysisReport(rule, c, Verdict.ALREADY_WINNER, e, note="the preferred candidate already wins")
    return None


def not_manipulable(e, rule, c, violated, derived=None, note="") -> AnalysisReport:
    return AnalysisReport(rule, c, Verdict.NOT_MANIPULABLE, e, dict(derived or {}), violated=violated, note=note)


def witness_wins(e: Election, rule: Rule, c: int, strategy: Strategy) -> bool:
    """Directly evaluate a Witness certificate."""
    expanded = apply_cloning(e, strategy.vector, strategy.certificate.assignment)
    return expanded.family_won(rule, c)


def verify_strategy(e: Election, rule: Rule, c: int, strategy: Strategy, limit=10**6, samples=1000, seed=0):
    """Check a strategy's certificate; returns True, False, or None when too large to check."""
    cert = strategy.certificate
    if isinstance(cert, Witness):
        return witness_wins(e, rule, c, strategy)
    if isinstance(cert, AllOrderings):
        try:
            return check_success_exact(e, rule, c, strategy.vector, ONE, limit=limit).success
        except SearchSpaceTooLarge:
            return None
    est = estimate_success_probability(e, rule, c, strategy.vector, samples, seed)
    q = strategy.mode.q if strategy.mode.kind == "threshold" else Fraction(1)
    return est.estimate >= q


def derived_value(x):
    """Normalise numbers for the derived map: ints stay ints, ratios become Fractions."""
    if isinstance(x, float) and math.isinf(x):
        return x
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


__all__ = [
    "INF",
    "Verdict",
    "Witness",
    "AllOrderings",
    "SampledEvidence",
    "Strategy",
    "AnalysisReport",
    "already_winner",
    "not_manipulable",
    "verify_strategy",
    "witness_wins",
    "ZERO_PLUS",
    "ONE",
]
