"""Rule-by-rule analyses of manipulation by cloning, plus a dispatcher."""

from __future__ import annotations

from ..cloning import ZERO_PLUS, SuccessMode
from ..rules import BORDA, COPELAND, KAPPROVAL, MAXIMIN, PLURALITY, RUNOFF, VETO, Rule
from .borda import borda_0plus_strategy, borda_adversarial_ordering, borda_clone_c_analysis
from .copeland import copeland_strategy, solve_tied_system, tied_system
from .kapproval import kapproval_saturate
from .maximin import cyclic_orders, maximin_strategy
from .plurality import plurality_0plus, plurality_q
from .report import (
    AllOrderings,
    AnalysisReport,
    SampledEvidence,
    Strategy,
    Verdict,
    Witness,
    already_winner,
    not_manipulable,
    verify_strategy,
)
from .runoff import runoff_strategy
from .veto import veto_strategy


def analyze(e, rule: Rule, c, mode: SuccessMode = ZERO_PLUS, only_preferred=False, samples=1000, seed=0):
    """Run the analysis matching ``rule`` and ``mode``.

    ``only_preferred`` restricts Borda to cloning c alone.  Sampled
    certificates use ``samples`` trials from ``seed``.
    """
    c = e.index(c)
    name = rule.name
    if name == PLURALITY:
        if mode.kind == "zero_plus":
            return plurality_0plus(e, c)
        q = 1 if mode.kind == "one" else mode.q
        return plurality_q(e, c, q, samples=samples, seed=seed)
    if name == VETO:
        return veto_strategy(e, c, mode)
    if name == RUNOFF:
        return runoff_strategy(e, c, mode, samples=samples, seed=seed)
    if name == MAXIMIN:
        return maximin_strategy(e, c, mode)
    if name == BORDA:
        return _borda(e, c, mode, only_preferred)
    if name == KAPPROVAL:
        rep = kapproval_saturate(e, c, rule.k)
        if mode.kind != "zero_plus" and rep.verdict is Verdict.MANIPULABLE:
            rep = AnalysisReport(rule, c, Verdict.INCONCLUSIVE, e, rep.derived)
            rep.note = "flooding guarantees a win for one ordering only"
        return rep
    if name == COPELAND:
        return copeland_strategy(e, c, mode, spot_samples=0, seed=seed)
    raise ValueError(f"no analysis for {rule}")


def _borda(e, c, mode, only_preferred):
    if only_preferred or mode.kind != "zero_plus":
        alone = borda_clone_c_analysis(e, c)
        if only_preferred or alone.verdict in (Verdict.MANIPULABLE, Verdict.ALREADY_WINNER):
            return alone
        base = borda_0plus_strategy(e, c)
        if base.verdict is Verdict.NOT_MANIPULABLE:
            return base
        rep = AnalysisReport(alone.rule, c, Verdict.INCONCLUSIVE, e, alone.derived)
        rep.note = "cloning c alone fails; cloning other candidates is not characterized"
        return rep
    return borda_0plus_strategy(e, c)


__all__ = [
    "analyze",
    "AllOrderings",
    "AnalysisReport",
    "SampledEvidence",
    "Strategy",
    "Verdict",
    "Witness",
    "already_winner",
    "not_manipulable",
    "verify_strategy",
    "plurality_0plus",
    "plurality_q",
    "veto_strategy",
    "runoff_strategy",
    "maximin_strategy",
    "borda_0plus_strategy",
    "borda_clone_c_analysis",
    "borda_adversarial_ordering",
    "kapproval_saturate",
    "copeland_strategy",
    "tied_system",
    "solve_tied_system",
    "cyclic_orders",
]
