"""Veto: only cloning the preferred candidate helps, and it always does."""

from __future__ import annotations

from ..cloning import ONE, ZERO_PLUS, CloningVector, OrderingAssignment
from ..rules import Veto, scores
from .report import AllOrderings, AnalysisReport, Strategy, Verdict, Witness, already_winner


def veto_strategy(e, c, mode=ZERO_PLUS) -> AnalysisReport:
    """0+: two clones ordered the same way by everyone leave the upper clone
    unvetoed.  One: enough clones that the vetoes against c cannot knock
    every clone below the current winning score."""
    c = e.index(c)
    rule = Veto
    done = already_winner(e, rule, c)
    if done:
        return done
    sc = scores(e, rule)
    n = e.n
    lead = int(sc.max())
    k = int(sc[c])
    derived = {"l": lead, "k": k}
    counts = [1] * e.m
    if mode.kind == "zero_plus":
        counts[c] = 2
        vector = CloningVector(tuple(counts))
        cert = Witness(OrderingAssignment.identity(n, vector))
        strategy = Strategy(vector, ZERO_PLUS, cert, "two clones of the preferred candidate")
        return AnalysisReport(rule, c, Verdict.MANIPULABLE, e, derived, strategy, optimal=True)
    if lead == n:
        counts[c] = n - k + 1
    else:
        lead_gap = n - lead
        vetoes = n - k
        r = vetoes // (lead_gap + 1)
        derived.update({"l_prime": lead_gap, "k_prime": vetoes, "r": r})
        counts[c] = r + 1
    derived["clones"] = counts[c]
    vector = CloningVector(tuple(counts))
    strategy = Strategy(vector, ONE if mode.kind == "one" else mode, AllOrderings(), "spread the vetoes")
    return AnalysisReport(rule, c, Verdict.MANIPULABLE, e, derived, strategy, optimal=mode.kind == "one")
