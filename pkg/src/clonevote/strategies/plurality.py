"""Plurality: split the votes of every stronger rival across enough clones."""

from __future__ import annotations

from fractions import Fraction
from math import ceil, comb

from ..cloning import CloningVector, OrderingAssignment, SuccessMode, estimate_success_probability
from ..errors import InvalidThreshold
from ..rules import Plurality, plurality_scores
from .report import (
    AnalysisReport,
    SampledEvidence,
    Strategy,
    Verdict,
    Witness,
    already_winner,
    not_manipulable,
)


def split_tops(e, counts, group_size, clones=None):
    """Assignment where the voters topping each cloned candidate are cut, in
    voter order, into consecutive groups of ``group_size``; group g ranks
    clone g of that candidate first and the remaining clones in order.

    ``group_size`` may be a dict per candidate.  ``clones`` optionally lists
    which families to split (default: every family with more than one clone).
    """
    if clones is None:
        clones = [j for j, k in enumerate(counts) if k > 1]
    rows = [[tuple(range(k)) for k in counts] for _ in range(e.n)]
    for a in clones:
        size = group_size[a] if isinstance(group_size, dict) else group_size
        voters = [i for i, v in enumerate(e.votes) if v[0] == a]
        for pos, i in enumerate(voters):
            g = pos // size
            rows[i][a] = (g,) + tuple(s for s in range(counts[a]) if s != g)
    return OrderingAssignment(tuple(tuple(r) for r in rows))


def plurality_0plus(e, c) -> AnalysisReport:
    c = e.index(c)
    rule = Plurality
    done = already_winner(e, rule, c)
    if done:
        return done
    sc = plurality_scores(e)
    s = int(sc[c])
    derived = {f"plurality[{e.label(a)}]": int(sc[a]) for a in range(e.m)}
    if s == 0:
        return not_manipulable(e, rule, c, "ranked first by at least one voter", derived)
    counts = [1] * e.m
    for a in range(e.m):
        if sc[a] > s:
            counts[a] = ceil(int(sc[a]) / s)
            derived[f"k[{e.label(a)}]"] = counts[a]
    vector = CloningVector(tuple(counts))
    witness = split_tops(e, counts, s)
    strategy = Strategy(vector, SuccessMode("zero_plus"), Witness(witness), "split rival votes")
    return AnalysisReport(rule, c, Verdict.MANIPULABLE, e, derived, strategy, optimal=True)


def plurality_q(e, c, q, samples=1000, seed=0) -> AnalysisReport:
    """Threshold mode: enough clones that, with probability at least q, no
    rival clone collects two first places.  Mode One is never possible."""
    c = e.index(c)
    rule = Plurality
    q = Fraction(q)
    if not 0 < q <= 1:
        raise InvalidThreshold(f"threshold must lie in (0, 1], got {q}")
    done = already_winner(e, rule, c)
    if done:
        return done
    sc = plurality_scores(e)
    s = int(sc[c])
    derived = {f"plurality[{e.label(a)}]": int(sc[a]) for a in range(e.m)}
    if q == 1:
        return not_manipulable(
            e, rule, c, "identical clone orders keep every rival's top score", derived
        )
    if s == 0:
        return not_manipulable(e, rule, c, "ranked first by at least one voter", derived)
    factor = ceil(Fraction(e.m - 1) / (1 - q))
    counts = [1] * e.m
    for a in range(e.m):
        if sc[a] > s:
            counts[a] = comb(int(sc[a]), 2) * factor
            derived[f"k[{e.label(a)}]"] = counts[a]
    vector = CloningVector(tuple(counts))
    evidence = _sample(e, rule, c, vector, samples, seed)
    strategy = Strategy(vector, SuccessMode.threshold(q), evidence, "spread rival votes at random")
    return AnalysisReport(rule, c, Verdict.MANIPULABLE, e, derived, strategy)


def _sample(e, rule, c, vector, samples, seed):
    if samples <= 0:
        return SampledEvidence(seed, 0, 0)
    est = estimate_success_probability(e, rule, c, vector, samples, seed)
    return SampledEvidence(seed, samples, est.successes)
