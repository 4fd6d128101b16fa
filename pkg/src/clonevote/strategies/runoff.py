"""Plurality with runoff: get two clones of c, or c and a beatable rival,
into the final."""

from __future__ import annotations

from fractions import Fraction
from math import ceil, comb

from ..cloning import CloningVector, SuccessMode
from ..election import pairwise_matrix
from ..rules import PluralityRunoff, plurality_scores
from .plurality import _sample, split_tops
from .report import AnalysisReport, Strategy, Verdict, Witness, already_winner, not_manipulable


def _option(e, c, sc, k, extra_counts, label, group_size=None, keep=()):
    counts = [1] * e.m
    for j, v in extra_counts.items():
        counts[j] = v
    for a in range(e.m):
        if a != c and a not in keep and sc[a] > k:
            counts[a] = ceil(int(sc[a]) / k)
    sizes = {a: k for a in range(e.m)}
    if group_size:
        sizes.update(group_size)
    witness = split_tops(e, counts, sizes)
    vector = CloningVector(tuple(counts))
    return Strategy(vector, SuccessMode("zero_plus"), Witness(witness), label)


def runoff_strategy(e, c, mode=SuccessMode("zero_plus"), samples=1000, seed=0) -> AnalysisReport:
    c = e.index(c)
    rule = PluralityRunoff
    done = already_winner(e, rule, c)
    if done:
        return done
    sc = plurality_scores(e)
    W = pairwise_matrix(e)
    s = int(sc[c])
    derived = {f"plurality[{e.label(a)}]": int(sc[a]) for a in range(e.m)}
    if mode.kind == "one":
        return not_manipulable(e, rule, c, "identical clone orders reproduce the original outcome", derived)
    # rivals with first places that c beats or ties head to head
    beatable = [w for w in range(e.m) if w != c and sc[w] >= 1 and W[c, w] >= W[w, c]]
    derived["beatable"] = ",".join(e.label(w) for w in beatable)
    if s == 0:
        return not_manipulable(e, rule, c, "ranked first by at least one voter", derived)
    if s == 1 and not beatable:
        return not_manipulable(
            e, rule, c, "a single first place and no beatable rival with first places", derived
        )
    if mode.kind == "threshold":
        return _threshold(e, c, sc, mode, derived, samples, seed)
    options = []
    if s >= 2:
        k = s // 2
        derived["k_split"] = k
        opt = _option(e, c, sc, k, {c: 2}, "split the preferred candidate", {c: s - k})
        options.append(opt)
    for w in beatable:
        k = min(s, int(sc[w]))
        options.append(_option(e, c, sc, k, {}, f"meet {e.label(w)} in the final", keep=(w,)))
    best = min(options, key=lambda st: st.vector.extra)
    rest = tuple(o for o in options if o is not best)
    derived["extra"] = best.vector.extra
    return AnalysisReport(rule, c, Verdict.MANIPULABLE, e, derived, best, rest, optimal=True)


def _threshold(e, c, sc, mode, derived, samples, seed):
    """Clone every candidate with two or more first places so that, with
    probability at least q, nobody keeps more than one first place."""
    q = mode.q
    factor = ceil(Fraction(e.m) / (1 - q))
    counts = [1] * e.m
    for a in range(e.m):
        if sc[a] >= 2:
            counts[a] = comb(int(sc[a]), 2) * factor
            derived[f"k[{e.label(a)}]"] = counts[a]
    vector = CloningVector(tuple(counts))
    evidence = _sample(e, PluralityRunoff, c, vector, samples, seed)
    strategy = Strategy(vector, mode, evidence, "spread all first places at random")
    return AnalysisReport(PluralityRunoff, c, Verdict.MANIPULABLE, e, derived, strategy)
