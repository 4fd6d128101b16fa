"""Maximin: break each strong rival into a cycle of clones."""

from __future__ import annotations

from math import ceil

from ..cloning import CloningVector, OrderingAssignment, SuccessMode
from ..rules import Maximin, scores
from .report import AnalysisReport, Strategy, Verdict, Witness, already_winner, not_manipulable


def cyclic_orders(n, size):
    """Voters are cut into consecutive groups of ``size``; the j-th voter of a
    group ranks the clones starting from clone j and wrapping around, so no
    clone beats its predecessor in more than one vote per group."""
    return [tuple((i % size + r) % size for r in range(size)) for i in range(n)]


def maximin_strategy(e, c, mode=SuccessMode("zero_plus")) -> AnalysisReport:
    c = e.index(c)
    rule = Maximin
    done = already_winner(e, rule, c)
    if done:
        return done
    sc = scores(e, rule)
    s = int(sc[c])
    derived = {f"maximin[{e.label(a)}]": int(sc[a]) for a in range(e.m)}
    if mode.kind == "one":
        return not_manipulable(e, rule, c, "identical clone orders reproduce the original outcome", derived)
    if s == 0:
        return not_manipulable(e, rule, c, "Pareto undominated", derived)
    if mode.kind == "threshold":
        rep = AnalysisReport(rule, c, Verdict.INCONCLUSIVE, e, derived)
        rep.note = "no clone count is known to reach a fixed success probability"
        return rep
    size = ceil(e.n / s)
    derived["clones_per_rival"] = size
    counts = [1] * e.m
    for a in range(e.m):
        if sc[a] > s:
            counts[a] = size
    orders = cyclic_orders(e.n, size)
    rows = tuple(
        tuple(orders[i] if counts[j] > 1 else (0,) for j in range(e.m)) for i in range(e.n)
    )
    vector = CloningVector(tuple(counts))
    strategy = Strategy(vector, mode, Witness(OrderingAssignment(rows)), "cycle each strong rival")
    return AnalysisReport(rule, c, Verdict.MANIPULABLE, e, derived, strategy, optimal=True)
