"""Copeland: covering decides odd electorates; even ones need an integer system
over the candidates tied with c."""

from __future__ import annotations

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, linprog, milp

from ..cloning import ONE, ZERO_PLUS, CloningVector, OrderingAssignment, estimate_success_probability
from ..rules import Copeland, scores
from ..tournament import covers, majority_graph, udt_partition
from .report import (
    AllOrderings,
    AnalysisReport,
    Strategy,
    Verdict,
    Witness,
    already_winner,
    not_manipulable,
    witness_wins,
)


def _coverer(g, c):
    for u in range(g.m):
        if u != c and covers(g, u, c):
            return u
    return None


def copeland_strategy(e, c, mode=ZERO_PLUS, bound=None, spot_samples=0, seed=0) -> AnalysisReport:
    c = e.index(c)
    rule = Copeland
    done = already_winner(e, rule, c)
    if done:
        return done
    g = majority_graph(e)
    part = udt_partition(g, c)
    sc = scores(e, rule)
    derived = {f"copeland[{e.label(a)}]": int(sc[a]) for a in range(e.m)}
    u = _coverer(g, c)
    if u is not None:
        derived["covered_by"] = e.label(u)
        return not_manipulable(e, rule, c, "uncovered", derived)
    if e.n % 2 == 1:
        return _odd(e, c, part, mode, derived, spot_samples, seed)
    return _even(e, c, part, sc, mode, derived, bound)


def _odd(e, c, part, mode, derived, spot_samples, seed):
    m = e.m
    counts = [1] * m
    counts[c] = 2 * m + 1
    for d in part.down:
        counts[d] = 4 * m + 1
    vector = CloningVector(tuple(counts))
    if spot_samples:
        est = estimate_success_probability(e, Copeland, c, vector, spot_samples, seed)
        derived["spot_check_samples"] = spot_samples
        derived["spot_check_successes"] = est.successes
    strategy = Strategy(vector, ONE if mode.kind != "threshold" else mode, AllOrderings(), "swamp the dominated side")
    return AnalysisReport(Copeland, c, Verdict.MANIPULABLE, e, derived, strategy)


def tied_system(g, c, part, sc):
    """Rows of the integer system: for each strong rival z, the coefficient of
    q(y) is +1 when y beats z and -1 when z beats y; the right side is s_z."""
    ys = sorted(part.tied)
    zs = sorted(z for z in part.up if all(g.beats_pair(z, d) for d in part.down))
    A = np.zeros((len(zs), len(ys)), dtype=np.int64)
    for r, z in enumerate(zs):
        for col, y in enumerate(ys):
            if g.beats_pair(y, z):
                A[r, col] = 1
            elif g.beats_pair(z, y):
                A[r, col] = -1
    rhs = np.array([int(sc[z] - sc[c]) for z in zs], dtype=np.int64)
    return ys, zs, A, rhs


def solve_tied_system(A, rhs, bound):
    """Smallest nonnegative integer solution of A q >= rhs with entries <= bound.

    Returns ("infeasible", None) when even the rational relaxation without an
    upper bound has no solution, ("exhausted", None) when only the bounded
    integer search fails, and ("feasible", q) otherwise.
    """
    rows, cols = A.shape
    if rows == 0:
        return "feasible", np.zeros(cols, dtype=np.int64)
    if cols == 0:
        return ("feasible", np.zeros(0, dtype=np.int64)) if (rhs <= 0).all() else ("infeasible", None)
    relax = linprog(np.zeros(cols), A_ub=-A, b_ub=-rhs, bounds=[(0, None)] * cols, method="highs")
    if relax.status == 2:
        return "infeasible", None
    res = milp(
        np.ones(cols),
        constraints=LinearConstraint(A, lb=rhs, ub=np.inf),
        integrality=np.ones(cols),
        bounds=Bounds(0, bound),
    )
    if res.status != 0 or res.x is None:
        return "exhausted", None
    q = np.rint(res.x).astype(np.int64)
    if not (A @ q >= rhs).all():
        return "exhausted", None
    return "feasible", q


def _even(e, c, part, sc, mode, derived, bound):
    g = majority_graph(e)
    ys, zs, A, rhs = tied_system(g, c, part, sc)
    for z, s in zip(zs, rhs):
        derived[f"s[{e.label(z)}]"] = int(s)
    if bound is None:
        bound = max(1, int(rhs.max(initial=0)) * max(1, len(ys)))
    derived["search_bound"] = bound
    status, q = solve_tied_system(A, rhs, bound)
    if status == "infeasible":
        return not_manipulable(e, Copeland, c, "integer system over tied candidates", derived)
    if mode.kind != "zero_plus":
        rep = AnalysisReport(Copeland, c, Verdict.INCONCLUSIVE, e, derived)
        rep.note = "only the 0+ mode is characterized for an even number of voters"
        return rep
    if status == "exhausted":
        rep = AnalysisReport(Copeland, c, Verdict.INCONCLUSIVE, e, derived)
        rep.note = f"no integer solution with entries up to {bound}"
        return rep
    for y, val in zip(ys, q):
        derived[f"q[{e.label(y)}]"] = int(val)
    counts = [1] * e.m
    for y, val in zip(ys, q):
        counts[y] = int(val) + 1
    # c's top clone then outgrows the tied side, and the dominated side lifts it past the rest
    base = e.m + int(q.sum())
    lift_c = 2 * base
    lift_d = 2 * (base + lift_c) + 1
    counts[c] = lift_c + 1
    for d in part.down:
        counts[d] = lift_d + 1
    vector = CloningVector(tuple(counts))
    strategy = Strategy(vector, ZERO_PLUS, Witness(OrderingAssignment.identity(e.n, vector)), "balance the tied side")
    rep = AnalysisReport(Copeland, c, Verdict.MANIPULABLE, e, derived, strategy)
    if not witness_wins(e, Copeland, c, strategy):
        rep.verdict = Verdict.INCONCLUSIVE
        rep.strategy = None
        rep.note = "the constructed cloning did not verify"
    return rep
