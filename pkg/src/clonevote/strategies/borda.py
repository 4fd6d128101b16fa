"""Borda: cloning the preferred candidate, and the clone orders that hurt it most."""

from __future__ import annotations

from fractions import Fraction
from math import ceil, floor

from ..cloning import ONE, ZERO_PLUS, CloningVector, OrderingAssignment
from ..election import is_pareto_undominated, pairwise_matrix
from ..errors import InvalidSize, Unsupported
from ..rules import Borda, scores
from .report import (
    INF,
    AllOrderings,
    AnalysisReport,
    Strategy,
    Verdict,
    Witness,
    already_winner,
    derived_value,
    not_manipulable,
)


def borda_0plus_strategy(e, c) -> AnalysisReport:
    """Clone c enough times, with every voter ordering the clones the same way,
    that the top clone overtakes each higher-scoring rival."""
    c = e.index(c)
    rule = Borda
    done = already_winner(e, rule, c)
    if done:
        return done
    if not is_pareto_undominated(e, c):
        return not_manipulable(e, rule, c, "Pareto undominated")
    sc = scores(e, rule)
    W = pairwise_matrix(e)
    derived = {}
    k = 0
    for a in range(e.m):
        if sc[a] > sc[c]:
            gap, wins = int(sc[a] - sc[c]), int(W[c, a])
            derived[f"s[{e.label(a)}]"] = gap
            derived[f"n[{e.label(a)}]"] = wins
            k = max(k, ceil(gap / wins))
    derived["extra_clones"] = k
    derived["clones"] = k + 1
    counts = [1] * e.m
    counts[c] = k + 1
    vector = CloningVector(tuple(counts))
    strategy = Strategy(vector, ZERO_PLUS, Witness(OrderingAssignment.identity(e.n, vector)), "stack clones of c")
    return AnalysisReport(rule, c, Verdict.MANIPULABLE, e, derived, strategy, optimal=True)


def _ratio(num, den):
    return Fraction(num, den)


def _ceil(x):
    return x if x == INF else ceil(x)


def _floor(x):
    return x if x == INF else floor(x)


def borda_clone_c_analysis(e, c) -> AnalysisReport:
    """Decide whether cloning only c can succeed under every clone ordering."""
    c = e.index(c)
    rule = Borda
    done = already_winner(e, rule, c)
    if done:
        return done
    sc = scores(e, rule)
    W = pairwise_matrix(e)
    n = e.n
    above, below = [], []
    derived = {}
    for a in range(e.m):
        if a == c:
            continue
        gap = abs(int(sc[a] - sc[c]))
        if sc[a] > sc[c]:
            margin = int(W[c, a] - W[a, c])
            above.append((gap, margin))
        else:
            margin = int(W[a, c] - W[c, a])
            below.append((gap, margin))
        derived[f"s[{e.label(a)}]"] = gap
        derived[f"n[{e.label(a)}]"] = margin

    def r_plus(slack):
        if any(m <= 0 for _, m in above):
            return INF
        return max(_ratio(2 * g + slack, m) for g, m in above)

    def r_minus(slack):
        vals = [_ratio(2 * g + slack, m) for g, m in below if m > 0]
        return min(vals) if vals else INF

    rp, rm = r_plus(0), r_minus(0)
    derived["r_plus"] = derived_value(rp)
    derived["r_minus"] = derived_value(rm)
    holds = rp != INF and _ceil(rp) <= _floor(rm)
    if holds:
        # the lower bound on the best clone's score holds for any number of voters
        k = 1 + _ceil(rp)
        counts = [1] * e.m
        counts[c] = k
        derived["clones"] = k
        vector = CloningVector(tuple(counts))
        strategy = Strategy(vector, ONE, AllOrderings(), "clone c only")
        return AnalysisReport(rule, c, Verdict.MANIPULABLE, e, derived, strategy)
    if n % 2 == 0:
        reason = "r_plus finite" if rp == INF else "ceil(r_plus) <= floor(r_minus)"
        return not_manipulable(e, rule, c, reason, derived)
    hp, hm = r_plus(-1), r_minus(1)
    derived["r_hat_plus"] = derived_value(hp)
    derived["r_hat_minus"] = derived_value(hm)
    if _ceil(hp) > _floor(hm):
        rep = AnalysisReport(rule, c, Verdict.NECESSARY_CONDITION_FAILS, e, derived)
        rep.violated = "ceil(r_hat_plus) <= floor(r_hat_minus)"
        return rep
    rep = AnalysisReport(rule, c, Verdict.INCONCLUSIVE, e, derived)
    rep.note = "the necessary condition for an odd number of voters holds but is not known to suffice"
    return rep


def _odd_block(k):
    """Three special voters' orders for an odd number of clones (0-based)."""
    odd_desc = list(range(k - 1, -1, -2))  # clones k, k-2, ..., 1 in 1-based terms
    even_desc = list(range(k - 2, -1, -2))  # clones k-1, k-3, ..., 2
    return [tuple(odd_desc + even_desc), tuple(even_desc + odd_desc), tuple(range(k))]


def borda_adversarial_ordering(n: int, k: int) -> list[tuple[int, ...]]:
    """Per-voter clone orders (best-first, 0-based) that spread Borda points
    as evenly as possible over k clones of one candidate.

    Every clone gains at most ceil(n(k-1)/2) points from its siblings; with
    an even number of voters every clone gains exactly n(k-1)/2.
    """
    if n < 1 or k < 1:
        raise InvalidSize("need at least one voter and one clone")
    fwd, rev = tuple(range(k)), tuple(range(k - 1, -1, -1))
    if k == 1:
        return [fwd] * n
    if n % 2 == 0:
        return [fwd] * (n // 2) + [rev] * (n // 2)
    if n < 3:
        raise Unsupported("the balanced construction needs at least three voters when n is odd")
    if k % 2 == 1:
        orders = _odd_block(k)
        for _ in range((n - 3) // 2):
            orders += [rev, fwd]
        return orders
    base = borda_adversarial_ordering(n, k - 1)
    last = k - 1
    top = (n - 1) // 2
    return [(last,) + o if i < top else o + (last,) for i, o in enumerate(base)]
