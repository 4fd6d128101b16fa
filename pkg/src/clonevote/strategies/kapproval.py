"""k-Approval: flood the top k positions with single-use clones."""

from __future__ import annotations

from ..cloning import ZERO_PLUS, CloningVector, OrderingAssignment
from ..rules import KApproval, scores
from .report import AnalysisReport, Strategy, Verdict, Witness, already_winner, not_manipulable


def kapproval_saturate(e, c, k: int) -> AnalysisReport:
    """Clone every other candidate k*n times and hand each clone at most one
    approval.  Works whenever c is ranked first by someone; this is a
    sufficient condition only."""
    c = e.index(c)
    rule = KApproval(k)
    done = already_winner(e, rule, c)
    if done:
        return done
    approvals = scores(e, rule)
    firsts = sum(1 for v in e.votes if v[0] == c)
    derived = {"approvals": int(approvals[c]), "first_places": firsts}
    if approvals[c] == 0:
        return not_manipulable(e, rule, c, "approved by at least one voter", derived)
    if firsts == 0:
        rep = AnalysisReport(rule, c, Verdict.INCONCLUSIVE, e, derived)
        rep.note = "c is never ranked first, so flooding cannot help and the exact question is hard"
        return rep
    size = k * e.n
    counts = [size] * e.m
    counts[c] = 1
    derived["clones_per_rival"] = size
    used = [0] * e.m
    rows = []
    for vote in e.votes:
        row = [tuple(range(x)) for x in counts]
        # the approved slots go to the first non-c family in this vote
        lead = vote[1] if vote[0] == c else vote[0]
        slots = k - 1 if vote[0] == c else k
        fresh = list(range(used[lead], used[lead] + slots))
        used[lead] += slots
        row[lead] = tuple(fresh) + tuple(s for s in range(size) if s not in set(fresh))
        rows.append(tuple(row))
    vector = CloningVector(tuple(counts))
    strategy = Strategy(vector, ZERO_PLUS, Witness(OrderingAssignment(tuple(rows))), "saturate the approved slots")
    return AnalysisReport(rule, c, Verdict.MANIPULABLE, e, derived, strategy)
