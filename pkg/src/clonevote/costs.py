"""Cloning costs, budgets, and the budgeted decision procedure.

A cost table row lists the price of the 2nd, 3rd, ... t-th copy of a
candidate; copies beyond t cost the same as the t-th.  Producing the first
copy (keeping the candidate) is free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .cloning import CloningVector, SuccessMode
from .election import Election
from .rules import BORDA, COPELAND, MAXIMIN, PLURALITY, RUNOFF, VETO, Rule, winners

INF = math.inf


@dataclass(frozen=True)
class CostFunction:
    """``kind`` is "zero", "unit" or "general"; general tables are indexed
    ``table[j][s - 1]`` for the s-th copy of candidate j, with column 0 zero."""

    kind: str
    table: tuple = ()

    def __post_init__(self):
        if self.kind not in ("zero", "unit", "general"):
            raise ValueError(f"unknown cost kind {self.kind!r}")
        if self.kind == "general":
            rows = tuple(tuple(_price(x) for x in row) for row in self.table)
            if not rows or len(rows[0]) < 2 or any(len(r) != len(rows[0]) for r in rows):
                raise ValueError("a general cost table needs equal rows of length t >= 2")
            if any(r[0] != 0 for r in rows):
                raise ValueError("keeping a candidate (the first copy) must cost 0")
            object.__setattr__(self, "table", rows)

    @classmethod
    def general(cls, rows) -> "CostFunction":
        """``rows[j]`` lists the prices of copies 2..t of candidate j."""
        return cls("general", tuple((0,) + tuple(r) for r in rows))

    @property
    def t(self) -> Optional[int]:
        return len(self.table[0]) if self.kind == "general" else None

    def copy_cost(self, j: int, s: int):
        """Price of the s-th copy of candidate j (s >= 2)."""
        if self.kind == "zero":
            return 0
        if self.kind == "unit":
            return 1
        row = self.table[j]
        return row[min(s, len(row)) - 1]

    def family_cost(self, j: int, k: int):
        return sum((self.copy_cost(j, s) for s in range(2, k + 1)), 0)

    def __str__(self):
        return {"zero": "zero cost", "unit": "unit cost"}.get(self.kind, f"general cost (t={self.t})")


ZeroCost = CostFunction("zero")
UnitCost = CostFunction("unit")


def _price(x):
    if isinstance(x, str):
        x = x.strip().lower()
        if x in ("inf", "infinity", "+inf"):
            return INF
        x = int(x)
    if x == INF:
        return INF
    if int(x) != x or x < 0:
        raise ValueError(f"copy prices must be nonnegative integers or inf, got {x!r}")
    return int(x)


def parse_budget(text) -> float | int:
    if isinstance(text, (int, float)):
        value = text
    else:
        t = str(text).strip().lower()
        value = INF if t in ("inf", "infinity", "+inf") else int(t)
    if value != INF and (int(value) != value or value < 0):
        raise ValueError(f"budget must be a nonnegative integer or inf, got {text!r}")
    return value if value == INF else int(value)


def cost_of(p: CostFunction, vector) -> float | int:
    counts = tuple(vector)
    if p.kind == "general" and len(counts) != len(p.table):
        raise ValueError(f"cost table has {len(p.table)} rows for a vector of length {len(counts)}")
    return sum((p.family_cost(j, k) for j, k in enumerate(counts)), 0)


def min_cost_with_extra(p: CostFunction, m: int, extra: int):
    """Cheapest cost of any vector over m candidates with exactly ``extra`` extra copies."""
    best = [0] + [INF] * extra
    for j in range(m):
        nxt = [INF] * (extra + 1)
        for have in range(extra + 1):
            if best[have] == INF:
                continue
            for add in range(extra - have + 1):
                price = best[have] + p.family_cost(j, add + 1)
                if price < nxt[have + add]:
                    nxt[have + add] = price
        best = nxt
    return best[extra]


@dataclass
class Decision:
    answer: str  # "Yes", "No", "Inconclusive" or "NotApplicable"
    strategy: object = None
    cost: object = None
    reason: str = ""
    source: str = ""  # "fast path" or "oracle"
    report: object = field(default=None, repr=False)

    def __bool__(self):
        return self.answer == "Yes"


def _by_budget(strategy, p, budget, report, over="No"):
    cost = cost_of(p, strategy.vector)
    if cost <= budget and cost != INF:
        return Decision("Yes", strategy, cost, "strategy fits the budget", "fast path", report)
    return Decision(over, None, cost, f"cheapest strategy costs {cost}", "fast path", report)


def decide_q_cloning(e: Election, rule: Rule, c, mode: SuccessMode, p: CostFunction, budget, caps=None) -> Decision:
    """Is there a cloning of cost at most ``budget`` that succeeds in ``mode``?

    Rules and modes with a characterization answer directly from the
    analyzer's strategy; everything else falls back to the bounded oracle.
    """
    from . import strategies as st
    from .oracle import SearchCaps

    c = e.index(c)
    budget = parse_budget(budget)
    caps = caps or SearchCaps()
    if c in winners(e, rule):
        return Decision("NotApplicable", reason="the preferred candidate already wins")
    name, kind = rule.name, mode.kind
    rep = None
    if name == PLURALITY:
        rep = st.analyze(e, rule, c, mode, samples=0)
        if not rep.manipulable:
            return Decision("No", reason=rep.violated, source="fast path", report=rep)
        return _by_budget(rep.strategy, p, budget, rep, "No" if kind == "zero_plus" else "Inconclusive")
    if name == VETO:
        rep = st.veto_strategy(e, c, mode if kind != "threshold" else SuccessMode("one"))
        return _by_budget(rep.strategy, p, budget, rep, "No" if kind != "threshold" else "Inconclusive")
    if name == MAXIMIN and kind != "threshold":
        rep = st.maximin_strategy(e, c, mode)
        if not rep.manipulable:
            return Decision("No", reason=rep.violated, source="fast path", report=rep)
        return _by_budget(rep.strategy, p, budget, rep)
    if name == RUNOFF:
        rep = st.runoff_strategy(e, c, mode, samples=0)
        if not rep.manipulable:
            return Decision("No", reason=rep.violated, source="fast path", report=rep)
        if kind == "threshold":
            return _by_budget(rep.strategy, p, budget, rep, "Inconclusive")
        best = min((rep.strategy,) + rep.alternatives, key=lambda s: cost_of(p, s.vector))
        return _by_budget(best, p, budget, rep)
    if name == BORDA and kind == "zero_plus":
        rep = st.borda_0plus_strategy(e, c)
        if not rep.manipulable:
            return Decision("No", reason=rep.violated, source="fast path", report=rep)
        if p.kind != "general":
            return _by_budget(rep.strategy, p, budget, rep)
    if name == COPELAND:
        rep = st.copeland_strategy(e, c, mode)
        if rep.verdict is st.Verdict.NOT_MANIPULABLE:
            return Decision("No", reason=rep.violated, source="fast path", report=rep)
        if rep.manipulable and p.kind == "zero":
            return Decision("Yes", rep.strategy, 0, "zero-cost cloning", "fast path", rep)
    if kind == "threshold":
        pre = rep if rep is not None else st.analyze(e, rule, c, mode, samples=0)
        if pre.verdict is st.Verdict.NOT_MANIPULABLE:
            return Decision("No", reason=pre.violated, source="fast path", report=pre)
        if pre.manipulable:
            return _by_budget(pre.strategy, p, budget, pre, "Inconclusive")
        return Decision("Inconclusive", reason="no exact procedure for threshold modes here", report=pre)
    return _oracle_decision(e, rule, c, mode, p, budget, caps, rep)


def _oracle_decision(e, rule, c, mode, p, budget, caps, rep):
    from .oracle import brute_force_search

    res = brute_force_search(e, rule, c, mode, p, budget, caps)
    if res.status == "yes":
        return Decision("Yes", res, res.cost, "found by exhaustive search", "oracle", rep)
    if res.status == "no":
        beyond = min_cost_with_extra(p, e.m, caps.max_extra_clones + 1)
        if beyond == INF or beyond > budget:
            return Decision("No", reason="every affordable cloning was checked", source="oracle", report=rep)
        return Decision(
            "Inconclusive", reason="affordable clonings exist beyond the search caps", source="oracle", report=rep
        )
    return Decision("Inconclusive", reason="search caps exceeded", source="oracle", report=rep)
