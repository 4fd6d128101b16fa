"""Winner determination for the seven rules handled by the package.

All rules use the non-unique winner model: ``winners`` returns every
candidate with the maximum score, with no tie-breaking.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

import numpy as np

from .election import Election, pairwise_matrix
from .errors import InvalidSize, NotScoreBased

PLURALITY = "plurality"
VETO = "veto"
BORDA = "borda"
KAPPROVAL = "kapproval"
RUNOFF = "runoff"
MAXIMIN = "maximin"
COPELAND = "copeland"

RULE_NAMES = (PLURALITY, VETO, BORDA, KAPPROVAL, RUNOFF, MAXIMIN, COPELAND)
POSITIONAL = (PLURALITY, VETO, BORDA, KAPPROVAL)
PAIRWISE = (MAXIMIN, COPELAND)


@dataclass(frozen=True)
class Rule:
    name: str
    k: Optional[int] = None

    def __post_init__(self):
        if self.name not in RULE_NAMES:
            raise ValueError(f"unknown rule {self.name!r}; expected one of {RULE_NAMES}")
        if self.name == KAPPROVAL:
            if self.k is None or int(self.k) < 1:
                raise InvalidSize("k-approval needs k >= 1")
            object.__setattr__(self, "k", int(self.k))
        elif self.k is not None:
            raise ValueError(f"rule {self.name} takes no parameter")

    @classmethod
    def parse(cls, text: str, k: Optional[int] = None) -> "Rule":
        name = text.strip().lower().replace("-", "").replace("_", "")
        aliases = {"pluralityrunoff": RUNOFF, "pluralitywithrunoff": RUNOFF, "approval": KAPPROVAL}
        name = aliases.get(name, name)
        if name == KAPPROVAL and k is None:
            raise InvalidSize("k-approval needs an explicit k")
        return cls(name, k if name == KAPPROVAL else None)

    @property
    def score_based(self) -> bool:
        return self.name != RUNOFF

    def __str__(self):
        return f"{self.k}-approval" if self.name == KAPPROVAL else self.name


Plurality = Rule(PLURALITY)
Veto = Rule(VETO)
Borda = Rule(BORDA)
PluralityRunoff = Rule(RUNOFF)
Maximin = Rule(MAXIMIN)
Copeland = Rule(COPELAND)


def KApproval(k: int) -> Rule:
    return Rule(KAPPROVAL, k)


def position_weights(rule: Rule, m: int) -> np.ndarray:
    """Points a voter gives to the candidate at each 0-based position."""
    pos = np.arange(m)
    if rule.name == PLURALITY:
        return (pos == 0).astype(np.int64)
    if rule.name == VETO:
        return (pos != m - 1).astype(np.int64)
    if rule.name == BORDA:
        return (m - 1 - pos).astype(np.int64)
    if rule.name == KAPPROVAL:
        return (pos < rule.k).astype(np.int64)
    raise NotScoreBased(f"{rule} is not a positional rule")


def scores(e: Election, rule: Rule) -> np.ndarray:
    """Integer score of every candidate; raises NotScoreBased for the runoff."""
    if rule.name == RUNOFF:
        raise NotScoreBased("plurality with runoff has no score table")
    if rule.name in POSITIONAL:
        w = position_weights(rule, e.m)
        return w[e.ranks].sum(axis=0)
    wins = pairwise_matrix(e)
    if rule.name == MAXIMIN:
        if e.m == 1:
            return np.array([e.n], dtype=np.int64)
        masked = wins + np.diag(np.full(e.m, e.n + 1))
        return masked.min(axis=1)
    # copeland: +1 per pairwise win, -1 per loss
    return np.sign(wins - wins.T).sum(axis=1)


def plurality_scores(e: Election) -> np.ndarray:
    return scores(e, Plurality)


def achievable_pairs(first_round: np.ndarray):
    """Finalist pairs reachable under some tie-breaking of the first round."""
    m = len(first_round)
    out = []
    for x, y in combinations(range(m), 2):
        floor = min(first_round[x], first_round[y])
        if all(first_round[z] <= floor for z in range(m) if z != x and z != y):
            out.append((x, y))
    return out


def runoff_winners(e: Election) -> frozenset:
    """Winners of plurality with runoff under parallel-universe tie-breaking."""
    if e.m == 1:
        return frozenset({0})
    first = plurality_scores(e)
    wins = pairwise_matrix(e)
    need = -(-e.n // 2)
    out = set()
    for x, y in achievable_pairs(first):
        if wins[x, y] >= need:
            out.add(x)
        if wins[y, x] >= need:
            out.add(y)
    return frozenset(out)


def winners(e: Election, rule: Rule) -> frozenset:
    if rule.name == RUNOFF:
        return runoff_winners(e)
    s = scores(e, rule)
    return frozenset(int(j) for j in np.flatnonzero(s == s.max()))


def is_winner(e: Election, rule: Rule, c) -> bool:
    return e.index(c) in winners(e, rule)
