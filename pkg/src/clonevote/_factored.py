"""Exact success checks that treat each clone family independently.

For every rule except the runoff, a clone's score depends only on how the
voters order the clones of its own family: its position block (or its
comparisons with other families) is fixed by the source vote.  So instead of
enumerating all joint assignments we enumerate, family by family, the set of
reachable states, adding one voter at a time.

A state is a vector of small counts: per-clone positional points, or for
pairwise rules the number of voters ranking clone s above clone t for every
ordered pair.  The work cap applies to an a priori bound on the number of
states a family can reach, so oversized checks are refused before any work
is done.  Pairwise counts are clamped at the largest value that can
still change the decision, which keeps the state sets small: Copeland only
needs to know whether a majority was reached, and a rival's Maximin score
only matters up to one more than anything the preferred candidate can score.
"""

from __future__ import annotations

import math

import numpy as np

from ._batch import CloneLayout, perm_table
from .election import pairwise_matrix
from .errors import SearchSpaceTooLarge
from .rules import COPELAND, MAXIMIN, POSITIONAL, position_weights

FACTORABLE = POSITIONAL + (MAXIMIN, COPELAND)
_CHUNK = 1 << 21


def _cross_scores(layout, rule):
    """Score contribution every clone of family j gets from other families."""
    e = layout.election
    W = pairwise_matrix(e)
    out = []
    for j in range(e.m):
        others = [y for y in range(e.m) if y != j]
        if rule.name == MAXIMIN:
            out.append(min((int(W[j, y]) for y in others), default=None))
        else:
            out.append(sum(layout.k[y] * int(np.sign(W[j, y] - W[y, j])) for y in others))
    return out


class FamilyModel:
    """Reachable states of one family and the clone scores they imply."""

    def __init__(self, layout: CloneLayout, rule, j: int, c: int, cross=None):
        e = layout.election
        self.j = j
        self.k = k = layout.k[j]
        self.n = n = e.n
        self.rule = rule
        inv = np.argsort(perm_table(k), axis=1)  # clone -> rank within the block
        if rule.name in POSITIONAL:
            w = position_weights(rule, layout.M)
            self.contrib = [w[layout.start[i, j] + inv] for i in range(n)]
            self.cap = n * int(w.max())
        else:
            self.pairs = [(s, t) for s in range(k) for t in range(k) if s != t]
            row = np.array([[int(r[s] < r[t]) for s, t in self.pairs] for r in inv], dtype=np.int64)
            self.contrib = [row.reshape(len(inv), len(self.pairs))] * n
            self.cross = cross[j]
            if rule.name == COPELAND:
                self.cap = n // 2 + 1
            else:
                cap = n if self.cross is None else min(n, self.cross)
                if j != c and cross[c] is not None:
                    cap = min(cap, cross[c] + 1)
                self.cap = cap
        self.width = self.contrib[0].shape[1]
        self.base = self.cap + 1
        if self.base ** self.width >= 2**62:
            raise SearchSpaceTooLarge(self.base**self.width, 2**62)
        self.radix = np.array([self.base**d for d in range(self.width)], dtype=np.int64)

    def encode(self, states):
        return states @ self.radix

    def decode(self, codes):
        out = np.empty((len(codes), self.width), dtype=np.int64)
        rest = codes.copy()
        for d in range(self.width):
            out[:, d] = rest % self.base
            rest //= self.base
        return out

    def clone_scores(self, states):
        if self.rule.name in POSITIONAL:
            return states
        k, S = self.k, len(states)
        if self.rule.name == MAXIMIN:
            top = self.n if self.cross is None else self.cross
            sc = np.full((S, k), min(top, self.cap), dtype=np.int64)
            for d, (s, _) in enumerate(self.pairs):
                sc[:, s] = np.minimum(sc[:, s], states[:, d])
            return sc
        sc = np.full((S, k), self.cross, dtype=np.int64)
        index = {p: d for d, p in enumerate(self.pairs)}
        for s in range(k):
            for t in range(s + 1, k):
                win = states[:, index[(s, t)]] >= self.cap
                loss = states[:, index[(t, s)]] >= self.cap
                sg = win.astype(np.int64) - loss.astype(np.int64)
                sc[:, s] += sg
                sc[:, t] -= sg
        return sc

    def bound(self) -> int:
        """A priori upper bound on the number of reachable final states."""
        k, n = self.k, self.n
        nominal = math.factorial(k) ** n
        if self.rule.name in POSITIONAL:
            # per-clone point ranges; the clone totals are fixed, so k - 1 of them decide the rest
            spans = [int(c.max(axis=0)[0] - c.min(axis=0)[0]) for c in self.contrib]
            per_clone = sum(spans) + 1
            return min(nominal, per_clone ** max(k - 1, 0))
        voters = math.comb(math.factorial(k) + n - 1, n)  # voters are interchangeable here
        values = (n + 1) ** (k * (k - 1) // 2)
        return min(nominal, voters, values)

    def _step(self, states, contrib, keep):
        """All states reachable from ``states`` with one more voter."""
        T = len(contrib)
        rows = max(1, _CHUNK // max(1, T * self.width))
        found_codes, found_first = [], []
        for a in range(0, len(states), rows):
            cand = np.minimum(states[a : a + rows, None, :] + contrib[None, :, :], self.cap)
            codes = self.encode(cand.reshape(cand.shape[0] * T, self.width))
            u, first = np.unique(codes, return_index=True)
            found_codes.append(u)
            found_first.append(first + a * T)
        if len(found_codes) == 1:
            return found_codes[0], found_first[0]
        u, at = np.unique(np.concatenate(found_codes), return_index=True)
        return u, np.concatenate(found_first)[at]

    def run(self, keep=False):
        """Final reachable state codes; with ``keep`` also per-layer parent links."""
        states = np.zeros((1, self.width), dtype=np.int64)
        links = []
        work = 0
        codes = self.encode(states)
        for i in range(self.n):
            contrib = self.contrib[i]
            codes, first = self._step(states, contrib, keep)
            work += len(codes)
            if keep:
                T = len(contrib)
                links.append((codes, first // T, first % T))
            states = self.decode(codes)
        return codes, links, work

    def trace(self, target):
        """Per-voter permutation indices that reach state code ``target``."""
        _, links, _ = self.run(keep=True)
        choice = [0] * self.n
        idx = int(np.searchsorted(links[-1][0], target))
        for i in range(self.n - 1, -1, -1):
            _, parent, perm = links[i]
            choice[i] = int(perm[idx])
            idx = int(parent[idx])
        return choice


def factored_check(layout: CloneLayout, rule, c: int, one: bool, limit: int):
    """Decide success over all assignments at once.

    Returns ``(success, table_or_None, work)``; the table lists permutation
    indices per voter and family: a witness in 0+ mode, a counterexample in
    mode One.
    """
    e = layout.election
    cross = _cross_scores(layout, rule) if rule.name not in POSITIONAL else None
    models = [FamilyModel(layout, rule, j, c, cross) for j in range(e.m)]
    worst = max(mdl.bound() for mdl in models)
    if worst > limit:
        raise SearchSpaceTooLarge(worst, limit)
    finals = []
    work = 0
    for mdl in models:
        codes, _, w = mdl.run()
        work += w
        best = mdl.clone_scores(mdl.decode(codes)).max(axis=1)
        finals.append((codes, best))
    c_codes, c_best = finals[c]
    rivals = [j for j in range(e.m) if j != c]
    pick = {}
    if not one:
        floor = max((int(finals[j][1].min()) for j in rivals), default=None)
        top = int(c_best.max())
        if floor is not None and top < floor:
            return False, None, work
        success = True
        pick[c] = int(c_codes[np.argmax(c_best == top)])
        for j in rivals:
            codes, best = finals[j]
            pick[j] = int(codes[np.argmax(best == best.min())])
    else:
        low = int(c_best.min())
        over = [j for j in rivals if int(finals[j][1].max()) > low]
        if not over:
            return True, None, work
        success = False
        pick[c] = int(c_codes[np.argmax(c_best == low)])
        codes, best = finals[over[0]]
        pick[over[0]] = int(codes[np.argmax(best == best.max())])
        for j in rivals:
            pick.setdefault(j, int(finals[j][0][0]))
    chosen = {j: models[j].trace(pick[j]) for j in layout.cloned}
    table = [[chosen[j][i] if j in chosen else 0 for j in range(e.m)] for i in range(e.n)]
    return success, table, work
