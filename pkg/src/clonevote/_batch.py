"""Vectorized evaluation of many cloned elections at once.

A batch is described by clone positions ``pos[b, i, x]``: the 0-based place
of expanded candidate ``x`` in voter ``i``'s ballot for batch element ``b``.
The winner computations here mirror ``rules.winners`` and are cross-checked
against it in the test suite.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

import numpy as np

from .election import pairwise_matrix
from .rules import COPELAND, MAXIMIN, POSITIONAL, RUNOFF, position_weights

# keeps the (batch, voters, candidates, candidates) comparison tensor small
_TENSOR_BUDGET = 1 << 22


@lru_cache(maxsize=None)
def perm_table(k: int) -> np.ndarray:
    """All permutations of range(k) in lexicographic order, best-first rows."""
    t = np.array(list(permutations(range(k))), dtype=np.int64).reshape(-1, k)
    t.setflags(write=False)
    return t


@lru_cache(maxsize=None)
def inverse_table(k: int) -> np.ndarray:
    """Row p gives the within-block rank of each clone under permutation p."""
    t = np.argsort(perm_table(k), axis=1)
    t.setflags(write=False)
    return t


@lru_cache(maxsize=None)
def pair_table(k: int) -> np.ndarray:
    """``t[p, s, t]`` is 1 when permutation p puts clone s above clone t."""
    inv = inverse_table(k)
    t = (inv[:, :, None] < inv[:, None, :]).astype(np.int64)
    t.setflags(write=False)
    return t


def _ranks(k, a):
    """Within-block ranks from either ranks (B, n, k) or permutation indices (B, n)."""
    return inverse_table(k)[a] if a.ndim == 2 else a


class CloneLayout:
    """Static facts about an election cloned by a given vector."""

    def __init__(self, election, vector):
        self.election = election
        self.k = tuple(int(x) for x in vector)
        kk = np.array(self.k, dtype=np.int64)
        self.M = int(kk.sum())
        self.offsets = np.concatenate([[0], np.cumsum(kk)[:-1]]).astype(np.int64)
        self.family = np.repeat(np.arange(election.m), kk)
        self.cloned = [j for j in range(election.m) if self.k[j] >= 2]
        r = election.ranks
        # block start of family j in vote i: total size of the families ranked above it
        self.start = ((r[:, None, :] < r[:, :, None]) * kk[None, None, :]).sum(axis=2)
        W = pairwise_matrix(election)
        # counts between clones of different families never depend on clone orders
        self.cross = W[self.family][:, self.family]
        self.top = np.array([v[0] for v in election.votes], dtype=np.int64)

    def clone_slice(self, j):
        return slice(int(self.offsets[j]), int(self.offsets[j]) + self.k[j])

    def positions(self, inner: dict) -> np.ndarray:
        """Expanded positions from within-block ranks ``inner[j]`` of shape (B, n, k_j),
        or permutation indices of shape (B, n)."""
        n = self.election.n
        if inner:
            B = next(iter(inner.values())).shape[0]
        else:
            B = 1
        pos = np.broadcast_to(self.start[:, self.family], (B, n, self.M)).copy()
        for j, ranks in inner.items():
            pos[:, :, self.clone_slice(j)] += _ranks(self.k[j], ranks)
        return pos

    def batch_size(self, rule) -> int:
        n = self.election.n
        per = n * self.M if rule.name in POSITIONAL else self.M * self.M + n * max(self.k) ** 2
        return max(1, _TENSOR_BUDGET // max(1, per))


def _block(k, ranks):
    if ranks.ndim == 2:
        return pair_table(k)[ranks].sum(axis=1)
    return (ranks[:, :, :, None] < ranks[:, :, None, :]).sum(axis=1)


def batch_pairwise(layout: CloneLayout, inner: dict, B: int, family=None) -> np.ndarray:
    """``W[b, x, y]``: voters ranking clone x above clone y.

    With ``family`` only the rows of that family's clones are built.
    """
    if family is not None:
        sl = layout.clone_slice(family)
        W = np.broadcast_to(layout.cross[sl], (B, layout.k[family], layout.M)).copy()
        if family in inner:
            W[:, :, sl] = _block(layout.k[family], inner[family])
        return W
    W = np.broadcast_to(layout.cross, (B, layout.M, layout.M)).copy()
    for j, ranks in inner.items():
        sl = layout.clone_slice(j)
        W[:, sl, sl] = _block(layout.k[j], ranks)
    return W


def batch_first(layout: CloneLayout, inner: dict, B: int) -> np.ndarray:
    """First-place counts of every clone."""
    n = layout.election.n
    top_clone = np.broadcast_to(layout.offsets[layout.top], (B, n)).copy()
    for j, ranks in inner.items():
        voters = np.flatnonzero(layout.top == j)
        if not voters.size:
            continue
        if ranks.ndim == 2:
            top_clone[:, voters] += perm_table(layout.k[j])[ranks[:, voters], 0]
        else:
            top_clone[:, voters] += ranks[:, voters, :].argmin(axis=2)
    first = np.zeros((B, layout.M), dtype=np.int64)
    np.add.at(first, (np.repeat(np.arange(B), n), top_clone.ravel()), 1)
    return first


def layout_winners(layout: CloneLayout, rule, inner: dict, family=None) -> np.ndarray:
    """Winner masks computed without materializing full positions for pairwise rules.

    With ``family`` the runoff reports only that family's clones.
    """
    B = next(iter(inner.values())).shape[0] if inner else 1
    if rule.name in POSITIONAL:
        return batch_winners(rule, layout.positions(inner))
    if rule.name != RUNOFF:
        return winners_from_pairwise(rule, batch_pairwise(layout, inner, B), layout.election.n)
    W = batch_pairwise(layout, inner, B, family)
    rows = None if family is None else layout.clone_slice(family)
    return winners_from_pairwise(rule, W, layout.election.n, batch_first(layout, inner, B), rows)


def batch_winners(rule, pos: np.ndarray) -> np.ndarray:
    """Boolean winner mask of shape (B, M) for each election in the batch."""
    B, n, M = pos.shape
    if M == 1:
        return np.ones((B, 1), dtype=bool)
    if rule.name in POSITIONAL:
        w = position_weights(rule, M)
        sc = w[pos].sum(axis=1)
        return sc == sc.max(axis=1, keepdims=True)
    W = (pos[:, :, :, None] < pos[:, :, None, :]).sum(axis=1)
    first = (pos == 0).sum(axis=1) if rule.name == RUNOFF else None
    return winners_from_pairwise(rule, W, n, first)


def winners_from_pairwise(rule, W: np.ndarray, n: int, first=None, rows=None) -> np.ndarray:
    """Winner masks from pairwise counts; for the runoff, ``rows`` says which
    clones the rows of ``W`` belong to (all of them by default)."""
    B, _, M = W.shape
    if M == 1:
        return np.ones((B, 1), dtype=bool)
    if rule.name == MAXIMIN:
        sc = (W + np.eye(M, dtype=W.dtype) * (n + 1)).min(axis=2)
        return sc == sc.max(axis=1, keepdims=True)
    if rule.name == COPELAND:
        sc = np.sign(W - W.transpose(0, 2, 1)).sum(axis=2)
        return sc == sc.max(axis=1, keepdims=True)
    assert rule.name == RUNOFF
    rows = slice(None) if rows is None else rows
    srt = np.sort(first, axis=1)
    top, second = srt[:, -1:], srt[:, -2:-1]
    eligible = first >= second
    is_top = first == top
    # a finalist pair needs both members at least the runner-up score and one at the top
    el, it = eligible[:, rows], is_top[:, rows]
    pair_ok = el[:, :, None] & eligible[:, None, :] & (it[:, :, None] | is_top[:, None, :])
    pair_ok &= ~np.eye(M, dtype=bool)[rows][None]
    need = -(-n // 2)
    return (pair_ok & (W >= need)).any(axis=2)


def batch_success(layout: CloneLayout, rule, c: int, inner: dict) -> np.ndarray:
    sl = layout.clone_slice(c)
    if rule.name == RUNOFF:
        return layout_winners(layout, rule, inner, c).any(axis=1)
    return layout_winners(layout, rule, inner)[:, sl].any(axis=1)


def sample_inner(layout: CloneLayout, rng: np.random.Generator, count: int) -> dict:
    """Uniform independent clone orders for every voter and cloned family.

    Families are drawn in roster order; each draw shuffles ``count x n`` rows
    of ``0..k-1`` with the generator's Fisher-Yates ``permuted``.
    """
    n = layout.election.n
    inner = {}
    for j in layout.cloned:
        k = layout.k[j]
        base = np.broadcast_to(np.arange(k), (count, n, k))
        perms = rng.permuted(base, axis=2)
        inner[j] = np.argsort(perms, axis=2)
    return inner
