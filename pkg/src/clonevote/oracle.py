"""Brute-force ground truth for small instances, and the random-permutation
experiment behind the Maximin threshold question."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Optional

import numpy as np

from .cloning import CloningVector, ExactResult, SuccessMode, check_success_exact
from .costs import INF, CostFunction, cost_of, parse_budget
from .election import Election
from .errors import SearchSpaceTooLarge
from .rules import Rule, winners


@dataclass(frozen=True)
class SearchCaps:
    max_extra_clones: int = 4
    max_assignments: int = 10**6

    def __post_init__(self):
        if self.max_extra_clones < 0 or self.max_assignments < 1:
            raise ValueError("search caps must be positive")


@dataclass
class OracleResult:
    status: str  # "yes", "no", "cap_exceeded" or "not_applicable"
    vector: Optional[CloningVector] = None
    cost: object = None
    certificate: Optional[ExactResult] = None
    examined: int = 0
    skipped: list = field(default_factory=list)

    @property
    def minimal(self) -> bool:
        """A Yes is the cheapest cloning within caps unless a cheaper vector was skipped."""
        return self.status == "yes" and not self.skipped


def candidate_vectors(p: CostFunction, m: int, max_extra: int, budget):
    """Vectors with at most ``max_extra`` extra copies and finite cost within
    budget, ordered by (cost, extra copies, counts)."""
    out = []
    for extra in product(range(max_extra + 1), repeat=m):
        if sum(extra) > max_extra:
            continue
        counts = tuple(x + 1 for x in extra)
        cost = cost_of(p, counts)
        if cost == INF or cost > budget:
            continue
        out.append((cost, sum(extra), counts))
    out.sort()
    return out


def brute_force_search(
    e: Election, rule: Rule, c, mode: SuccessMode, p: CostFunction, budget=INF, caps: SearchCaps = SearchCaps()
) -> OracleResult:
    """Try every affordable cloning within caps, cheapest first, with an exact check each."""
    c = e.index(c)
    budget = parse_budget(budget)
    if mode.kind == "threshold":
        raise ValueError("the oracle decides the 0+ and 1 modes only")
    if c in winners(e, rule):
        return OracleResult("not_applicable")
    skipped = []
    examined = 0
    for cost, _, counts in candidate_vectors(p, e.m, caps.max_extra_clones, budget):
        vector = CloningVector(counts)
        try:
            res = check_success_exact(
                e, rule, c, vector, mode, limit=caps.max_assignments, reduce_symmetry=True
            )
        except SearchSpaceTooLarge:
            skipped.append(vector)
            continue
        examined += 1
        if res.success:
            return OracleResult("yes", vector, cost, res, examined, skipped)
    return OracleResult("cap_exceeded" if skipped else "no", examined=examined, skipped=skipped)


PNK_BLOCK = 4096


def _pnk_block(n, k, seed, block, count):
    ss = np.random.SeedSequence([int(seed) & (2**64 - 1), block])
    rng = np.random.Generator(np.random.Philox(ss))
    perms = rng.permuted(np.broadcast_to(np.arange(k), (PNK_BLOCK, n, k)), axis=2)[:count]
    pos = np.argsort(perms, axis=2)
    # ahead[b, i, j]: permutations of trial b in which j comes before i
    ahead = (pos[:, :, None, :] < pos[:, :, :, None]).sum(axis=1)
    ahead[:, np.arange(k), np.arange(k)] = -1
    return int((ahead >= n - 1).any(axis=2).all(axis=1).sum())


def _pnk_blocks(n, k, seed, blocks, trials):
    return sum(_pnk_block(n, k, seed, b, min(PNK_BLOCK, trials - b * PNK_BLOCK)) for b in blocks)


@dataclass(frozen=True)
class PnkResult:
    n: int
    k: int
    trials: int
    successes: int
    seed: int

    @property
    def estimate(self) -> Fraction:
        return Fraction(self.successes, self.trials)


def pnk_experiment(n: int, k: int, trials: int, seed: int = 0, workers: int = 1) -> PnkResult:
    """Draw n uniform permutations of k items per trial; a trial succeeds when
    every item has another item ahead of it in at least n - 1 of them.

    Trials are drawn in blocks of PNK_BLOCK from Philox streams keyed by
    (seed, block), so results do not depend on ``workers``.
    """
    if n < 1 or k < 1 or trials < 1:
        raise ValueError("n, k and trials must all be positive")
    nblocks = math.ceil(trials / PNK_BLOCK)
    if workers <= 1 or nblocks == 1:
        hits = _pnk_blocks(n, k, seed, range(nblocks), trials)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_pnk_blocks, n, k, seed, range(a, nblocks, workers), trials) for a in range(workers)
            ]
            hits = sum(f.result() for f in futures)
    return PnkResult(n, k, trials, hits, seed)
