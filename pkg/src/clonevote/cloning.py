"""Cloning candidates: expanding elections, exact success checks and
Monte Carlo estimates of success probability.

An ordering assignment fixes, for every voter, how that voter ranks the
clones of each family.  Permutations are written best-first over 0-based
clone numbers, so ``(1, 2, 0)`` means ``x#2 > x#3 > x#1``.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional

import numpy as np

from . import _batch
from ._factored import FACTORABLE, factored_check
from .election import Election
from .errors import InvalidThreshold, MalformedAssignment, SearchSpaceTooLarge
from .rules import Rule, winners

DEFAULT_LIMIT = 10**6

# trials per independent random stream; part of the reproducibility contract
SAMPLE_BLOCK = 1024


@dataclass(frozen=True)
class CloningVector:
    """How many clones replace each candidate (1 means left alone)."""

    counts: tuple[int, ...]

    def __post_init__(self):
        counts = tuple(int(k) for k in self.counts)
        if any(k < 1 for k in counts):
            raise ValueError(f"clone counts must be at least 1, got {counts}")
        object.__setattr__(self, "counts", counts)

    @classmethod
    def ones(cls, m: int) -> "CloningVector":
        return cls((1,) * m)

    @classmethod
    def from_mapping(cls, e: Election, clones: Mapping) -> "CloningVector":
        counts = [1] * e.m
        for who, k in clones.items():
            counts[e.index(who)] = int(k)
        return cls(tuple(counts))

    @property
    def extra(self) -> int:
        return sum(k - 1 for k in self.counts)

    def __len__(self):
        return len(self.counts)

    def __iter__(self):
        return iter(self.counts)

    def __getitem__(self, j):
        return self.counts[j]

    def describe(self, e: Election) -> str:
        parts = [f"{e.label(j)}={k}" for j, k in enumerate(self.counts) if k > 1]
        return ",".join(parts) if parts else "(no clones)"


def _as_vector(e: Election, v) -> CloningVector:
    if not isinstance(v, CloningVector):
        v = CloningVector(tuple(v))
    if len(v) != e.m:
        raise MalformedAssignment(f"cloning vector has {len(v)} entries for {e.m} candidates")
    return v


@dataclass(frozen=True)
class OrderingAssignment:
    """``perms[i][j]`` is voter i's best-first order of the clones of family j.

    Families that are not cloned carry the trivial permutation ``(0,)``.
    """

    perms: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "perms", tuple(tuple(tuple(int(x) for x in p) for p in row) for row in self.perms)
        )

    @classmethod
    def identity(cls, n: int, vector) -> "OrderingAssignment":
        row = tuple(tuple(range(k)) for k in vector)
        return cls((row,) * n)

    @classmethod
    def uniform(cls, n: int, vector, per_family: Mapping) -> "OrderingAssignment":
        """Every voter uses the same order; ``per_family`` overrides identity."""
        row = tuple(tuple(per_family.get(j, range(k))) for j, k in enumerate(vector))
        return cls((row,) * n)

    def check(self, e: Election, vector) -> None:
        if len(self.perms) != e.n:
            raise MalformedAssignment(f"assignment covers {len(self.perms)} voters, election has {e.n}")
        for i, row in enumerate(self.perms):
            if len(row) != e.m:
                raise MalformedAssignment(f"voter {i}: {len(row)} families given, expected {e.m}")
            for j, p in enumerate(row):
                if sorted(p) != list(range(vector[j])):
                    raise MalformedAssignment(
                        f"voter {i}, candidate {e.label(j)}: {p} is not a permutation of {vector[j]} clones"
                    )

    def describe(self, e: Election, vector) -> list[str]:
        out = []
        for i, row in enumerate(self.perms):
            parts = [
                " > ".join(f"{e.label(j)}#{s + 1}" for s in p)
                for j, p in enumerate(row)
                if vector[j] > 1
            ]
            out.append(f"voter {i + 1}: " + "; ".join(parts))
        return out


@dataclass(frozen=True)
class ExpandedElection:
    election: Election
    family: tuple[int, ...]  # clone index -> source candidate index
    source: Election

    def clones_of(self, j) -> list[int]:
        j = self.source.index(j)
        return [x for x, f in enumerate(self.family) if f == j]

    def family_won(self, rule: Rule, j) -> bool:
        """True iff some clone of source candidate ``j`` is a winner."""
        won = winners(self.election, rule)
        return any(x in won for x in self.clones_of(j))


def apply_cloning(e: Election, vector, assignment: Optional[OrderingAssignment] = None) -> ExpandedElection:
    """Replace each candidate by its clones, ordered per voter by ``assignment``."""
    vector = _as_vector(e, vector)
    if assignment is None:
        assignment = OrderingAssignment.identity(e.n, vector)
    assignment.check(e, vector)
    offsets = np.concatenate([[0], np.cumsum(vector.counts)[:-1]])
    labels, family = [], []
    for j, k in enumerate(vector):
        labels += [f"{e.label(j)}#{s + 1}" for s in range(k)]
        family += [j] * k
    votes = []
    for vote, row in zip(e.votes, assignment.perms):
        votes.append(tuple(int(offsets[x]) + s for x in vote for s in row[x]))
    return ExpandedElection(Election(tuple(labels), tuple(votes)), tuple(family), e)


@dataclass(frozen=True)
class SuccessMode:
    """0+ (some ordering works), One (every ordering works) or a threshold q."""

    kind: str
    q: Optional[Fraction] = None

    def __post_init__(self):
        if self.kind not in ("zero_plus", "one", "threshold"):
            raise ValueError(f"unknown success mode {self.kind!r}")
        if self.kind == "threshold":
            q = Fraction(self.q)
            if not 0 < q < 1:
                raise InvalidThreshold(f"threshold must lie strictly between 0 and 1, got {q}")
            object.__setattr__(self, "q", q)

    @classmethod
    def threshold(cls, q) -> "SuccessMode":
        return cls("threshold", Fraction(q))

    @classmethod
    def parse(cls, text: str) -> "SuccessMode":
        t = str(text).strip().lower()
        if t in ("0+", "0plus", "zero_plus", "zeroplus", "zero-plus"):
            return ZERO_PLUS
        if t in ("1", "one"):
            return ONE
        try:
            q = Fraction(t)
        except (ValueError, ZeroDivisionError):
            raise InvalidThreshold(f"cannot read success mode {text!r}") from None
        if q == 1:
            return ONE
        return cls.threshold(q)

    def __str__(self):
        return {"zero_plus": "0+", "one": "1"}.get(self.kind) or str(self.q)


ZERO_PLUS = SuccessMode("zero_plus")
ONE = SuccessMode("one")


@dataclass(frozen=True)
class ExactResult:
    status: str  # "success", "failure" or "not_applicable"
    mode: SuccessMode
    witness: Optional[OrderingAssignment] = None
    counterexample: Optional[OrderingAssignment] = None
    reason: str = ""
    method: str = ""
    checked: int = 0  # assignments evaluated, or family states visited when factored

    @property
    def success(self) -> bool:
        return self.status == "success"


def _from_indices(vector, table) -> OrderingAssignment:
    """Turn per-voter, per-family permutation indices into an assignment."""
    rows = []
    for idx_row in table:
        rows.append(tuple(tuple(_batch.perm_table(k)[p]) for k, p in zip(vector, idx_row)))
    return OrderingAssignment(tuple(rows))


def assignment_count(e: Election, vector) -> int:
    return math.prod(math.factorial(k) for k in vector) ** e.n


def check_success_exact(
    e: Election,
    rule: Rule,
    c,
    vector,
    mode: SuccessMode = ZERO_PLUS,
    limit: int = DEFAULT_LIMIT,
    method: str = "auto",
    reduce_symmetry: bool = False,
) -> ExactResult:
    """Decide 0+ or 1 success of ``vector`` exactly.

    ``method="enumerate"`` walks all assignments in lexicographic order
    (voter, then family, then permutation rank) and reports the first
    witness or counterexample, refusing when their number exceeds
    ``limit``.  ``reduce_symmetry`` fixes voter 1's clone orders, which
    loses nothing because relabelling clones inside a family never changes
    whether the family wins; the witness found is still the least one.

    ``method="factored"`` (not available for the runoff) solves each family
    separately and caps the number of reachable states per family instead.
    ``"auto"`` picks factored whenever the rule allows it.
    """
    c = e.index(c)
    vector = _as_vector(e, vector)
    if mode.kind == "threshold":
        raise InvalidThreshold("exact checks cover the 0+ and 1 modes; use estimate_success_probability")
    if c in winners(e, rule):
        return ExactResult("not_applicable", mode, reason="the preferred candidate already wins")
    if method == "auto":
        method = "factored" if rule.name in FACTORABLE else "enumerate"
    layout = _batch.CloneLayout(e, vector)
    one = mode.kind == "one"
    if method == "factored":
        if rule.name not in FACTORABLE:
            raise ValueError(f"the factored check does not apply to {rule}")
        ok, table, work = factored_check(layout, rule, c, one, limit)
        found = _from_indices(vector, table) if table is not None else None
        status = "success" if ok else "failure"
        if one:
            return ExactResult(status, mode, counterexample=found, method=method, checked=work)
        return ExactResult(status, mode, witness=found, method=method, checked=work)
    if method != "enumerate":
        raise ValueError(f"unknown method {method!r}")
    return _enumerate(layout, rule, c, one, limit, reduce_symmetry, mode)


def _enumerate(layout, rule, c, one, limit, reduce_symmetry, mode) -> ExactResult:
    e = layout.election
    fams = layout.cloned
    facts = [math.factorial(layout.k[j]) for j in fams]
    first_free = 1 if (reduce_symmetry and fams) else 0
    free_voters = e.n - first_free
    total = math.prod(facts) ** free_voters
    if total > limit:
        raise SearchSpaceTooLarge(total, limit)
    dims = tuple(facts) * free_voters
    step = layout.batch_size(rule)
    found_at = None
    checked = 0
    for lo in range(0, total, step):
        idx = np.arange(lo, min(total, lo + step), dtype=np.int64)
        digits = np.unravel_index(idx, dims) if dims else ()
        inner = {}
        for f, j in enumerate(fams):
            # permutation indices per voter; voter 1 stays on the identity when reduced
            per_voter = [np.zeros(len(idx), dtype=np.int64)] * first_free
            per_voter += [digits[v * len(fams) + f] for v in range(free_voters)]
            inner[j] = np.stack(per_voter, axis=1)
        ok = _batch.batch_success(layout, rule, c, inner) if fams else np.array(
            [_batch.batch_success(layout, rule, c, {})[0]]
        )
        hit = np.flatnonzero(~ok if one else ok)
        if hit.size:
            found_at = int(idx[hit[0]])
            checked += int(hit[0]) + 1
            break
        checked += len(idx)
    if found_at is None:
        status = "success" if one else "failure"
        return ExactResult(status, mode, method="enumerate", checked=checked)
    flat = np.unravel_index(found_at, dims) if dims else ()
    table = []
    for i in range(e.n):
        row = [0] * e.m
        for f, j in enumerate(fams):
            row[j] = 0 if i < first_free else int(flat[(i - first_free) * len(fams) + f])
        table.append(row)
    found = _from_indices(layout.k, table)
    if one:
        return ExactResult("failure", mode, counterexample=found, method="enumerate", checked=checked)
    return ExactResult("success", mode, witness=found, method="enumerate", checked=checked)


@dataclass(frozen=True)
class Estimate:
    estimate: Fraction
    successes: int
    samples: int
    seed: int = field(default=0)

    def stderr(self) -> float:
        p = float(self.estimate)
        return math.sqrt(max(p * (1 - p), 0.0) / self.samples)


def _block_rng(seed: int, block: int) -> np.random.Generator:
    ss = np.random.SeedSequence([int(seed) & (2**64 - 1), block])
    return np.random.Generator(np.random.Philox(ss))


def _count_blocks(e, rule, c, counts, seed, blocks, samples) -> int:
    layout = _batch.CloneLayout(e, counts)
    step = layout.batch_size(rule)
    total = 0
    for b in blocks:
        rng = _block_rng(seed, b)
        inner = _batch.sample_inner(layout, rng, SAMPLE_BLOCK)
        keep = min(SAMPLE_BLOCK, samples - b * SAMPLE_BLOCK)
        for lo in range(0, keep, step):
            part = {j: a[lo : min(keep, lo + step)] for j, a in inner.items()}
            if part:
                total += int(_batch.batch_success(layout, rule, c, part).sum())
            else:
                total += (min(keep, lo + step) - lo) * int(_batch.batch_success(layout, rule, c, {})[0])
    return total


def estimate_success_probability(
    e: Election, rule: Rule, c, vector, samples: int, seed: int = 0, workers: int = 1
) -> Estimate:
    """Fraction of uniformly random ordering assignments in which a clone of ``c`` wins.

    Trials are grouped into blocks of SAMPLE_BLOCK.  Block b draws from a
    Philox generator keyed by ``SeedSequence([seed, b])`` and always draws a
    full block, so the result for a given (seed, samples) is the same for
    any number of workers and a longer run extends a shorter one.
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    c = e.index(c)
    vector = _as_vector(e, vector)
    nblocks = -(-samples // SAMPLE_BLOCK)
    if workers <= 1 or nblocks == 1:
        hits = _count_blocks(e, rule, c, vector.counts, seed, range(nblocks), samples)
    else:
        chunks = [range(a, nblocks, workers) for a in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_count_blocks, e, rule, c, vector.counts, seed, ch, samples) for ch in chunks
            ]
            hits = sum(f.result() for f in futures)
    return Estimate(Fraction(hits, samples), hits, samples, seed)
