"""Elections over strict linear orders and the pairwise facts derived from them.

Candidates are identified by their 0-based position in the roster; labels are
only used for display and parsing.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Optional, Sequence

import numpy as np

from .errors import InvalidElection, UnknownCandidate

RESERVED = set(">,:")


def _check_label(label):
    if not isinstance(label, str) or not label.strip():
        raise InvalidElection(f"candidate label must be a nonempty string, got {label!r}")
    if label != label.strip():
        raise InvalidElection(f"candidate label {label!r} has surrounding whitespace")
    bad = RESERVED.intersection(label)
    if bad:
        raise InvalidElection(f"candidate label {label!r} uses reserved characters {sorted(bad)}")


@dataclass(frozen=True)
class Election:
    """A roster of candidates and one strict ranking per voter.

    ``votes[i]`` lists candidate indices from most to least preferred.
    """

    candidates: tuple[str, ...]
    votes: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "candidates", tuple(self.candidates))
        object.__setattr__(self, "votes", tuple(tuple(int(x) for x in v) for v in self.votes))
        if not self.candidates:
            raise InvalidElection("an election needs at least one candidate")
        if not self.votes:
            raise InvalidElection("an election needs at least one voter")
        for label in self.candidates:
            _check_label(label)
        if len(set(self.candidates)) != len(self.candidates):
            raise InvalidElection("candidate labels must be unique")
        full = set(range(len(self.candidates)))
        for i, vote in enumerate(self.votes):
            if len(vote) != len(full) or set(vote) != full:
                raise InvalidElection(f"vote {i} is not a permutation of the roster")

    @classmethod
    def from_labels(cls, candidates: Sequence[str], ballots: Iterable[Sequence[str]]) -> "Election":
        """Build an election from ballots written with candidate labels."""
        candidates = tuple(candidates)
        lookup = {label: j for j, label in enumerate(candidates)}
        votes = []
        for ballot in ballots:
            try:
                votes.append(tuple(lookup[x] for x in ballot))
            except KeyError as exc:
                raise UnknownCandidate(f"unknown candidate {exc.args[0]!r}") from None
        return cls(candidates, tuple(votes))

    @classmethod
    def from_weighted(cls, candidates, weighted_ballots) -> "Election":
        """``weighted_ballots`` is a sequence of ``(weight, ballot_labels)`` pairs."""
        ballots = []
        for weight, ballot in weighted_ballots:
            ballots.extend([ballot] * weight)
        return cls.from_labels(candidates, ballots)

    @property
    def m(self) -> int:
        return len(self.candidates)

    @property
    def n(self) -> int:
        return len(self.votes)

    def index(self, candidate) -> int:
        """Resolve a label or index to an index, raising UnknownCandidate."""
        if isinstance(candidate, (int, np.integer)) and not isinstance(candidate, bool):
            if 0 <= candidate < self.m:
                return int(candidate)
            raise UnknownCandidate(f"candidate index {candidate} out of range 0..{self.m - 1}")
        try:
            return self.candidates.index(candidate)
        except ValueError:
            raise UnknownCandidate(f"unknown candidate {candidate!r}") from None

    def label(self, j: int) -> str:
        return self.candidates[j]

    @cached_property
    def ranks(self) -> np.ndarray:
        """``ranks[i, j]`` is the 0-based position of candidate j in vote i."""
        r = np.empty((self.n, self.m), dtype=np.int64)
        order = np.asarray(self.votes, dtype=np.int64)
        r[np.arange(self.n)[:, None], order] = np.arange(self.m)[None, :]
        r.setflags(write=False)
        return r

    def reversed(self) -> "Election":
        return Election(self.candidates, tuple(v[::-1] for v in self.votes))

    def ballot_labels(self, i: int) -> tuple[str, ...]:
        return tuple(self.candidates[j] for j in self.votes[i])

    def __str__(self):
        lines = [f"candidates: {', '.join(self.candidates)}"]
        lines += [" > ".join(self.ballot_labels(i)) for i in range(self.n)]
        return "\n".join(lines)


def pairwise_matrix(e: Election) -> np.ndarray:
    """``W[c, a]`` = number of voters ranking c above a (diagonal is zero)."""
    r = e.ranks
    return (r[:, :, None] < r[:, None, :]).sum(axis=0)


def is_pareto_undominated(e: Election, c) -> bool:
    """True iff for every other candidate some voter ranks ``c`` above it."""
    c = e.index(c)
    w = pairwise_matrix(e)
    return all(w[c, a] >= 1 for a in range(e.m) if a != c)


class CondorcetStatus(NamedTuple):
    winner: Optional[int]
    loser: Optional[int]


def condorcet_status(e: Election) -> CondorcetStatus:
    w = pairwise_matrix(e)
    winner = loser = None
    for c in range(e.m):
        others = [a for a in range(e.m) if a != c]
        if all(w[c, a] > w[a, c] for a in others):
            winner = c
        if all(w[c, a] < w[a, c] for a in others):
            loser = c
    # a one-candidate election has a vacuous winner and loser
    return CondorcetStatus(winner, loser)


def random_election(rng: np.random.Generator, m: int, n: int, labels=None) -> Election:
    """Impartial-culture election: every vote is an independent uniform ranking."""
    if labels is None:
        labels = [chr(ord("a") + j) if m <= 26 else f"c{j}" for j in range(m)]
    votes = [tuple(int(x) for x in rng.permutation(m)) for _ in range(n)]
    return Election(tuple(labels), tuple(votes))
