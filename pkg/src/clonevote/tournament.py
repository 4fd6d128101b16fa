"""Pairwise-majority graphs: covering, the uncovered set, McGarvey realization
and the rotational (cyclic) profiles used to drive Maximin scores down."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .election import Election, pairwise_matrix
from .errors import InvalidElection, InvalidSize, SameCandidate, UnknownCandidate, UnrealizableParity


@dataclass(frozen=True)
class MajorityGraph:
    """Strict majority edges plus the unordered tied pairs."""

    candidates: tuple[str, ...]
    beats: frozenset  # of (winner, loser) index pairs
    ties: frozenset  # of frozenset({a, b})

    @property
    def m(self):
        return len(self.candidates)

    def index(self, c):
        if isinstance(c, int):
            if 0 <= c < self.m:
                return c
            raise UnknownCandidate(f"candidate index {c} out of range")
        try:
            return self.candidates.index(c)
        except ValueError:
            raise UnknownCandidate(f"unknown candidate {c!r}") from None

    def beats_pair(self, a, b) -> bool:
        return (a, b) in self.beats

    def is_tournament(self) -> bool:
        return not self.ties

    def label_edges(self):
        return sorted((self.candidates[a], self.candidates[b]) for a, b in self.beats)


class UDTPartition(NamedTuple):
    up: frozenset  # candidates that beat c
    down: frozenset  # candidates beaten by c
    tied: frozenset


@dataclass(frozen=True)
class MajoritySpec:
    """Requested majority relation: listed edges are strict wins, the rest ties."""

    candidates: tuple[str, ...]
    beats: frozenset
    parity: str = "even"

    def __post_init__(self):
        object.__setattr__(self, "candidates", tuple(self.candidates))
        object.__setattr__(self, "beats", frozenset((int(a), int(b)) for a, b in self.beats))
        m = len(self.candidates)
        if m == 0:
            raise InvalidElection("a majority spec needs at least one candidate")
        if len(set(self.candidates)) != m:
            raise InvalidElection("candidate labels must be unique")
        if self.parity not in ("even", "odd"):
            raise ValueError(f"parity must be 'even' or 'odd', got {self.parity!r}")
        for a, b in self.beats:
            if not (0 <= a < m and 0 <= b < m):
                raise UnknownCandidate(f"edge ({a}, {b}) refers to an unknown candidate")
            if a == b:
                raise InvalidElection("a candidate cannot beat itself")
            if (b, a) in self.beats:
                raise InvalidElection(f"edges {a}->{b} and {b}->{a} are contradictory")
        if self.parity == "odd" and len(self.beats) != m * (m - 1) // 2:
            raise UnrealizableParity("an odd number of voters cannot produce tied pairs")

    @classmethod
    def from_labels(cls, candidates, edges: Iterable, parity="even") -> "MajoritySpec":
        candidates = tuple(candidates)
        lookup = {x: j for j, x in enumerate(candidates)}
        try:
            beats = frozenset((lookup[a], lookup[b]) for a, b in edges)
        except KeyError as exc:
            raise UnknownCandidate(f"unknown candidate {exc.args[0]!r}") from None
        return cls(candidates, beats, parity)

    def graph(self) -> MajorityGraph:
        m = len(self.candidates)
        ties = frozenset(
            frozenset((a, b))
            for a in range(m)
            for b in range(a + 1, m)
            if (a, b) not in self.beats and (b, a) not in self.beats
        )
        return MajorityGraph(self.candidates, self.beats, ties)


def majority_graph(e: Election) -> MajorityGraph:
    w = pairwise_matrix(e)
    beats = set()
    ties = set()
    for a in range(e.m):
        for b in range(a + 1, e.m):
            if w[a, b] > w[b, a]:
                beats.add((a, b))
            elif w[b, a] > w[a, b]:
                beats.add((b, a))
            else:
                ties.add(frozenset((a, b)))
    return MajorityGraph(e.candidates, frozenset(beats), frozenset(ties))


def udt_partition(g: MajorityGraph, c) -> UDTPartition:
    c = g.index(c)
    up, down, tied = set(), set(), set()
    for x in range(g.m):
        if x == c:
            continue
        if (x, c) in g.beats:
            up.add(x)
        elif (c, x) in g.beats:
            down.add(x)
        else:
            tied.add(x)
    return UDTPartition(frozenset(up), frozenset(down), frozenset(tied))


def covers(g: MajorityGraph, u, c) -> bool:
    """General covering: u beats c, beats everything c beats, and every
    candidate beating u also beats c."""
    u, c = g.index(u), g.index(c)
    if u == c:
        raise SameCandidate("a candidate is never compared with itself for covering")
    if (u, c) not in g.beats:
        return False
    pu, pc = udt_partition(g, u), udt_partition(g, c)
    return pc.down <= pu.down and pu.up <= pc.up


def uncovered_set(g: MajorityGraph) -> frozenset:
    return frozenset(
        c for c in range(g.m) if not any(covers(g, u, c) for u in range(g.m) if u != c)
    )


def mcgarvey_realize(spec: MajoritySpec) -> Election:
    """Profile whose majority graph is exactly ``spec``.

    Each edge a->b contributes the voters ``a > b > rest`` and
    ``reversed(rest) > a > b``; every other pair cancels out across the two.
    Odd parity appends one roster-order voter, turning margins of +-2 into
    +-1 or +-3 without flipping any edge.
    """
    m = len(spec.candidates)
    votes = []
    for a, b in sorted(spec.beats):
        rest = [x for x in range(m) if x != a and x != b]
        votes.append(tuple([a, b] + rest))
        votes.append(tuple(rest[::-1] + [a, b]))
    if not votes and spec.parity == "even":
        # nothing but ties: one cancelling pair keeps the profile nonempty
        votes = [tuple(range(m)), tuple(range(m))[::-1]]
    if spec.parity == "odd":
        votes.append(tuple(range(m)))
    return Election(spec.candidates, tuple(votes))


def k_cyclic_profile(k: int, labels=None) -> Election:
    """k voters over k candidates; voter i ranks a_i first and wraps around."""
    if k < 1:
        raise InvalidSize("a cyclic profile needs k >= 1")
    if labels is None:
        labels = [f"a{i + 1}" for i in range(k)]
    votes = [tuple((i + r) % k for r in range(k)) for i in range(k)]
    return Election(tuple(labels), tuple(votes))
