"""Small named elections used by the demos, the CLI fixtures and the tests."""

from __future__ import annotations

from .election import Election
from .tournament import MajoritySpec, mcgarvey_realize


def runoff_condorcet_loser() -> Election:
    """17 voters; c leads the first round yet loses every pairwise contest,
    so the runoff drops it, and one extra clone of c flips that."""
    return Election.from_weighted("abcd", [(8, "cabd"), (3, "abdc"), (3, "badc"), (3, "dabc")])


def borda_clone_rival() -> Election:
    """Four voters under Borda: a wins, and tripling b hands the win to c
    under every clone ordering, while cloning c itself never helps."""
    return Election.from_labels("abcd", ["acbd"] * 3 + ["dcba"])


def copeland_tied_cover_spec() -> MajoritySpec:
    """Even-voter majority relation with ties: nobody covers c, yet no
    cloning can make it a Copeland winner."""
    return MajoritySpec.from_labels(
        "abcuw", [("a", "u"), ("u", "b"), ("b", "w"), ("w", "a"), ("u", "c"), ("w", "c")]
    )


def copeland_tied_cover() -> Election:
    return mcgarvey_realize(copeland_tied_cover_spec())


def two_way_split() -> Election:
    """Two candidates, 13 to 23: under plurality, splitting r into two copies lets c win."""
    return Election.from_weighted(["c", "r"], [(13, "cr"), (23, "rc")])


def camera_market() -> Election:
    """Under 2-approval N wins; flooding the ballots with copies of N and K
    leaves S with the most approvals."""
    return Election.from_weighted("SNK", [(6, "SNK"), (4, "KNS")])


def maximin_cyclic_split() -> Election:
    """Under Maximin a leads c by one point; three copies of a in cyclic
    orders bring every copy down to c's score or lower."""
    return Election.from_labels("acb", ["acb"] * 3 + ["cba"] * 2)


def borda_last_place() -> Election:
    """Borda: c is first for three voters and last for one; two copies of c
    win under every clone ordering."""
    return Election.from_labels(["c", "a", "x", "y", "z"], [list("caxyz")] * 3 + [list("axyzc")])
