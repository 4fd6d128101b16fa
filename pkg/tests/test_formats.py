import pytest
from hypothesis import given, settings

from clonevote import Borda, ParseError, parse_costs, parse_election, parse_majority_spec, scores, serialize_election
from clonevote import fixtures as fx
from clonevote.costs import INF
from clonevote.formats import serialize_costs, serialize_majority_spec
from test_election import elections
from test_tournament import specs

CONDORCET_LOSER_DOC = """\
# first-round leader who loses every head-to-head contest
candidates: a, b, c, d
8: c > a > b > d
3: a > b > d > c
3: b > a > d > c
3: d > a > b > c
"""


def test_minimal_document():
    e = parse_election("candidates: a,b\n1: a > b\n")
    assert e.n == 1 and e.candidates == ("a", "b")


def test_weighted_document_expands_in_order():
    e = parse_election(CONDORCET_LOSER_DOC)
    assert e.n == 17
    assert e == fx.runoff_condorcet_loser()


def test_four_voter_document_scores():
    e = parse_election("candidates: a, b, c, d\n3: a > c > b > d\n1: d>c>b>a\n")
    assert list(scores(e, Borda)) == [9, 4, 8, 3]


@pytest.mark.parametrize(
    "text, line, words",
    [
        ("candidates: a,b\n1: a > a\n", 2, "twice"),
        ("candidates: a,b\n1: a > z\n", 2, "unknown"),
        ("candidates: a,b,c\n\n1: a > b\n", 3, "missing"),
        ("candidates: a,b\n0: a > b\n", 2, "positive"),
        ("candidates: a,b\nx: a > b\n", 2, "weight"),
        ("candidates:\n", 1, "empty"),
        ("candidates: a,a\n", 1, "repeats"),
        ("1: a > b\n", 1, "follow"),
        ("candidates: a\ncandidates: b\n", 2, "twice"),
    ],
)
def test_election_errors_carry_line_numbers(text, line, words):
    with pytest.raises(ParseError) as info:
        parse_election(text)
    assert info.value.line == line and words in str(info.value)


def test_document_without_ballots():
    with pytest.raises(ParseError):
        parse_election("candidates: a\n")
    with pytest.raises(ParseError):
        parse_election("# nothing\n")


@settings(max_examples=60, deadline=None)
@given(elections())
def test_serialize_parse_round_trip(e):
    text = serialize_election(e)
    again = parse_election(text)
    assert again == e
    assert serialize_election(again) == text


def test_majority_spec_document():
    s = parse_majority_spec("candidates: a, b, c, u, w\nbeats: a u\nbeats: u b\nbeats: b w\nbeats: w a\n"
                            "beats: u c\nbeats: w c\nparity: even\n")
    assert s == fx.copeland_tied_cover_spec()


@pytest.mark.parametrize(
    "text, line",
    [
        ("candidates: a,b\nbeats: a\n", 2),
        ("candidates: a,b\nbeats: a z\n", 2),
        ("candidates: a,b\nbeats: a b\nbeats: b a\n", 3),
        ("candidates: a,b\nparity: both\n", 2),
        ("candidates: a,b\ncolour: red\n", 2),
    ],
)
def test_majority_spec_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse_majority_spec(text)
    assert info.value.line == line


def test_odd_spec_with_ties_is_rejected():
    with pytest.raises(ParseError):
        parse_majority_spec("candidates: a,b,c\nbeats: a b\nparity: odd\n")


@settings(max_examples=40, deadline=None)
@given(specs())
def test_spec_round_trip(s):
    assert parse_majority_spec(serialize_majority_spec(s)) == s


def test_cost_document():
    e = fx.runoff_condorcet_loser()
    p = parse_costs("t: 3\nclone-cost: a 1 2\nclone-cost: d inf inf\n", e)
    assert p.table[0] == (0, 1, 2) and p.table[1] == (0, 0, 0) and p.table[3] == (0, INF, INF)
    assert parse_costs(serialize_costs(p, e), e) == p


@pytest.mark.parametrize(
    "text, line",
    [
        ("clone-cost: a 1\n", 1),
        ("t: 1\n", 1),
        ("t: 3\nclone-cost: a 1\n", 2),
        ("t: 3\nclone-cost: z 1 1\n", 2),
        ("t: 3\nclone-cost: a 1 -2\n", 2),
        ("t: 2\nclone-cost: a 1\nclone-cost: a 2\n", 3),
    ],
)
def test_cost_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse_costs(text, fx.runoff_condorcet_loser())
    assert info.value.line == line
