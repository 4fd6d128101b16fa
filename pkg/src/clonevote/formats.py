"""Plain-text documents for elections, majority specs and cost tables.

Election::

    # comment
    candidates: a, b, c
    8: a > b > c
    3: c > b > a

Majority spec::

    candidates: a, b, c
    beats: a b
    parity: even

Cost table (omitted candidates clone for free)::

    t: 3
    clone-cost: a 1 2
    clone-cost: b inf inf
"""

from __future__ import annotations

from pathlib import Path

from .costs import INF, CostFunction, _price
from .election import Election
from .errors import CloningError, ParseError
from .tournament import MajoritySpec


def _lines(text):
    """Yield (line number, stripped content) for lines that carry content."""
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _key(line, no):
    if ":" not in line:
        raise ParseError(f"expected 'key: value', got {line!r}", no)
    key, value = line.split(":", 1)
    return key.strip().lower(), value.strip()


def _roster(value, no):
    names = [x.strip() for x in value.split(",")]
    if not value or any(not x for x in names):
        raise ParseError("the candidate list is empty or has an empty name", no)
    if len(set(names)) != len(names):
        raise ParseError("the candidate list repeats a name", no)
    for x in names:
        if any(ch.isspace() for ch in x) or ">" in x:
            raise ParseError(f"bad candidate name {x!r}", no)
    return names


def parse_election(text: str) -> Election:
    """Parse an election document; weighted ballots expand in file order."""
    roster = None
    weighted = []
    for no, line in _lines(text):
        head, value = _key(line, no)
        if head == "candidates":
            if roster is not None:
                raise ParseError("candidates declared twice", no)
            roster = _roster(value, no)
            continue
        if roster is None:
            raise ParseError("ballots must follow the 'candidates:' line", no)
        try:
            weight = int(head)
        except ValueError:
            raise ParseError(f"expected a ballot weight, got {head!r}", no) from None
        if weight <= 0:
            raise ParseError(f"ballot weight must be positive, got {weight}", no)
        ballot = [x.strip() for x in value.split(">")]
        for x in ballot:
            if x not in roster:
                raise ParseError(f"unknown candidate {x!r}", no)
        seen = set()
        for x in ballot:
            if x in seen:
                raise ParseError(f"candidate {x!r} appears twice in the ballot", no)
            seen.add(x)
        missing = [x for x in roster if x not in seen]
        if missing:
            raise ParseError(f"ballot is missing {', '.join(missing)}", no)
        weighted.append((weight, ballot))
    if roster is None:
        raise ParseError("no 'candidates:' line")
    if not weighted:
        raise ParseError("the election has no ballots")
    return Election.from_weighted(roster, weighted)


def serialize_election(e: Election) -> str:
    """Write ``e`` back out, merging runs of identical consecutive ballots."""
    out = [f"candidates: {', '.join(e.candidates)}"]
    i = 0
    while i < e.n:
        j = i
        while j < e.n and e.votes[j] == e.votes[i]:
            j += 1
        out.append(f"{j - i}: {' > '.join(e.ballot_labels(i))}")
        i = j
    return "\n".join(out) + "\n"


def parse_majority_spec(text: str) -> MajoritySpec:
    roster = None
    edges = []
    parity = "even"
    for no, line in _lines(text):
        key, value = _key(line, no)
        if key == "candidates":
            if roster is not None:
                raise ParseError("candidates declared twice", no)
            roster = _roster(value, no)
        elif key == "beats":
            pair = value.split()
            if len(pair) != 2:
                raise ParseError("a 'beats:' line names exactly two candidates", no)
            if roster is None:
                raise ParseError("'beats:' lines must follow the 'candidates:' line", no)
            for x in pair:
                if x not in roster:
                    raise ParseError(f"unknown candidate {x!r}", no)
            edges.append((tuple(pair), no))
        elif key == "parity":
            if value not in ("even", "odd"):
                raise ParseError(f"parity is 'even' or 'odd', got {value!r}", no)
            parity = value
        else:
            raise ParseError(f"unknown key {key!r}", no)
    if roster is None:
        raise ParseError("no 'candidates:' line")
    seen = {}
    for (a, b), no in edges:
        if a == b:
            raise ParseError("a candidate cannot beat itself", no)
        if (b, a) in seen:
            raise ParseError(f"{a} beats {b} contradicts line {seen[(b, a)]}", no)
        seen.setdefault((a, b), no)
    try:
        return MajoritySpec.from_labels(roster, seen, parity)
    except CloningError as exc:
        raise ParseError(str(exc)) from None


def serialize_majority_spec(spec: MajoritySpec) -> str:
    out = [f"candidates: {', '.join(spec.candidates)}"]
    out += [f"beats: {a} {b}" for a, b in spec.graph().label_edges()]
    out.append(f"parity: {spec.parity}")
    return "\n".join(out) + "\n"


def parse_costs(text: str, e: Election) -> CostFunction:
    """Parse a cost table for the candidates of ``e``."""
    t = None
    rows = {}
    for no, line in _lines(text):
        key, value = _key(line, no)
        if key == "t":
            if t is not None:
                raise ParseError("'t:' given twice", no)
            try:
                t = int(value)
            except ValueError:
                raise ParseError(f"t must be an integer, got {value!r}", no) from None
            if t < 2:
                raise ParseError("t must be at least 2", no)
        elif key == "clone-cost":
            if t is None:
                raise ParseError("'clone-cost:' rows must follow the 't:' header", no)
            parts = value.split()
            if not parts or parts[0] not in e.candidates:
                raise ParseError(f"unknown candidate in {value!r}", no)
            name, prices = parts[0], parts[1:]
            if name in rows:
                raise ParseError(f"two rows for {name}", no)
            if len(prices) != t - 1:
                raise ParseError(f"expected {t - 1} prices (copies 2..{t}), got {len(prices)}", no)
            try:
                rows[name] = [_price(x) for x in prices]
            except ValueError as exc:
                raise ParseError(str(exc), no) from None
        else:
            raise ParseError(f"unknown key {key!r}", no)
    if t is None:
        raise ParseError("no 't:' header")
    return CostFunction.general([rows.get(x, [0] * (t - 1)) for x in e.candidates])


def serialize_costs(p: CostFunction, e: Election) -> str:
    if p.kind != "general":
        raise ValueError("only general cost tables have a file form")
    out = [f"t: {p.t}"]
    for j, row in enumerate(p.table):
        if any(row):
            out.append(f"clone-cost: {e.label(j)} " + " ".join("inf" if x == INF else str(x) for x in row[1:]))
    return "\n".join(out) + "\n"


def read_text(path) -> str:
    return Path(path).read_text(encoding="utf-8")
