import numpy as np
import pytest

from clonevote import Election, random_election

# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES = {}


def record_acceptance(number, name, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    ACCEPTANCE_LINES[number] = f"[{status}] criterion {number}: {name}" + (f" ({detail})" if detail else "")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def unanimous_abc():
    return Election.from_labels("abc", ["abc"])


def small_elections(seed, count, max_m=4, max_n=5):
    """Reproducible impartial-culture elections with a random preferred candidate."""
    g = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        m = int(g.integers(1, max_m + 1))
        n = int(g.integers(1, max_n + 1))
        e = random_election(g, m, n)
        out.append((e, int(g.integers(m))))
    return out
