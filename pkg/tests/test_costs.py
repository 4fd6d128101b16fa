import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as hs

from clonevote import ONE, ZERO_PLUS, Borda, CostFunction, Plurality, UnitCost, ZeroCost, cost_of, decide_q_cloning
from clonevote import fixtures as fx
from clonevote.costs import INF, min_cost_with_extra, parse_budget
from clonevote.oracle import SearchCaps


def test_unit_and_zero_costs():
    assert cost_of(UnitCost, (3, 1, 1)) == 2
    assert cost_of(ZeroCost, (5, 4, 2)) == 0


def test_tail_prices_repeat_the_last_column():
    p = CostFunction.general([[5, 1]])
    assert cost_of(p, (5,)) == 5 + 1 + 1 + 1


def test_general_cost_validation():
    with pytest.raises(ValueError):
        CostFunction("general", ((1, 2),))
    with pytest.raises(ValueError):
        CostFunction.general([[1], [1, 2]])
    with pytest.raises(ValueError):
        CostFunction.general([[-1]])
    with pytest.raises(ValueError):
        cost_of(CostFunction.general([[1]]), (1, 2))
    assert cost_of(CostFunction.general([["inf"], [2]]), (2, 1)) == INF


def test_budget_parsing():
    assert parse_budget("inf") == INF
    assert parse_budget("3") == 3
    with pytest.raises(ValueError):
        parse_budget("-1")


def test_cheapest_extra_copies():
    p = CostFunction.general([[4, 4], [1, 9], [INF, INF]])
    assert min_cost_with_extra(p, 3, 0) == 0
    assert min_cost_with_extra(p, 3, 1) == 1
    assert min_cost_with_extra(p, 3, 2) == 5
    assert min_cost_with_extra(CostFunction.general([[INF]]), 1, 1) == INF


def test_plurality_general_cost_budget_edge():
    e = fx.two_way_split()
    p = CostFunction.general([[0], [3]])
    yes = decide_q_cloning(e, Plurality, "c", ZERO_PLUS, p, 3)
    assert yes.answer == "Yes" and yes.cost == 3
    assert decide_q_cloning(e, Plurality, "c", ZERO_PLUS, p, 2).answer == "No"


def test_plurality_one_is_always_no():
    assert decide_q_cloning(fx.two_way_split(), Plurality, "c", ONE, UnitCost, INF).answer == "No"


def test_borda_unit_cost_single_copy_of_c():
    d = decide_q_cloning(fx.borda_clone_rival(), Borda, "c", ZERO_PLUS, UnitCost, 1)
    assert d.answer == "Yes" and d.cost == 1
    assert d.report.derived["extra_clones"] == 1 and d.report.derived["clones"] == 2
    assert decide_q_cloning(fx.borda_clone_rival(), Borda, "c", ZERO_PLUS, UnitCost, 0).answer == "No"


def test_borda_one_mode_falls_back_to_the_oracle():
    d = decide_q_cloning(fx.borda_clone_rival(), Borda, "c", ONE, UnitCost, 2, SearchCaps(2, 10**5))
    assert d.answer == "Yes" and d.source == "oracle" and d.cost <= 2


def test_already_winning_is_not_applicable():
    assert decide_q_cloning(fx.borda_clone_rival(), Borda, "a", ZERO_PLUS, UnitCost, 5).answer == "NotApplicable"


def test_oracle_no_is_inconclusive_when_cheap_vectors_lie_beyond_the_caps():
    e = fx.copeland_tied_cover()
    d = decide_q_cloning(e, Borda, "c", ONE, ZeroCost, 0, SearchCaps(1, 10**4))
    assert d.answer in ("Yes", "Inconclusive")


@settings(max_examples=60, deadline=None)
@given(hs.lists(hs.lists(hs.one_of(hs.integers(0, 5), hs.just(INF)), min_size=2, max_size=2), min_size=3, max_size=3),
       hs.lists(hs.integers(1, 4), min_size=3, max_size=3), hs.lists(hs.integers(1, 4), min_size=3, max_size=3))
def test_cost_is_additive_and_zero_on_ones(rows, u, v):
    p = CostFunction.general(rows)
    assert cost_of(p, (1, 1, 1)) == 0
    # families are priced independently
    joined = sum(cost_of(p, tuple(x if j == i else 1 for j, x in enumerate(u))) for i in range(3))
    assert cost_of(p, u) == joined
    if all(a <= b for a, b in zip(u, v)):
        assert cost_of(p, u) <= cost_of(p, v)
