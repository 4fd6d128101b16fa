import time

import numpy as np
import pytest

from clonevote import ONE, ZERO_PLUS, Borda, Copeland, Plurality, UnitCost, ZeroCost, brute_force_search, pnk_experiment
from clonevote import fixtures as fx
from clonevote.cloning import check_success_exact
from clonevote.costs import CostFunction
from clonevote.oracle import PNK_BLOCK, SearchCaps, _pnk_block, candidate_vectors


def test_candidate_order_is_cost_then_size_then_counts():
    p = CostFunction.general([[2], [1]])
    got = [x[2] for x in candidate_vectors(p, 2, 2, 3)]
    assert got == [(1, 1), (1, 2), (2, 1), (1, 3), (2, 2)]


def test_tied_cover_has_no_cloning_within_three_extra():
    e = fx.copeland_tied_cover()
    res = brute_force_search(e, Copeland, "c", ZERO_PLUS, ZeroCost, caps=SearchCaps(3, 10**7))
    assert res.status == "no"


def test_cheapest_one_successful_borda_cloning():
    e = fx.borda_clone_rival()
    res = brute_force_search(e, Borda, "c", ONE, UnitCost, 2)
    # doubling b already makes c tie a at 12 under every ordering
    assert res.status == "yes" and res.cost == 1 and res.vector.describe(e) == "b=2"
    assert check_success_exact(e, Borda, "c", res.vector, ONE).success
    assert check_success_exact(e, Borda, "c", (1, 3, 1, 1), ONE).success


def test_winner_is_not_applicable():
    assert brute_force_search(fx.borda_clone_rival(), Borda, "a", ZERO_PLUS, UnitCost).status == "not_applicable"


def test_caps_are_reported():
    e = fx.copeland_tied_cover()
    res = brute_force_search(e, Copeland, "c", ONE, UnitCost, caps=SearchCaps(2, 10))
    assert res.status == "cap_exceeded" and res.skipped


def test_threshold_mode_is_refused():
    from clonevote import SuccessMode

    with pytest.raises(ValueError):
        brute_force_search(fx.two_way_split(), Plurality, "c", SuccessMode.threshold(0.5), UnitCost)


def test_pnk_single_clone_never_succeeds():
    for n in (1, 2, 5):
        assert pnk_experiment(n, 1, 500).successes == 0


def test_pnk_identical_permutations_fail():
    # with every permutation equal, the first item has nothing ahead of it
    for k in (2, 3, 6):
        perms = np.broadcast_to(np.arange(k), (1, 3, k))
        pos = np.argsort(perms, axis=2)
        ahead = (pos[:, :, None, :] < pos[:, :, :, None]).sum(axis=1)
        ahead[:, np.arange(k), np.arange(k)] = -1
        assert not (ahead >= 2).any(axis=2).all()


def test_pnk_small_cases():
    # one permutation: n - 1 = 0 predecessors are needed, so any other item will do
    assert pnk_experiment(1, 3, 300, seed=4).successes == 300
    # two permutations of two items succeed exactly when they differ
    res = pnk_experiment(2, 2, 20000, seed=4)
    assert abs(float(res.estimate) - 0.5) < 4 * (0.25 / 20000) ** 0.5


def test_pnk_is_deterministic_and_worker_independent():
    a = pnk_experiment(3, 4, 3 * PNK_BLOCK + 5, seed=9)
    b = pnk_experiment(3, 4, 3 * PNK_BLOCK + 5, seed=9, workers=2)
    assert a == b
    assert 0 < a.successes < a.trials
    assert _pnk_block(3, 4, 9, 0, PNK_BLOCK) == _pnk_block(3, 4, 9, 0, PNK_BLOCK)
