import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as hs

import naive
from clonevote import (
    ONE,
    ZERO_PLUS,
    Borda,
    Copeland,
    Election,
    KApproval,
    MajoritySpec,
    Maximin,
    Plurality,
    PluralityRunoff,
    SuccessMode,
    Veto,
    apply_cloning,
    check_success_exact,
    estimate_success_probability,
    k_cyclic_profile,
    mcgarvey_realize,
    scores,
    winners,
)
from clonevote import fixtures as fx
from clonevote.errors import InvalidThreshold, Unsupported
from clonevote.rules import plurality_scores
from clonevote.strategies import (
    AllOrderings,
    SampledEvidence,
    Verdict,
    Witness,
    analyze,
    borda_0plus_strategy,
    borda_adversarial_ordering,
    borda_clone_c_analysis,
    copeland_strategy,
    cyclic_orders,
    kapproval_saturate,
    maximin_strategy,
    plurality_0plus,
    plurality_q,
    runoff_strategy,
    solve_tied_system,
    tied_system,
    verify_strategy,
    veto_strategy,
)
from clonevote.tournament import majority_graph, udt_partition
from conftest import small_elections


def expanded(rep):
    return apply_cloning(rep.election, rep.strategy.vector, rep.strategy.certificate.assignment)


def labelled_scores(ex, rule):
    return dict(zip(ex.election.candidates, (int(x) for x in scores(ex.election, rule))))


def tournament(cands, edges):
    return mcgarvey_realize(MajoritySpec.from_labels(cands, [tuple(x) for x in edges.split()], "odd"))


# plurality


def test_plurality_split_of_the_majority_candidate():
    rep = plurality_0plus(fx.two_way_split(), "c")
    assert rep.verdict is Verdict.MANIPULABLE and rep.optimal
    assert rep.derived["k[r]"] == 2 == math.ceil(23 / 13)
    ex = expanded(rep)
    sc = dict(zip(ex.election.candidates, plurality_scores(ex.election)))
    assert sorted([sc["r#1"], sc["r#2"]]) == [10, 13] and sc["c#1"] == 13
    assert ex.family_won(Plurality, "c")


def test_plurality_needs_a_first_place():
    e = Election.from_labels("abc", ["abc", "bac"])
    assert plurality_0plus(e, "c").verdict is Verdict.NOT_MANIPULABLE
    assert plurality_q(e, "c", Fraction(9, 10), samples=0).verdict is Verdict.NOT_MANIPULABLE
    assert plurality_0plus(e, "a").verdict is Verdict.ALREADY_WINNER


def test_plurality_threshold_clone_count_and_exact_probability():
    e = Election.from_labels("ac", ["ac", "ac", "ca"])
    rep = plurality_q(e, "c", Fraction(1, 2), samples=400)
    assert rep.strategy.vector.counts == (2, 1)
    assert isinstance(rep.strategy.certificate, SampledEvidence)
    ballots = [list(e.ballot_labels(i)) for i in range(e.n)]
    wins = []
    for orders in naive.all_orders(ballots, {"a": 2, "c": 1}):
        new, exp = naive.expand(["a", "c"], ballots, {"a": 2, "c": 1}, orders)
        wins.append(any(w.startswith("c#") for w in naive.winner_set(new, exp, "plurality")))
    assert Fraction(sum(wins), len(wins)) == Fraction(1, 2)


def test_plurality_is_never_one_manipulable():
    e = fx.two_way_split()
    assert analyze(e, Plurality, "c", ONE).verdict is Verdict.NOT_MANIPULABLE
    with pytest.raises(InvalidThreshold):
        plurality_q(e, "c", 1.5)


# veto


def test_veto_unvetoed_winner_needs_n_minus_k_plus_one():
    e = Election.from_labels("abc", ["abc"] * 3 + ["acb"] * 2)
    rep = veto_strategy(e, "c", ONE)
    assert (rep.derived["l"], rep.derived["k"]) == (5, 2)
    assert rep.strategy.vector.counts == (1, 1, 4)
    assert isinstance(rep.strategy.certificate, AllOrderings)
    assert check_success_exact(e, Veto, "c", rep.strategy.vector, ONE).success


def test_veto_vetoed_winner_needs_r_plus_one():
    e = Election.from_labels("abc", ["abc"] * 3 + ["bca", "acb"])
    rep = veto_strategy(e, "c", ONE)
    d = rep.derived
    assert (d["l"], d["k"], d["l_prime"], d["k_prime"], d["r"]) == (4, 2, 1, 3, 1)
    assert rep.strategy.vector.counts == (1, 1, 2)
    res = check_success_exact(e, Veto, "c", rep.strategy.vector, ONE, method="enumerate")
    assert res.success and res.checked == 2**5


def test_veto_zero_plus_uses_two_copies():
    e = Election.from_labels("abc", ["abc"] * 3 + ["bca", "acb"])
    rep = veto_strategy(e, "c", ZERO_PLUS)
    assert rep.strategy.vector.counts == (1, 1, 2)
    assert expanded(rep).family_won(Veto, "c")
    assert veto_strategy(e, "a", ONE).verdict is Verdict.ALREADY_WINNER


# plurality with runoff


def test_runoff_condorcet_loser_with_two_copies():
    e = fx.runoff_condorcet_loser()
    rep = runoff_strategy(e, "c")
    assert rep.verdict is Verdict.MANIPULABLE and rep.optimal
    assert rep.strategy.vector.describe(e) == "c=2"
    ex = expanded(rep)
    sc = dict(zip(ex.election.candidates, plurality_scores(ex.election)))
    assert sc["c#1"] == sc["c#2"] == 4
    assert ex.family_won(PluralityRunoff, "c")


def test_runoff_single_first_place_against_beatable_rival():
    e = Election.from_labels("caw", ["caw", "acw", "acw", "wca", "wca"])
    rep = runoff_strategy(e, "c")
    assert rep.verdict is Verdict.MANIPULABLE
    vectors = {s.vector.describe(e) for s in (rep.strategy,) + rep.alternatives}
    assert "a=2" in vectors
    for s in (rep.strategy,) + rep.alternatives:
        assert verify_strategy(e, PluralityRunoff, 0, s)


def test_runoff_single_first_place_against_stronger_rivals():
    e = Election.from_labels("abc", ["cab", "abc", "abc"])
    assert runoff_strategy(e, "c").verdict is Verdict.NOT_MANIPULABLE


def test_runoff_is_never_one_manipulable():
    assert runoff_strategy(fx.runoff_condorcet_loser(), "c", ONE).verdict is Verdict.NOT_MANIPULABLE


# maximin


def test_maximin_pareto_dominated(unanimous_abc):
    assert maximin_strategy(unanimous_abc, "c").verdict is Verdict.NOT_MANIPULABLE


def test_maximin_cyclic_profile_is_a_tie():
    assert maximin_strategy(k_cyclic_profile(3), 1).verdict is Verdict.ALREADY_WINNER


def test_maximin_cyclic_split_witness():
    e = fx.maximin_cyclic_split()
    rep = maximin_strategy(e, "c")
    assert rep.strategy.vector.describe(e) == "a=3"
    sc = labelled_scores(expanded(rep), Maximin)
    assert all(sc[f"a#{s}"] <= 2 for s in (1, 2, 3)) and sc["c#1"] == 2


def test_maximin_fewer_copies_never_suffice():
    e = fx.maximin_cyclic_split()
    assert not check_success_exact(e, Maximin, "c", (2, 1, 1), ZERO_PLUS, method="enumerate").success


def test_cyclic_orders_rotate():
    assert cyclic_orders(4, 3) == [(0, 1, 2), (1, 2, 0), (2, 0, 1), (0, 1, 2)]


# borda


def test_borda_one_copy_of_c_ties_the_leader():
    e = fx.borda_clone_rival()
    rep = borda_0plus_strategy(e, "c")
    d = rep.derived
    assert (d["s[a]"], d["n[a]"], d["extra_clones"], d["clones"]) == (1, 1, 1, 2)
    sc = labelled_scores(expanded(rep), Borda)
    assert sc["a#1"] == 12 and max(sc["c#1"], sc["c#2"]) == 12


def test_borda_pareto_dominated_and_winner(unanimous_abc):
    assert borda_0plus_strategy(unanimous_abc, "c").verdict is Verdict.NOT_MANIPULABLE
    assert borda_0plus_strategy(unanimous_abc, "a").verdict is Verdict.ALREADY_WINNER


def test_borda_cloning_c_alone_cannot_work():
    rep = borda_clone_c_analysis(fx.borda_clone_rival(), "c")
    assert rep.verdict is Verdict.NOT_MANIPULABLE
    assert rep.derived["n[a]"] == -2 and rep.derived["r_plus"] == math.inf


def test_borda_cloning_c_alone_in_the_last_place_profile():
    e = fx.borda_last_place()
    assert list(scores(e, Borda)[:2]) == [12, 13]
    rep = borda_clone_c_analysis(e, "c")
    d = rep.derived
    assert (d["s[a]"], d["n[a]"], d["r_plus"], d["r_minus"]) == (1, 2, 1, math.inf)
    assert rep.strategy.vector.describe(e) == "c=2"
    res = check_success_exact(e, Borda, "c", rep.strategy.vector, ONE, method="enumerate")
    assert res.success and res.checked == 16


@pytest.mark.parametrize("n, k, gains", [(4, 3, [4, 4, 4]), (3, 3, [3, 3, 3]), (3, 2, [2, 1])])
def test_adversarial_ordering_gains(n, k, gains):
    orders = borda_adversarial_ordering(n, k)
    got = [sum(k - 1 - o.index(s) for o in orders) for s in range(k)]
    assert got == gains


def test_adversarial_ordering_needs_three_odd_voters():
    with pytest.raises(Unsupported):
        borda_adversarial_ordering(1, 3)


# k-approval


def test_camera_flooding():
    e = fx.camera_market()
    rep = kapproval_saturate(e, "S", 2)
    assert rep.strategy.vector.describe(e) == "N=20,K=20"
    sc = labelled_scores(expanded(rep), KApproval(2))
    assert sc["S#1"] == 6
    assert all(v <= 1 for x, v in sc.items() if not x.startswith("S"))
    assert expanded(rep).family_won(KApproval(2), "S")


def test_kapproval_without_first_places_is_inconclusive():
    e = Election.from_labels("abc", ["acb", "acb", "bac"])
    assert kapproval_saturate(e, "c", 2).verdict is Verdict.INCONCLUSIVE
    assert kapproval_saturate(fx.camera_market(), "N", 2).verdict is Verdict.ALREADY_WINNER


# copeland


def test_copeland_odd_two_stage_construction():
    e = tournament("cpqrs", "cp pq pr ps qc rc sc qr rs sq")
    assert scores(e, Copeland)[0] == -2 and winners(e, Copeland) == {1}
    rep = copeland_strategy(e, "c")
    assert rep.strategy.vector.describe(e) == "c=11,p=21"
    est = estimate_success_probability(e, Copeland, "c", rep.strategy.vector, 1000, seed=3)
    assert est.estimate == 1


def test_copeland_covered_candidate():
    e = tournament("abcd", "ab bc ca ad bd cd")
    assert copeland_strategy(e, "d").verdict is Verdict.NOT_MANIPULABLE


def test_copeland_tied_cover_system_is_infeasible():
    e = fx.copeland_tied_cover()
    g = majority_graph(e)
    c = e.index("c")
    ys, zs, A, rhs = tied_system(g, c, udt_partition(g, c), scores(e, Copeland))
    assert [e.label(y) for y in ys] == ["a", "b"] and [e.label(z) for z in zs] == ["u", "w"]
    assert list(rhs) == [3, 3]
    assert sorted(map(tuple, A)) == [(-1, 1), (1, -1)]
    assert solve_tied_system(A, rhs, 6)[0] == "infeasible"
    assert copeland_strategy(e, "c").verdict is Verdict.NOT_MANIPULABLE


def test_tied_system_solver():
    A = np.array([[1, -1], [0, 1]])
    status, q = solve_tied_system(A, np.array([2, 1]), 5)
    assert status == "feasible" and list(q) == [3, 1]
    assert solve_tied_system(A, np.array([9, 1]), 3)[0] == "exhausted"


# soundness of every certificate on small random elections

RULES = [Plurality, Veto, Borda, KApproval(2), PluralityRunoff, Maximin, Copeland]


@pytest.mark.parametrize("rule", RULES, ids=str)
def test_certificates_verify(rule):
    for e, c in small_elections(17, 250):
        for mode in (ZERO_PLUS, ONE):
            rep = analyze(e, rule, c, mode, samples=0)
            if rep.verdict is not Verdict.MANIPULABLE:
                continue
            for s in (rep.strategy,) + rep.alternatives:
                cert = s.certificate
                if isinstance(cert, Witness):
                    assert expanded_of(e, s).family_won(rule, c)
                elif isinstance(cert, AllOrderings):
                    assert verify_strategy(e, rule, c, s, limit=10**5) in (True, None)


def expanded_of(e, s):
    return apply_cloning(e, s.vector, s.certificate.assignment)


@settings(max_examples=40, deadline=None)
@given(hs.integers(1, 7), hs.integers(1, 5))
def test_adversarial_ordering_bound(n, k):
    if n % 2 == 1 and n < 3:
        return
    orders = borda_adversarial_ordering(n, k)
    gains = [sum(k - 1 - o.index(s) for o in orders) for s in range(k)]
    assert max(gains) <= math.ceil(n * (k - 1) / 2)
