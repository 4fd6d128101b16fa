"""
Copeland and the uncovered set
==============================

For an odd number of voters, cloning can make c a Copeland winner exactly
when no other candidate covers it. With an even number of voters that is no
longer enough: ties turn the question into a small integer system, and in
this election c is uncovered but the system has no solution.
"""

# %%
from clonevote import Copeland, ZERO_PLUS, ZeroCost, analyze, brute_force_search, majority_graph, uncovered_set
from clonevote import fixtures as fx
from clonevote.oracle import SearchCaps

spec = fx.copeland_tied_cover_spec()
e = fx.copeland_tied_cover()
print(e.n, "voters realize the relation:", majority_graph(e) == spec.graph())
print("uncovered:", sorted(e.label(j) for j in uncovered_set(majority_graph(e))))

# %%
rep = analyze(e, Copeland, "c", ZERO_PLUS)
print(rep.summary())

# %%
# A brute-force check with up to two extra copies (three take about half a minute).
res = brute_force_search(e, Copeland, "c", ZERO_PLUS, ZeroCost, caps=SearchCaps(2, 10**7))
print("oracle:", res.status, "after", res.examined, "vectors")
