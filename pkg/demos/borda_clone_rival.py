"""
Borda: clone the rival, not yourself
====================================

Four voters, a wins with 9 points and c trails with 8. Cloning c only
makes things worse, while copies of b sit between a and c on three ballots
and push a's score up less than c's.
"""

# %%
from clonevote import ONE, Borda, UnitCost, analyze, brute_force_search, check_success_exact, scores
from clonevote import fixtures as fx

e = fx.borda_clone_rival()
print(dict(zip(e.candidates, scores(e, Borda).tolist())))

# %%
# Cloning c alone: the report explains why no number of copies succeeds
# under every ordering.
rep = analyze(e, Borda, "c", ONE, only_preferred=True)
print(rep.summary())
print("r_plus =", rep.derived["r_plus"])

# %%
# Three copies of b: check all 6**4 = 1296 clone orderings.
res = check_success_exact(e, Borda, "c", (1, 3, 1, 1), ONE, method="enumerate")
print(res.status, "after", res.checked, "orderings")

# %%
# The cheapest cloning that works under every ordering, by brute force.
best = brute_force_search(e, Borda, "c", ONE, UnitCost)
print(best.status, best.vector.describe(e), "cost", best.cost)
