"""
Maximin: cyclic copies and random copies
========================================

Cycling the copies of a strong rival drops each copy's worst pairwise
score. Random clone orders almost never do that, which the permutation
experiment measures directly.
"""

# %%
from clonevote import ZERO_PLUS, Maximin, analyze, apply_cloning, k_cyclic_profile, pnk_experiment, scores
from clonevote import fixtures as fx

print("cyclic profile scores:", scores(k_cyclic_profile(5), Maximin).tolist())

# %%
e = fx.maximin_cyclic_split()
rep = analyze(e, Maximin, "c", ZERO_PLUS)
print(rep.summary())
ex = apply_cloning(e, rep.strategy.vector, rep.strategy.certificate.assignment)
print(dict(zip(ex.election.candidates, scores(ex.election, Maximin).tolist())))

# %%
# How often do n random orders of k items leave some item with every other
# item ahead of it at least once? Rarely, for n = 5 and k = 20.
res = pnk_experiment(5, 20, 20_000, seed=1)
print(f"P(5,20) ~ {float(res.estimate):.5f} ({res.successes} of {res.trials})")
