"""
Cloning under Plurality and Plurality with runoff
=================================================

Two short stories: a minority candidate who wins once the majority
candidate is split, and a first-round leader who loses every head-to-head
race until it brings a copy of itself into the final.
"""

# %%
# Splitting the majority
# ----------------------
# 13 voters prefer c, 23 prefer r. Two copies of r share those 23 first
# places, and c's 13 are enough.
from clonevote import ONE, ZERO_PLUS, Plurality, PluralityRunoff, analyze, apply_cloning, winners
from clonevote import fixtures as fx

e = fx.two_way_split()
rep = analyze(e, Plurality, "c", ZERO_PLUS)
print(rep.summary())

ex = apply_cloning(e, rep.strategy.vector, rep.strategy.certificate.assignment)
print("winners after cloning:", [ex.election.label(j) for j in sorted(winners(ex.election, Plurality))])

# %%
# No Plurality cloning works for every clone ordering: if all voters order
# the copies the same way, the top copy inherits every first place.
print(analyze(e, Plurality, "c", ONE).summary())

# %%
# The runoff
# ----------
# c has 8 of 17 first places but loses each pairwise contest, so whoever
# meets c in the final beats it. With two copies of c, the copies take the
# final between them.
e = fx.runoff_condorcet_loser()
print("winners:", sorted(e.label(j) for j in winners(e, PluralityRunoff)))
rep = analyze(e, PluralityRunoff, "c", ZERO_PLUS)
print(rep.summary())
for line in rep.strategy.certificate.assignment.describe(e, rep.strategy.vector)[:3]:
    print("  ", line)
