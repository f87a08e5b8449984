# How many ways can a monodromy be written as a product of positive twists?
# A bounded search over curves with the right hole sets, then grouping up to
# global conjugation.

# %%
from planarmcg import (
    SearchConfig,
    enumerate_factorizations,
    h1,
    multiplicity_profile,
    paper_family,
    profile_multisets,
    verify_unique_filling,
)

# tau_1 tau_2 tau_3 tau_5 tau_B1 tau_B2 on D_5
F = paper_family(3, 2, 1, 1, [1, 1, 1, None, 1])
for c in F:
    print(c.enclosed, c.conjugator)

# %% counts of factors around each hole and each pair of holes
p = multiplicity_profile(F)
print("M =", p.M)
print("J =", p.pairs())
print("hole sets compatible with these counts:", profile_multisets(p))

# %%
cfg = SearchConfig(conjugator_bound=2, dedupe_bound=2)
for cls in enumerate_factorizations(F, cfg):
    print(cls.members_found, "solutions, target here:", cls.contains_target)
    print("  ", h1(cls.representative).summary())

# %% the smaller base case has two candidate classes at these bounds
base = paper_family(1, 1, 1, 1)
for bound in (3, 5):
    r = verify_unique_filling(base, SearchConfig(conjugator_bound=3, dedupe_bound=bound))
    print(f"dedupe {bound}: {r['class_count']} classes, invariants agree: {r['all_invariants_equal']}")
