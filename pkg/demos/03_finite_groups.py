# %% [markdown]
# Finite groups and homomorphisms
#
# Finite groups are multiplication tables with element 0 as the identity.
# Homomorphisms from a presentation are found by backtracking over
# generator images.

# %%
from solenoid_lab import catalog
from solenoid_lab.finite import all_subgroups, automorphisms, enumerate_homomorphisms, is_simple, normal_subgroups

a5 = catalog.group("A5")
print(a5.name, a5.order, "simple:", is_simple(a5))

s4 = catalog.group("S4")
print("S4 subgroups:", len(all_subgroups(s4)), "normal:", len(normal_subgroups(s4)))
print("|Aut(D4)| =", len(automorphisms(catalog.group("D4"))))

# %%
# Surjections from the genus-2 group onto S3.
homs = enumerate_homomorphisms(catalog.GENUS2, catalog.group("S3"), surjective_only=True)
print(len(homs), "surjections G -> S3; first:", homs[0])
