# %% [markdown]
# Towers of normal subgroups
#
# A tower G > N_1 > N_2 > ... gives finite quotients G/N_n with transition
# maps between them.  The analyzer looks for non-commuting pairs that
# survive in some finite quotient, level by level.

# %%
from solenoid_lab import catalog
from solenoid_lab import tower as T

dy = T.Tower(T.dyadic(6))
print([dy.level(n).order for n in range(7)])
print(dy.bihomogeneity_report().label())

# %%
# Klein bottle, N_i = <a^(2^i), b^(2^i)>: the base is nonabelian, but N_1
# is a torus group, so the tower is bihomogeneous from level 1 on.
kl = T.Tower(T.klein(3))
v = kl.bihomogeneity_report()
for c in v.certificates:
    print(c.level, c.status.value, c.reason)
print(v.label())

# %%
# Genus 2 over S3: the witness for N_1 comes from a map onto A5; the search
# folds its kernel in as a new level.
g2 = T.Tower(T.genus2_s3(2))
v = g2.bihomogeneity_report()
print(v.label(), "levels:", [g2.level(n).order for n in range(g2.top + 1)])
for w in v.witnesses:
    print(f"level {w.level}: u = {w.u}, v = {w.v} in {w.quotient}; verified {g2.verify_witness(w)}")

# %%
# Nonmembership in the kernel: the first level where a word survives.
k = catalog.KLEIN_BOTTLE
print(kl.kernel_nonmembership_witness(k.word("a b a' b'"), 3))
