# %% [markdown]
# Words and coset tables
#
# Words are reduced as they are built. A coset table records how each
# generator moves the right cosets of a subgroup, numbered from 0.

# %%
from solenoid_lab import catalog
from solenoid_lab.cosets import SubgroupSpec, contains, enumerate_cosets, is_normal, permutation_rep, trace
from solenoid_lab.words import commutator

k = catalog.KLEIN_BOTTLE
u = k.word("a b b' a'")
print("reduced:", repr(str(u)))           # the empty word
print("[a, b] =", commutator(k.word("a"), k.word("b")))

# %%
# The subgroup <a^2, b^2> of the Klein bottle group has index 4 and is normal.
t = enumerate_cosets(k, SubgroupSpec((k.word("a a"), k.word("b b"))))
print("index", t.index, "normal", is_normal(t))
for c, row in enumerate(t.rows):
    print(c, row, t.representatives[c] or "e")

# %%
# Tracing a word from coset 0 says whether it lies in the subgroup.
for w in ("a a", "a b", "b a b a'"):
    print(w, "->", trace(t, 0, k.word(w)), "member:", contains(t, k.word(w)))

# %%
# The trivial subgroup of a finite presentation gives the regular action.
s3 = catalog.presentation("S3")
reg = enumerate_cosets(s3, SubgroupSpec(()))
print("|S3| =", reg.index)
print(permutation_rep(reg))
