# %% [markdown]
# Subgroup presentations
#
# Reidemeister-Schreier rewriting turns a coset table into a presentation
# of the subgroup; Tietze moves then shrink it.  Covers of a genus-2
# surface come out as surface groups of the expected genus.

# %%
from solenoid_lab import catalog
from solenoid_lab.cosets import SubgroupSpec, enumerate_cosets
from solenoid_lab.schreier import certify_abelian, rewrite_subgroup_presentation, simplify
from solenoid_lab import tower as T

from solenoid_lab.words import Presentation

f2 = Presentation.parse("a b")
t = enumerate_cosets(f2, SubgroupSpec((f2.word("a a"), f2.word("b"), f2.word("a b a'"))))
raw = rewrite_subgroup_presentation(t)
print("index", t.index, "->", raw.rank, "Schreier generators")
print(simplify(raw).presentation)          # free of rank 1 + 2*(2-1) = 3

# %%
# Genus 2, kernel of a map onto S3: index 6, so a genus-7 surface (14 generators).
tw = T.Tower(T.genus2_s3(1))
tw.ensure(1)
s = simplify(rewrite_subgroup_presentation(tw.tables[1]))
p = s.presentation
print(p.rank, "generators,", len(p.relators), "relator of length", len(p.relators[0]))

# %%
# The Klein bottle's orientation double cover is a torus: abelian, and the
# certificate says so from the single commutator relator.
k = catalog.KLEIN_BOTTLE
t2 = enumerate_cosets(k, SubgroupSpec((k.word("a a"), k.word("b"))))
sp = simplify(rewrite_subgroup_presentation(t2)).presentation
print(sp)
print(certify_abelian(sp).status)
