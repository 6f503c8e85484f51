# %% [markdown]
# Finite solenoid models
#
# A finite group Gamma, a chain of subgroups and a subgroup gamma with
# gamma . Gamma_k = Gamma stand in for the structure group of a solenoid.
# Path components are left cosets of gamma; bihomogeneity is checked both
# from its definition (component swaps) and through the inverse criterion.

# %%
from solenoid_lab import catalog
from solenoid_lab.finite import Subgroup, subgroup_generated
from solenoid_lab.model import (
    FiniteSolenoidModel,
    abelian_model,
    inverse_criterion_check,
    is_algebraically_bihomogeneous_definitional,
    model_catalog,
    v_sets_cover_check,
)

g = catalog.group("S3")
x, y = g.gen_images
a3 = subgroup_generated(g, [y])
m = FiniteSolenoidModel(g, (Subgroup.whole(g), a3), subgroup_generated(g, [x]))
print(m.describe())
print("components:", len(m.components))
d = is_algebraically_bihomogeneous_definitional(m)
inv = inverse_criterion_check(m)
print("definitional:", d.holds, " inverse criterion:", inv.holds, " V-sets cover:", v_sets_cover_check(m))

# %%
# The same comparison over every model on groups of order 4 and 6.
models = model_catalog(catalog.groups_of_order(4, 6), max_chain_steps=2)
agree = sum(is_algebraically_bihomogeneous_definitional(m).holds == inverse_criterion_check(m).holds for m in models)
print(f"{agree}/{len(models)} models agree;", sum(map(abelian_model, models)), "are abelian")
