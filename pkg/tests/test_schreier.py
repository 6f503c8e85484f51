import pytest
from hypothesis import given, settings, strategies as st

from solenoid_lab import catalog
from solenoid_lab.cosets import SubgroupSpec, contains, coset_table_from_action, enumerate_cosets, trace
from solenoid_lab.finite import from_permutations, iter_homomorphisms, parse_cycles
from solenoid_lab.schreier import (
    AbelianStatus,
    certify_abelian,
    expand,
    rewrite_subgroup_presentation,
    schreier_generators,
    simplify,
    simplify_presentation,
    subgroup_data,
)
from solenoid_lab.words import Presentation

Z = catalog.FREE_CYCLIC


def free(r):
    return Presentation.parse(" ".join("abc"[:r]), [])


def sub(p, *texts):
    return SubgroupSpec(tuple(p.word(t) for t in texts))


def test_schreier_generator_examples():
    t = enumerate_cosets(Z, sub(Z, "a a"))
    data = schreier_generators(t)
    assert [str(w) for w in data.words] == ["a a"]
    F2 = free(2)
    t3 = enumerate_cosets(F2, sub(F2, "a", "b b b", "b a b'", "b' a b"))
    assert t3.index == 3
    assert len(schreier_generators(t3)) == 4


@settings(max_examples=60)
@given(st.integers(1, 3), st.integers(1, 6), st.data())
def test_nielsen_schreier_rank(r, n, data):
    """Subgroups of index n in a free group of rank r are free of rank 1 + n(r - 1)."""
    p = free(r)
    perms = [data.draw(st.permutations(range(n))) for _ in range(r)]
    act = coset_table_from_action(p, perms)
    # the index is the orbit size of point 0
    n = act.index
    # re-enumerate from the explicit subgroup generators only
    t = enumerate_cosets(p, act.subgroup, 10**4)
    assert t.index == n
    s = simplify(rewrite_subgroup_presentation(t))
    assert s.presentation.relators == ()
    assert s.presentation.rank == 1 + n * (r - 1)


def test_schreier_words_lie_in_subgroup():
    p = catalog.presentation("S4")
    t = enumerate_cosets(p, sub(p, "x", "y x y'"))
    for u in schreier_generators(t).words:
        assert contains(t, u)


@pytest.mark.parametrize("name, gens", [("S4", ("x",)), ("A4", ("y",)), ("D6", ("r r",)), ("Q8", ("x",))])
def test_rewritten_relators_are_trivial_in_the_ambient_group(name, gens):
    p = catalog.presentation(name)
    t = enumerate_cosets(p, sub(p, *gens))
    whole = enumerate_cosets(p, SubgroupSpec(()))
    data = subgroup_data(t)
    for r in data.presentation.relators:
        assert trace(whole, 0, expand(data, r)) == 0
    # and the subgroup it presents has the right order
    order = catalog.known_order(name) // t.index
    assert enumerate_cosets(data.presentation, SubgroupSpec(())).index == order


def test_free_rank_one_subgroup_presentation():
    t = enumerate_cosets(Z, sub(Z, "a a"))
    sp = rewrite_subgroup_presentation(t)
    assert sp.rank == 1 and sp.relators == ()


def _genus2_kernel(target_perms, degree):
    perms = [parse_cycles(c, degree) for c in target_perms]
    g = from_permutations(perms)
    reg = [[g.mul(x, y) for x in range(g.order)] for y in g.gen_images]
    return coset_table_from_action(catalog.GENUS2, reg)


@pytest.mark.parametrize(
    "images, degree, index, gens",
    [
        (("(1 2)", "()", "()", "()"), 2, 2, 6),
        (("(1 2)", "(1 3)", "(1 3)", "(1 2)"), 3, 6, 14),
    ],
)
def test_surface_subgroups(images, degree, index, gens):
    t = _genus2_kernel(images, degree)
    assert t.index == index
    sp = simplify_presentation(rewrite_subgroup_presentation(t))
    # Euler characteristic: 2 - 2g' = index * (2 - 2*2)
    assert (sp.rank, len(sp.relators)) == (gens, 1)
    assert 2 - sp.rank == index * (2 - 4)
    # the single relator is a product of commutators: every generator twice, opposite signs
    [r] = sp.relators
    for i in range(sp.rank):
        assert sorted(s for k, s in r.letters if k == i) == [-1, 1]


def test_klein_double_cover_is_a_torus():
    k = catalog.KLEIN_BOTTLE
    t = enumerate_cosets(k, sub(k, "a a", "b"))
    assert t.index == 2
    sp = simplify_presentation(rewrite_subgroup_presentation(t))
    assert sp.rank == 2 and len(sp.relators) == 1
    [r] = sp.relators
    assert len(r) == 4
    for i in range(2):
        assert sorted(s for k_, s in r.letters if k_ == i) == [-1, 1]
    assert certify_abelian(sp).status is AbelianStatus.CERTIFIED_ABELIAN


def test_simplify_examples():
    assert str(simplify_presentation(Presentation.parse("x y", ["y"]))) == "< x |  >"
    assert simplify_presentation(Presentation.parse("x", ["x x'"])).relators == ()
    s = simplify(Presentation.parse("x y z", ["z x y'", "x y x' y'"]))
    assert s.presentation.rank == 2 and "z" in s.eliminated


def test_simplify_budget():
    t = _genus2_kernel(("(1 2)", "(1 3)", "(1 3)", "(1 2)"), 3)
    s = simplify(rewrite_subgroup_presentation(t), budget=5)
    assert s.budget_exhausted
    assert s.presentation.rank == 19


def test_certify_abelian_examples():
    assert certify_abelian(Presentation.parse("x", [])).status is AbelianStatus.CERTIFIED_ABELIAN
    torus = Presentation.parse("x y", ["x y x' y'"])
    assert certify_abelian(torus).status is AbelianStatus.CERTIFIED_ABELIAN
    g2 = catalog.GENUS2
    a5 = catalog.group("A5")
    psi = next(iter_homomorphisms(g2, a5, surjective_only=True))
    cert = certify_abelian(g2, quotients=[(a5, psi)])
    assert cert.status is AbelianStatus.CERTIFIED_NONABELIAN_WITNESS
    u = cert.witness
    assert a5.evaluate(u, psi) != 0
    # without a witness the surface group stays undecided
    assert certify_abelian(g2, budget=2000).status is AbelianStatus.UNKNOWN


def test_certify_abelian_finite_groups():
    for name in ("Z6xZ2", "Z2xZ2xZ2", "Z4xZ2"):
        assert certify_abelian(catalog.presentation(name)).status is AbelianStatus.CERTIFIED_ABELIAN
    for name in ("S3", "Q8", "A4"):
        c = certify_abelian(catalog.presentation(name))
        assert c.status is AbelianStatus.CERTIFIED_NONABELIAN_WITNESS
        g = catalog.group(name)
        assert g.evaluate(c.witness) != 0


def test_certify_ignores_bogus_quotients():
    s3 = catalog.group("S3")
    torus = Presentation.parse("x y", ["x y x' y'"])
    # images that do not kill the relator are not a witness
    c = certify_abelian(torus, quotients=[(s3, (s3.gen_images[0], s3.gen_images[1]))])
    assert c.status is AbelianStatus.CERTIFIED_ABELIAN
