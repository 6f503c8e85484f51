from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from solenoid_lab import catalog
from solenoid_lab.cosets import SubgroupSpec, enumerate_cosets
from solenoid_lab.finite import (
    GroupAxiomError,
    NotNormal,
    OrderBoundExceeded,
    Subgroup,
    all_subgroups,
    automorphisms,
    direct_product,
    enumerate_homomorphisms,
    enumerate_monomorphisms_filtered,
    from_normal_coset_table,
    from_permutations,
    from_table,
    inner_automorphism,
    is_abelian,
    is_simple,
    left_coset_space,
    normal_subgroups,
    parse_cycles,
    subgroup_generated,
)

from oracles import automorphism_count_bruteforce, group_axioms_hold, hom_count_bruteforce, klein_quotient, subgroups_bruteforce

Z = catalog.FREE_CYCLIC


def order_profile(g):
    return sorted(Counter(g.element_order(x) for x in range(g.order)).items())


def test_from_normal_coset_table_examples():
    z8 = from_normal_coset_table(enumerate_cosets(Z, SubgroupSpec((Z.word("a " * 8),))))
    assert z8.order == 8 and is_abelian(z8) and max(z8.element_order(x) for x in range(8)) == 8
    with pytest.raises(NotNormal):
        p = catalog.presentation("S3")
        from_normal_coset_table(enumerate_cosets(p, SubgroupSpec((p.word("x"),))))


def test_klein_level_two_quotient():
    k = catalog.KLEIN_BOTTLE
    t = enumerate_cosets(k, SubgroupSpec((k.word("a a a a"), k.word("b b b b"))))
    g = from_normal_coset_table(t)
    oracle, _ = klein_quotient(2)
    assert g.order == len(oracle) == 16
    assert not is_abelian(g)
    assert order_profile(g) == order_profile(from_table(oracle))
    a, b = g.gen_images
    assert g.mul(g.mul(a, b), g.inv(a)) == g.inv(b) and g.element_order(b) == 4


def test_is_abelian_examples():
    assert is_abelian(catalog.group("Z8"))
    assert not is_abelian(catalog.group("S3"))
    assert not is_abelian(catalog.group("Q8"))


def test_subgroup_generated_examples(s3):
    assert subgroup_generated(s3, []).order == 1
    assert subgroup_generated(s3, [s3.gen_images[0]]).order == 2
    z8 = catalog.group("Z8")
    a = z8.gen_images[0]
    two = z8.mul(a, a)
    assert subgroup_generated(z8, [two]).members == tuple(sorted({0, two, z8.mul(two, two), z8.mul(z8.mul(two, two), two)}))


def test_left_coset_examples(s3):
    assert len(left_coset_space(s3, Subgroup.whole(s3))) == 1
    assert len(left_coset_space(s3, Subgroup.trivial(s3))) == 6
    cs = left_coset_space(s3, subgroup_generated(s3, [s3.gen_images[0]]))
    assert len(cs) == 3
    for rep, blk in zip(cs.representatives, cs.blocks):
        assert rep == min(blk) and len(blk) == 2


@pytest.mark.parametrize("name", ["S3", "D4", "Q8", "A4", "Z6xZ2", "Dic3"])
def test_lagrange_and_subgroup_lattice(name):
    g = catalog.group(name)
    subs = all_subgroups(g)
    assert {frozenset(s.members) for s in subs} == set(subgroups_bruteforce(g.table))
    for h in subs:
        assert len(left_coset_space(g, h)) * h.order == g.order
    normal = {frozenset(s.members) for s in normal_subgroups(g)}
    for h in subs:
        conj = all(g.mul(g.mul(x, y), g.inv(x)) in h.member_set for x in range(g.order) for y in h.members)
        assert conj == (frozenset(h.members) in normal)


def test_homomorphism_examples(s3):
    z2 = catalog.group("Z2")
    assert len(enumerate_homomorphisms(Z, z2)) == 2
    g2 = catalog.GENUS2
    perm = from_permutations([parse_cycles("(1 2)", 3), parse_cycles("(1 3)", 3)])
    a, b = perm.gen_images
    assert (a, b, b, a) in set(enumerate_homomorphisms(g2, perm))
    assert len(enumerate_homomorphisms(catalog.presentation("S3"), s3, surjective_only=True)) == 6


SMALL = ["Z1", "Z2", "Z3", "Z4", "Z6", "Z2xZ2", "S3", "D4", "Q8", "Z4xZ2", "A4", "Dic3"]


@pytest.mark.parametrize("src", SMALL)
def test_hom_counts_against_bruteforce(src):
    p = catalog.presentation(src)
    for tgt in SMALL:
        q = catalog.group(tgt)
        assert len(enumerate_homomorphisms(p, q)) == hom_count_bruteforce(p, q.table), (src, tgt)


def test_hom_lists_are_sorted_and_valid():
    q = catalog.group("D4")
    homs = enumerate_homomorphisms(catalog.presentation("Q8"), q)
    assert homs == sorted(homs)


@pytest.mark.parametrize("name, count", [("Z2", 1), ("S3", 6), ("Z8", 4), ("Z2xZ2", 6), ("D4", 8), ("Q8", 24), ("Z4xZ2", 8)])
def test_automorphism_counts(name, count):
    g = catalog.group(name)
    auts = automorphisms(g)
    assert len(auts) == count == automorphism_count_bruteforce(g.table)
    assert all(f.is_homomorphism() and f.is_injective for f in auts)


def test_automorphism_bound():
    with pytest.raises(OrderBoundExceeded):
        automorphisms(catalog.group("A5"), bound=59)
    assert len(automorphisms(catalog.group("A4"))) == 24


def test_filtered_monomorphism_examples(s3):
    z8 = catalog.group("Z8")
    w = Subgroup.whole(z8)
    assert len(enumerate_monomorphisms_filtered((w, w), (z8, w))) == 4
    x = subgroup_generated(s3, [s3.gen_images[0]])
    whole = Subgroup.whole(s3)
    maps = enumerate_monomorphisms_filtered((whole, x), (s3, x))
    assert len(maps) == 2
    assert {f.images for f in maps} == {inner_automorphism(s3, e).images for e in x.members}
    a3 = subgroup_generated(s3, [s3.gen_images[1]])
    on_a3 = enumerate_monomorphisms_filtered((a3, x.intersect(a3)), (s3, x))
    assert len(on_a3) == 2
    assert any(all(f(y) == s3.inv(y) for y in a3.members) for f in on_a3)


@pytest.mark.parametrize("name", ["S3", "D4", "Q8", "A4", "Z4xZ2", "D6"])
def test_filtered_monomorphisms_closed_under_inner_by_gamma(name):
    g = catalog.group(name)
    for gamma in all_subgroups(g):
        for dom in (Subgroup.whole(g),) + tuple(normal_subgroups(g))[:3]:
            maps = enumerate_monomorphisms_filtered((dom, gamma.intersect(dom)), (g, gamma))
            keys = {f.key for f in maps}
            for f in maps:
                for e in gamma.members:
                    inner = inner_automorphism(g, e)
                    assert f.compose(inner).key in keys


def test_is_simple():
    assert is_simple(catalog.group("A5")) and is_simple(catalog.group("Z5"))
    assert not is_simple(catalog.group("A4")) and not is_simple(catalog.group("S4"))


def test_check_axioms_catches_bad_tables():
    t = catalog.group("S3").table.copy()
    t[1, 2], t[1, 3] = t[1, 3], t[1, 2]
    with pytest.raises(GroupAxiomError):
        from_table(t).check_axioms()


@settings(max_examples=25)
@given(st.sampled_from(SMALL), st.sampled_from(SMALL))
def test_direct_products_satisfy_axioms(a, b):
    g = direct_product(catalog.group(a), catalog.group(b))
    assert g.order == catalog.known_order(a) * catalog.known_order(b)
    assert group_axioms_hold(g.table)
    assert is_abelian(g) == (is_abelian(catalog.group(a)) and is_abelian(catalog.group(b)))


@settings(max_examples=30)
@given(st.permutations(range(5)), st.permutations(range(5)))
def test_permutation_groups(p, q):
    g = from_permutations([p, q])
    assert group_axioms_hold(g.table)
    assert 120 % g.order == 0
    # the evaluation of generator words agrees with the permutations
    perms = g.permutations
    for x in range(g.order):
        w = g.word_of(x)
        v = tuple(range(5))
        for i, s in w.letters:
            assert s == 1
            v = tuple((p, q)[i][v[k]] for k in range(5))
        assert v == perms[x]


def test_parse_cycles():
    assert parse_cycles("(1 2)(3 4)") == (1, 0, 3, 2)
    assert parse_cycles("()", 3) == (0, 1, 2)
    with pytest.raises(ValueError):
        parse_cycles("(1 1)")
