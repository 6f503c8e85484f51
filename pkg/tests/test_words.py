import random

import pytest
from hypothesis import given, strategies as st

from solenoid_lab.words import (
    GeneratorMismatch,
    GeneratorSet,
    InvalidGenerator,
    MissingImage,
    Presentation,
    Word,
    commutator,
    concat_reduce,
    cyclic_reduce,
    invert,
    parse_word,
    reduce,
    substitute,
)

G = GeneratorSet(("a", "b", "c"))


def w(text, gens=G):
    return parse_word(gens, text)


letters = st.lists(st.tuples(st.integers(0, 2), st.sampled_from([1, -1])), max_size=40)


@st.composite
def words(draw):
    return reduce(G, draw(letters))


@pytest.mark.parametrize(
    "raw, expected",
    [("a a' b", "b"), ("", ""), ("a b b' a", "a a"), ("a' a a' a", ""), ("c b a a' b' c'", "")],
)
def test_reduce_examples(raw, expected):
    assert str(w(raw)) == expected


def test_concat_examples():
    assert str(concat_reduce(w("a b"), w("b' a"))) == "a a"
    assert concat_reduce(w("a b c"), w("")) == w("a b c")
    assert str(concat_reduce(w("a"), w("a'"))) == ""


def test_invert_examples():
    assert str(invert(w("a b"))) == "b' a'"
    assert str(invert(w(""))) == ""
    assert str(invert(w("a a"))) == "a' a'"


def test_commutator_examples():
    assert str(commutator(w("a"), w("b"))) == "a b a' b'"
    assert str(commutator(w("a"), w("a"))) == ""
    # (a b) b (a b)^-1 b^-1 = a b b b' a' b' -> a b a' b'
    assert str(commutator(w("a b"), w("b"))) == "a b a' b'"


def test_substitute_examples():
    k = GeneratorSet(("x",))
    assert str(substitute(w("a b"), {"a": w("x", k), "b": w("x'", k)})) == ""
    assert str(substitute(w("a"), {"a": w("b b")})) == "b b"
    klein = GeneratorSet(("a", "b"))
    r = w("a b a' b", klein)
    assert substitute(r, {"a": w("a", klein), "b": w("b", klein)}) == r


def test_errors():
    with pytest.raises(InvalidGenerator):
        reduce(G, [(3, 1)])
    with pytest.raises(InvalidGenerator):
        w("a d")
    other = GeneratorSet(("a", "b"))
    with pytest.raises(GeneratorMismatch):
        concat_reduce(w("a"), w("a", other))
    with pytest.raises(GeneratorMismatch):
        commutator(w("a"), w("b", other))
    with pytest.raises(MissingImage):
        substitute(w("a b"), {"a": w("c")})


def test_parse_rejects_malformed():
    from solenoid_lab.words import WordError

    for bad in ("a''", "'", "a 'b"):
        with pytest.raises(WordError):
            w(bad)


def test_multichar_names_roundtrip():
    gens = GeneratorSet(("x1", "x10", "Y_2"))
    u = parse_word(gens, "x10 x1' Y_2 Y_2")
    assert parse_word(gens, str(u)) == u


def _reduce_random_order(raw, rng):
    """Cancel adjacent inverse pairs in random order until none are left."""
    seq = list(raw)
    while True:
        spots = [i for i in range(len(seq) - 1) if seq[i][0] == seq[i + 1][0] and seq[i][1] == -seq[i + 1][1]]
        if not spots:
            return tuple(seq)
        i = rng.choice(spots)
        del seq[i : i + 2]


def test_free_reduction_confluent_random_orders():
    rng = random.Random(1234)
    for _ in range(10_000):
        n = rng.randint(0, 64)
        raw = [(rng.randrange(2), rng.choice((1, -1))) for _ in range(n)]
        assert reduce(G, raw).letters == _reduce_random_order(raw, rng)


@given(letters)
def test_reduce_idempotent_and_reduced(raw):
    u = reduce(G, raw)
    assert reduce(G, u.letters) == u
    assert all(not (x[0] == y[0] and x[1] == -y[1]) for x, y in zip(u.letters, u.letters[1:]))


@given(words(), words(), words())
def test_group_axioms(u, v, x):
    e = Word(G, ())
    assert (u * v) * x == u * (v * x)
    assert u * e == u == e * u
    assert u * invert(u) == e == invert(u) * u
    assert invert(u * v) == invert(v) * invert(u)


@given(words(), words(), st.lists(words(), min_size=3, max_size=3), st.lists(words(), min_size=3, max_size=3))
def test_substitute_is_a_homomorphism_and_composes(u, v, f, g):
    fm = dict(enumerate(f))
    gm = dict(enumerate(g))
    assert substitute(u * v, fm) == substitute(u, fm) * substitute(v, fm)
    composed = {i: substitute(f[i], gm) for i in range(3)}
    assert substitute(substitute(u, fm), gm) == substitute(u, composed)


@given(words())
def test_cyclic_reduce_is_a_conjugate(u):
    c = cyclic_reduce(u)
    if c.letters:
        assert not (c.letters[0][0] == c.letters[-1][0] and c.letters[0][1] == -c.letters[-1][1])
    assert len(c) <= len(u)
    # same exponent sums
    sums = lambda z: [sum(s for i, s in z.letters if i == k) for k in range(3)]
    assert sums(c) == sums(u)


def test_presentation_drops_trivial_relators():
    p = Presentation.parse("x y", ["x x'", "y x y'", "x y y' x'"])
    assert [str(r) for r in p.relators] == ["x"]
    assert p.rank == 2
    assert str(Presentation.parse("a b", ["a b a' b"])) == "< a, b | a b a' b >"
