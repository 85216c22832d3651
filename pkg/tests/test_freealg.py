import pytest
from hypothesis import given, strategies as st

from uqtw.freealg import (
    AlgebraElement, BadGenerator, MissingImage, RankMismatch, all_generators, gen,
    is_omega1, is_omega2, stats, word_key,
)
from uqtw.qscalar import Q, GaussRat, RatFunc

N = 2
GENS = all_generators(N)
s21, s31, s32 = gen(N, 2, 1), gen(N, 3, 1), gen(N, 3, 2)


@st.composite
def elements(draw, n=N):
    gens = all_generators(n)
    x = AlgebraElement.zero(n)
    for _ in range(draw(st.integers(0, 3))):
        w = draw(st.lists(st.sampled_from(gens), max_size=3))
        c = RatFunc.coerce(GaussRat(draw(st.integers(-3, 3)), draw(st.integers(-1, 1))))
        x = x + AlgebraElement.word(n, w, c * Q ** draw(st.integers(-2, 2)))
    return x


def test_unit_and_distributivity():
    one = AlgebraElement.one(N)
    assert one * s21 == s21 == s21 * one
    assert (s21 + s31) * s32 == AlgebraElement.word(N, [(2, 1), (3, 2)]) + AlgebraElement.word(N, [(3, 1), (3, 2)])
    assert (s21.scale(Q) * s21.scale(Q.inverse())) == AlgebraElement.word(N, [(2, 1), (2, 1)])


def test_rank_mismatch():
    with pytest.raises(RankMismatch):
        gen(1, 2, 1) * gen(2, 2, 1)


def test_bad_generator():
    with pytest.raises(BadGenerator):
        gen(2, 1, 2)
    with pytest.raises(BadGenerator):
        gen(2, 5, 1)


def test_substitute_examples():
    x = s21 * s31
    assert x.substitute({(2, 1): s31, (3, 1): s21}) == s31 * s21
    ident = {g: gen(N, *g) for g in GENS}
    assert x.substitute(ident) == x
    assert s21.scale(Q).substitute({(2, 1): -s21}) == -s21.scale(Q)
    with pytest.raises(MissingImage):
        x.substitute({(2, 1): s21})


def test_stats():
    assert stats(((3, 1), (4, 1))) == (2, 7)
    assert stats(()) == (0, 0)
    assert stats(((2, 1),) * 3) == (3, 6)


def test_omega_classes():
    # n^2 band generators, the rest eliminable
    for n in (1, 2, 3, 4):
        gens = all_generators(n)
        assert len(gens) == n * (2 * n - 1)
        assert sum(is_omega1(g, n) for g in gens) == n * n
        assert all(is_omega1(g, n) != is_omega2(g, n) for g in gens)


@given(elements(), elements(), elements())
def test_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert (x + y) * z == x * z + y * z
    assert x - x == AlgebraElement.zero(N)


@given(elements(), elements(), st.permutations(GENS))
def test_substitute_is_multiplicative(x, y, perm):
    images = {g: gen(N, *p) + gen(N, *g).scale(Q) for g, p in zip(GENS, perm)}
    assert (x * y).substitute(images) == x.substitute(images) * y.substitute(images)


@given(st.lists(st.sampled_from(GENS), max_size=4), st.lists(st.sampled_from(GENS), max_size=4))
def test_stats_additive(u, v):
    a, b = stats(tuple(u)), stats(tuple(v))
    assert stats(tuple(u + v)) == (a[0] + b[0], a[1] + b[1])


def test_canonical_order():
    x = s32 * s21 + s21 + AlgebraElement.scalar(N, 1) + s21 * s21
    keys = [word_key(w) for w, _ in x.sorted_terms()]
    assert keys == sorted(keys)
    assert [len(w) for w, _ in x.sorted_terms()] == [0, 1, 2, 2]
