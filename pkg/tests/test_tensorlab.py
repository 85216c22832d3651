import random
from fractions import Fraction

import pytest

from uqtw.conventions import conventions, sbar
from uqtw.freealg import AlgebraElement, gen
from uqtw.pbwengine import central_relation, normalize
from uqtw.qscalar import ONE, Q, ZERO, GaussRat, RatFunc, qpow
from uqtw.tensorlab import (
    SparseMatrix, build_R, build_Ru, central_relations, check_const_reflection, check_rjru,
    check_YBE, diagonal, expand_central, expand_reflection, identity, matrix_C, matrix_J,
    pair_index, r_matrix_terms, symbolic_S, transpose,
)

h = Q - Q.inverse()


def R_oracle(n):
    """Dense dict of R written straight from the defining sum."""
    N = 2 * n
    bar = {i: n + 1 - i if i <= n else n - i for i in range(1, N + 1)}
    eps = {i: 1 if i <= n else -1 for i in range(1, N + 1)}
    prime = {i: N + 1 - i for i in range(1, N + 1)}
    out = {}

    def add(i, j, k, l, c):
        key = ((i, k), (j, l))
        out[key] = out.get(key, ZERO) + c

    for i in range(1, N + 1):
        for j in range(1, N + 1):
            e = (1 if i == j else 0) - (1 if i == prime[j] else 0)
            add(i, i, j, j, Q ** e)
            if i < j:
                add(i, j, j, i, h)
                add(i, j, prime[i], prime[j], -h * Q ** (bar[j] - bar[i]) * eps[i] * eps[j])
    return {k: v for k, v in out.items() if not v.is_zero()}


def R_entry(R, n, i, k, j, l):
    N = 2 * n
    return R[(pair_index(i, k, N), pair_index(j, l, N))]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_R_matches_oracle(n):
    R = build_R(n)
    want = R_oracle(n)
    N = 2 * n
    got = {}
    for (r, c), v in R.entries.items():
        got[((r // N + 1, r % N + 1), (c // N + 1, c % N + 1))] = v
    assert got == want


def test_R_examples_n1():
    R = build_R(1)
    assert R_entry(R, 1, 1, 1, 1, 1) == Q
    diag, exch, twist = r_matrix_terms(1)
    assert [(i, j, k, l) for i, j, k, l, _ in exch] == [(1, 2, 2, 1)]
    assert exch[0][4] == h
    # third sum at i=1, j=2: -(q-q^-1) q^(bar2-bar1) eps1 eps2 = (q-q^-1) q^-2
    assert [(t[:4], t[4]) for t in twist] == [((1, 2, 2, 1), h * Q ** -2)]
    # both sums land on e_12 (x) e_21
    assert R_entry(R, 1, 1, 2, 2, 1) == h * (ONE + Q ** -2)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_ybe(n):
    assert check_YBE(n)


def test_transpositions():
    rng = random.Random(5)
    for n in (1, 2):
        N = 2 * n
        M = SparseMatrix(N, {(r, c): RatFunc.coerce(rng.randint(-4, 4)) * Q ** rng.randint(-2, 2)
                             for r in range(N) for c in range(N)})
        for kind in ("t", "u", "ut"):
            assert transpose(transpose(M, n, kind), n, kind) == M
        assert transpose(transpose(M, n, "t"), n, "u") == transpose(transpose(M, n, "u"), n, "t")
        assert transpose(transpose(M, n, "u"), n, "t") == transpose(M, n, "ut")
    e12 = SparseMatrix(2, {(0, 1): ONE})
    assert transpose(e12, 1, "u") == SparseMatrix(2, {(1, 0): ONE})
    assert transpose(e12, 1, "ut") == SparseMatrix(2, {(1, 0): -ONE})


def admissible_C(n, rng):
    top = [Fraction(rng.randint(1, 9), rng.randint(1, 9)) * rng.choice((1, -1)) for _ in range(n)]
    lam = Fraction(rng.randint(1, 9)) * rng.choice((1, -1))
    vals = top + [lam / v for v in reversed(top)]
    return matrix_C([RatFunc.coerce(v) for v in vals])


@pytest.mark.parametrize("n", [1, 2, 3])
def test_constant_reflection(n):
    assert check_const_reflection(matrix_J(n), n)
    rng = random.Random(n)
    for _ in range(5):
        assert check_const_reflection(admissible_C(n, rng), n)
    # sqrt(-1) J as well
    i = RatFunc.coerce(GaussRat(0, 1))
    c = conventions(n)
    assert check_const_reflection(diagonal([i * c.eps(k) for k in c.indices()]), n)


def test_identity_solves_at_rank_one():
    assert check_const_reflection(identity(2), 1)


def test_inadmissible_C_fails():
    assert not check_const_reflection(matrix_C([RatFunc.coerce(v) for v in (1, 2, 3, 5)]), 2)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_rjru(n):
    res = check_rjru(n)
    assert res["RJ1RuJ2"]
    assert not res["J1"] and not res["J2"]


def test_symbolic_S():
    S = symbolic_S(1)
    assert S[(0, 0)] == AlgebraElement.scalar(1, 1)
    assert S[(1, 1)] == AlgebraElement.scalar(1, -1)
    assert S[(1, 0)] == gen(1, 2, 1)
    assert (0, 1) not in S.entries
    assert symbolic_S(2)[(2, 2)] == AlgebraElement.scalar(2, -1)


def test_central_examples():
    # n = 1: sbar_11 s_11 + 1 = 0 holds identically, nothing survives
    assert sbar(1, 1, 1) == AlgebraElement.scalar(1, -1)
    assert expand_central(1) == []
    assert expand_reflection(1) == []
    assert central_relations(2)[(4, 3)] == central_relation(4, 3, 2)


@pytest.mark.parametrize("n", [1, 2])
def test_expanded_relations_hold(n):
    for r in expand_reflection(n) + expand_central(n):
        assert normalize(r).is_zero()
