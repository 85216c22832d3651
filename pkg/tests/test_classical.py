import itertools
from fractions import Fraction

import pytest

from uqtw.classical import (
    G, FormulaMatrixMismatch, J_matrix, bracket_from_formula, classical_structure_from_quantum,
    combination, g_bracket, g_bracket_formula, in_sp, psi, psi_check, psi_failures, quantum_to_poisson,
    span_rank, theta, theta_fixes_span,
)
from uqtw.freealg import gen
from uqtw.pbwengine import pbw_generators
from uqtw.poisson import bracket_gen, var
from uqtw.qscalar import PoleAtOne, Q


def test_G_is_symplectic():
    for n in (1, 2, 3):
        N = 2 * n
        for i, j in itertools.product(range(1, N + 1), repeat=2):
            assert in_sp(G(i, j, n), n)


def test_theta():
    for n in (1, 2, 3):
        assert theta_fixes_span(n)
    assert theta(J_matrix(2), 2) == J_matrix(2)


def test_g_bracket_example():
    assert g_bracket((2, 1), (3, 2), 2) == {(4, 2): -1, (1, 3): 1}
    with pytest.raises(ValueError):
        g_bracket((5, 1), (2, 1), 2)


def test_g_bracket_antisymmetric():
    n = 2
    idx = range(1, 5)
    for p in itertools.product(idx, repeat=2):
        for r in itertools.product(idx, repeat=2):
            a = combination(g_bracket_formula(p, r, n), n)
            b = combination(g_bracket_formula(r, p, n), n)
            assert all(a.get(k, 0) == -b.get(k, 0) for k in set(a) | set(b))


def test_mismatch_is_detected(monkeypatch):
    import uqtw.classical as cl

    monkeypatch.setattr(cl, "g_bracket_formula", lambda p, r, n: {(1, 1): Fraction(1)})
    with pytest.raises(FormulaMatrixMismatch):
        cl.g_bracket((2, 1), (3, 2), 2)


def test_span_rank():
    assert [span_rank(n) for n in (1, 2, 3, 4)] == [1, 4, 9, 16]


def test_psi_printed_fails_beyond_n1():
    assert psi_check(1)
    for n in (2, 3, 4):
        assert not psi_check(n)
    assert psi_failures(2) == [((1, 2), (2, 1)), ((2, 1), (1, 2))]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_psi_corrected(n):
    assert psi_check(n, "corrected")


def test_psi_diagonal():
    assert psi(1, 1, 2) == {k: v / 2 for k, v in G(4, 1, 2).items()}
    with pytest.raises(ValueError):
        psi(1, 2, 2, "bogus")


def test_bracket_gen_example():
    n = 2
    expected = var(n, 3, 2).scale(2) - var(n, 4, 1).scale(2) - (var(n, 2, 1) * var(n, 3, 1)).scale(2)
    assert bracket_gen(3, 1, 2, 1, n) == expected
    assert classical_structure_from_quantum((3, 1), (2, 1), n) == expected


@pytest.mark.parametrize("n", [2, 3])
def test_classical_limit_all_pairs(n):
    gens = pbw_generators(n)
    for p in gens:
        for r in gens:
            assert classical_structure_from_quantum(p, r, n) == bracket_from_formula(p, r, n), (p, r)


def test_classical_limit_rejects_omega2():
    with pytest.raises(ValueError):
        classical_structure_from_quantum((4, 3), (2, 1), 2)


def test_quantum_to_poisson_pole():
    with pytest.raises(PoleAtOne):
        quantum_to_poisson(gen(1, 2, 1).scale(Q), order=1)
    assert quantum_to_poisson(gen(1, 2, 1).scale(1 - Q), order=1) == var(1, 2, 1)
