import pytest

from uqtw.braidact import (
    BadNode, apply, apply_word, beta, chi_sign, extended_table, iota_relations_audit, table_consistency,
    verify_automorphism, verify_braid_relations, verify_inverse,
)
from uqtw.freealg import gen
from uqtw.pbwengine import band, normalize

CONVENTIONS = ("plain", "signed")


def bad(rows):
    return [r for r in rows if not r["zero"]]


def test_bad_node():
    with pytest.raises(BadNode):
        beta(0, 2)
    with pytest.raises(BadNode):
        beta(3, 2)


def test_chi_sign():
    n = 2
    assert chi_sign((3, 2), n) == -1 and chi_sign((3, 1), n) == -1
    assert chi_sign((2, 1), n) == 1 and chi_sign((4, 3), n) == 1


@pytest.mark.parametrize("convention", CONVENTIONS)
@pytest.mark.parametrize("n", [2, 3])
def test_automorphism(n, convention):
    for k in range(1, n + 1):
        for direction in (1, -1):
            assert not bad(verify_automorphism(k, n, direction, convention)), (k, direction)


@pytest.mark.parametrize("convention", CONVENTIONS)
@pytest.mark.parametrize("n", [2, 3, 4])
def test_inverse(n, convention):
    assert not bad(verify_inverse(n, convention))


def test_braid_relations_plain_convention():
    assert not bad(verify_braid_relations(2))
    rows = bad(verify_braid_relations(3))
    assert {(r["relation"], r["m"]) for r in rows} == {("braid3[1,2]", 3), ("braid4[2,3]", 1)}
    # the two sides differ exactly by a sign
    assert all(r["sign_flip"] for r in rows)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_braid_relations_signed_convention(n):
    assert not bad(verify_braid_relations(n, convention="signed"))


def test_far_commutation_n4():
    for convention in CONVENTIONS:
        assert not bad(verify_braid_relations(4, far_only=True, convention=convention))


@pytest.mark.parametrize("n", [2, 3])
def test_specific_values(n):
    b1, b2 = beta(n - 1, n), beta(n, n)
    assert apply(b1, gen(n, n + 2, n)) == -gen(n, n + 1, n - 1)
    assert apply(b2, gen(n, n + 2, n - 1)) == -gen(n, n + 2, n - 1)
    b1, b2 = beta(n - 1, n, convention="signed"), beta(n, n, convention="signed")
    assert apply(b1, gen(n, n + 2, n)) == gen(n, n + 1, n - 1)
    assert apply(b2, gen(n, n + 2, n - 1)) == gen(n, n + 2, n - 1)


def test_band_fixed_and_negated():
    n = 3
    for k in range(1, n + 1):
        assert apply(beta(k, n), band(k, n)) == -band(k, n)
        for m in range(1, n + 1):
            if abs(m - k) > 1:
                assert apply(beta(k, n), band(m, n)) == band(m, n)


def test_apply_word_composes():
    n = 2
    x = band(1, n) * band(2, n)
    assert apply_word([1, 2], x) == apply(beta(1, n), apply(beta(2, n), x))
    assert apply_word([], x) == normalize(x)


@pytest.mark.parametrize("convention", CONVENTIONS)
@pytest.mark.parametrize("n", [2, 3])
def test_table_corrected(n, convention):
    for k in range(1, n + 1):
        assert not bad(table_consistency(k, n, convention, "corrected")), k


def test_table_printed_rows_disagree():
    failing = {(k, r["generator"]) for k in (1, 2) for r in bad(table_consistency(k, 2))}
    assert failing == {(1, (3, 1)), (2, (2, 1))}


def test_extended_table_keys():
    t = extended_table(1, 2, "corrected")
    assert (2, 1) in t
    assert normalize(t[(2, 1)]) == -gen(2, 2, 1)


@pytest.mark.parametrize("n", [2, 3])
def test_iota_relations(n):
    rep = iota_relations_audit(n)
    assert all(r["zero"] for r in rep["relations"])
    assert all(c["pbw"] == c["expected"] for c in rep["counts"])
