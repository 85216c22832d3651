"""Concrete 2n x 2n matrices at q = 1 and the classical limit of commutators.

Brackets here are matrix commutators, so this module serves as an
independent check on the closed bracket formulas.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple

import flint

from .conventions import conventions
from .freealg import AlgebraElement, GenId, all_generators, is_omega1
from .poisson import PoissonPoly, reduce
from .qscalar import GaussRat, PoleAtOne, eval_at_one_after_dividing

__all__ = [
    "FormulaMatrixMismatch",
    "PoleAtOne",
    "Matrix",
    "e_unit",
    "F",
    "G",
    "theta",
    "J_matrix",
    "in_sp",
    "g_bracket_formula",
    "g_bracket",
    "combination",
    "psi",
    "psi_check",
    "psi_failures",
    "theta_fixes_span",
    "bracket_from_formula",
    "span_rank",
    "quantum_to_poisson",
    "classical_structure_from_quantum",
]

Matrix = Dict[Tuple[int, int], Fraction]


class FormulaMatrixMismatch(AssertionError):
    pass


def _add(a: Matrix, b: Matrix, c=1) -> Matrix:
    out = dict(a)
    for k, v in b.items():
        x = out.get(k, 0) + c * v
        if x:
            out[k] = Fraction(x)
        else:
            out.pop(k, None)
    return out


def _mul(a: Matrix, b: Matrix) -> Matrix:
    rows: Dict[int, List[Tuple[int, Fraction]]] = {}
    for (i, j), v in b.items():
        rows.setdefault(i, []).append((j, v))
    out: Matrix = {}
    for (i, k), v in a.items():
        for j, w in rows.get(k, ()):
            x = out.get((i, j), 0) + v * w
            if x:
                out[(i, j)] = x
            else:
                out.pop((i, j), None)
    return out


def _scale(a: Matrix, c) -> Matrix:
    return {k: v * c for k, v in a.items()} if c else {}


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return _add(_mul(a, b), _mul(b, a), -1)


def e_unit(i: int, j: int) -> Matrix:
    return {(i, j): Fraction(1)}


def F(i: int, j: int, n: int) -> Matrix:
    """``e_ij - eps_i eps_j e_{j'i'}``."""
    c = conventions(n)
    return _add(e_unit(i, j), e_unit(c.prime(j), c.prime(i)), -c.eps(i) * c.eps(j))


@lru_cache(maxsize=None)
def _G(i: int, j: int, n: int) -> Tuple[Tuple[Tuple[int, int], Fraction], ...]:
    c = conventions(n)
    m = _add(_scale(F(i, j, n), c.eps(i)), _scale(F(j, i, n), c.eps(j)), -1)
    return tuple(sorted(m.items()))


def G(i: int, j: int, n: int) -> Matrix:
    """``eps_i F_ij - eps_j F_ji``."""
    return dict(_G(i, j, n))


def J_matrix(n: int) -> Matrix:
    c = conventions(n)
    return {(i, i): Fraction(c.eps(i)) for i in c.indices()}


def theta(X: Matrix, n: int) -> Matrix:
    """``J X^u J^-1`` with ``u`` the plain transpose."""
    J = J_matrix(n)
    Xu = {(j, i): v for (i, j), v in X.items()}
    return _mul(_mul(J, Xu), J)  # J is its own inverse


def in_sp(X: Matrix, n: int) -> bool:
    """``X^t Omega + Omega X = 0`` for the form ``Omega = sum_i eps_i e_{i,i'}``."""
    c = conventions(n)
    Om = {(i, c.prime(i)): Fraction(c.eps(i)) for i in c.indices()}
    Xt = {(j, i): v for (i, j), v in X.items()}
    return not _add(_mul(Xt, Om), _mul(Om, X))


def combination(terms: Dict[GenId, Fraction], n: int) -> Matrix:
    out: Matrix = {}
    for (i, j), c in terms.items():
        out = _add(out, G(i, j, n), c)
    return out


def g_bracket_formula(p: GenId, r: GenId, n: int) -> Dict[GenId, Fraction]:
    """``[G_ij, G_kl]`` from the closed formula, as ``{(a,b): coeff}``."""
    (i, j), (k, l) = p, r
    c = conventions(n)
    pr, e = c.prime, c.eps
    out: Dict[GenId, Fraction] = {}

    def add(cond, coeff, key):
        if cond:
            out[key] = out.get(key, 0) + Fraction(coeff)

    add(j == k, e(j), (i, l))
    add(pr(j) == k, e(j), (pr(i), l))
    add(i == k, -e(i), (j, l))
    add(pr(i) == k, -e(i), (pr(j), l))
    add(i == l, e(i), (j, k))
    add(pr(i) == l, e(i), (pr(j), k))
    add(j == l, -e(j), (i, k))
    add(pr(j) == l, -e(j), (pr(i), k))
    return {key: v for key, v in out.items() if v}


def g_bracket(p: GenId, r: GenId, n: int) -> Dict[GenId, Fraction]:
    """Formula result, checked against the matrix commutator."""
    N = 2 * n
    for a, b in (p, r):
        if not (1 <= a <= N and 1 <= b <= N):
            raise ValueError(f"index pair ({a},{b}) out of range for n={n}")
    formula = g_bracket_formula(p, r, n)
    direct = commutator(G(*p, n), G(*r, n))
    if combination(formula, n) != direct:
        raise FormulaMatrixMismatch(f"[G{p}, G{r}] disagrees with the matrix commutator")
    return formula


PSI_VARIANTS = ("printed", "corrected")


def psi(i: int, j: int, n: int, variant: str = "printed") -> Matrix:
    """Image of the unit ``e_ij`` of ``gl_n``.

    ``printed``: ``e_ii -> G_{i'i}/2``, ``e_ij -> (-1)^(i-j+1) (G_ji - G_{j'i})/2``
    and ``e_ji -> (-1)^(i-j+1) (G_ji + G_{j'i})/2`` for ``i < j``.
    ``corrected`` flips the sign of the last image.
    """
    if variant not in PSI_VARIANTS:
        raise ValueError(f"unknown psi variant {variant!r}")
    c = conventions(n)
    p = c.prime
    if i == j:
        return _scale(G(p(i), i, n), Fraction(1, 2))
    a, b = min(i, j), max(i, j)
    sign = -1 if (a - b + 1) % 2 else 1
    part = -1 if i < j else 1
    if i > j and variant == "corrected":
        sign = -sign
    return _scale(_add(G(b, a, n), G(p(b), a, n), part), Fraction(sign, 2))


def psi_failures(n: int, variant: str = "printed") -> List[Tuple[GenId, GenId]]:
    """Basis pairs ``(x, y)`` of ``gl_n`` with ``psi[x,y] != [psi x, psi y]``."""
    basis = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    imgs = {x: psi(*x, n, variant) for x in basis}
    bad = []
    for (a, b) in basis:
        for (c, d) in basis:
            lhs: Matrix = {}
            if b == c:
                lhs = _add(lhs, imgs[(a, d)])
            if d == a:
                lhs = _add(lhs, imgs[(c, b)], -1)
            if lhs != commutator(imgs[(a, b)], imgs[(c, d)]):
                bad.append(((a, b), (c, d)))
    return bad


def psi_check(n: int, variant: str = "printed") -> bool:
    """``psi`` is a Lie homomorphism on all basis pairs and is injective."""
    if psi_failures(n, variant):
        return False
    basis = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    return _rank([psi(*x, n, variant) for x in basis], n) == n * n


def _rank(mats: List[Matrix], n: int) -> int:
    N = 2 * n
    if not mats:
        return 0
    M = flint.fmpq_mat(len(mats), N * N)
    for r, m in enumerate(mats):
        for (i, j), v in m.items():
            M[r, (i - 1) * N + (j - 1)] = flint.fmpq(v.numerator, v.denominator)
    return M.rank()


def theta_fixes_span(n: int) -> bool:
    """``theta`` is an involution with ``theta(G_ij) = -G_ij`` (so the Lie
    involution ``-theta`` fixes every ``G_ij``), and the span of the
    ``G_ij`` is closed under commutators."""
    N = 2 * n
    idx = range(1, N + 1)
    for i in idx:
        for j in idx:
            g = G(i, j, n)
            if theta(theta(g, n), n) != g or theta(g, n) != _scale(g, -1):
                return False
    for (a, b) in [(i, j) for i in idx for j in idx]:
        for (c, d) in [(i, j) for i in idx for j in idx]:
            g_bracket((a, b), (c, d), n)
    return True


def span_rank(n: int) -> int:
    """Rank of ``{G_ij : (i,j) in Omega_1}``."""
    return _rank([G(i, j, n) for (i, j) in all_generators(n) if is_omega1((i, j), n)], n)


# ---------------------------------------------------------------------------
# classical limit of the quantum algebra
# ---------------------------------------------------------------------------


def quantum_to_poisson(x: AlgebraElement, order: int = 0) -> PoissonPoly:
    """Words become commutative monomials; coefficients are divided by
    ``(1 - q)**order`` and evaluated at ``q = 1``."""
    out: Dict[Tuple[GenId, ...], GaussRat] = {}
    for w, c in x.terms.items():
        v = eval_at_one_after_dividing(c, order)
        if v.is_zero():
            continue
        key = tuple(sorted(w))
        out[key] = out.get(key, GaussRat(0)) + v
    return PoissonPoly(x.n, out)


def classical_structure_from_quantum(p: GenId, r: GenId, n: int) -> PoissonPoly:
    """``(s_p s_r - s_r s_p) / (1 - q)`` in normal form, at ``q = 1``."""
    from .pbwengine import normalize

    for g in (p, r):
        if not is_omega1(g, n):
            raise ValueError(f"s[{g[0]},{g[1]}] is not a PBW generator at n={n}")
    a = AlgebraElement.generator(n, *p)
    b = AlgebraElement.generator(n, *r)
    return quantum_to_poisson(normalize(a * b - b * a), order=1)


def bracket_from_formula(p: GenId, r: GenId, n: int) -> PoissonPoly:
    """The closed Poisson formula reduced to PBW variables (for comparison)."""
    from .poisson import bracket_gen

    return reduce(bracket_gen(p[0], p[1], r[0], r[1], n))
