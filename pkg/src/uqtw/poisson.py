"""The Poisson algebra obtained at q = 1.

Variables are ``a[i,j]`` with ``i > j``; ``a[i,i]`` is the constant
``eps_i`` and entries above the diagonal vanish.  Polynomials are dicts
from sorted tuples of variables to Gaussian rationals.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Tuple

from .conventions import conventions
from .freealg import GenId, RankMismatch, all_generators, is_omega1, is_omega2
from .qscalar import GaussRat, format_gauss

__all__ = [
    "PoissonPoly",
    "BadIndices",
    "UnresolvedTableEntry",
    "var",
    "entry",
    "bracket_gen",
    "bracket",
    "reduced_bracket",
    "jacobi",
    "classical_r",
    "classical_ru",
    "matrix_form_check",
    "poisson_central",
    "eliminate",
    "reduce",
    "central_audit",
    "centrality_audit",
    "CENTRAL_VARIANTS",
    "poisson_braid_table",
    "poisson_braid",
    "braid_preserves_bracket_check",
]

Monomial = Tuple[GenId, ...]


class BadIndices(ValueError):
    pass


class UnresolvedTableEntry(KeyError):
    pass


def _g(x) -> GaussRat:
    return x if isinstance(x, GaussRat) else GaussRat.coerce(x)


class PoissonPoly:
    """Commutative polynomial in the ``a[i,j]`` with Gaussian coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Optional[Mapping[Monomial, GaussRat]] = None):
        self.n = n
        self.terms: Dict[Monomial, GaussRat] = {}
        for m, c in (terms or {}).items():
            c = _g(c)
            if not c.is_zero():
                key = tuple(sorted(m))
                v = self.terms.get(key)
                v = c if v is None else v + c
                if v.is_zero():
                    self.terms.pop(key, None)
                else:
                    self.terms[key] = v

    @classmethod
    def const(cls, n: int, c) -> "PoissonPoly":
        return cls(n, {(): _g(c)})

    @classmethod
    def zero(cls, n: int) -> "PoissonPoly":
        return cls(n)

    def is_zero(self) -> bool:
        return not self.terms

    def variables(self) -> set:
        return {v for m in self.terms for v in m}

    def degree(self) -> int:
        return max((len(m) for m in self.terms), default=0)

    def _lift(self, other) -> "PoissonPoly":
        if isinstance(other, PoissonPoly):
            if other.n != self.n:
                raise RankMismatch(f"rank {self.n} vs {other.n}")
            return other
        return PoissonPoly.const(self.n, other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            v = c if v is None else v + c
            if v.is_zero():
                out.pop(m, None)
            else:
                out[m] = v
        p = PoissonPoly(self.n)
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self):
        p = PoissonPoly(self.n)
        p.terms = {m: -c for m, c in self.terms.items()}
        return p

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c) -> "PoissonPoly":
        c = _g(c)
        if c.is_zero():
            return PoissonPoly(self.n)
        p = PoissonPoly(self.n)
        p.terms = {m: x * c for m, x in self.terms.items()}
        return p

    def __mul__(self, other):
        if not isinstance(other, PoissonPoly):
            return self.scale(other)
        other = self._lift(other)
        out: Dict[Monomial, GaussRat] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = tuple(sorted(m1 + m2))
                v = out.get(key)
                out[key] = c1 * c2 if v is None else v + c1 * c2
        return PoissonPoly(self.n, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        out = PoissonPoly.const(self.n, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, PoissonPoly):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, (int, GaussRat)):
            return self == PoissonPoly.const(self.n, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def substitute(self, images: Callable[[GenId], "PoissonPoly"]) -> "PoissonPoly":
        """Algebra map given by ``images(variable)``."""
        cache: Dict[GenId, PoissonPoly] = {}
        out = PoissonPoly(self.n)
        for m, c in self.terms.items():
            t = PoissonPoly.const(self.n, c)
            for v in m:
                if v not in cache:
                    cache[v] = images(v)
                t = t * cache[v]
            out = out + t
        return out

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))

    def __str__(self):
        from .printing import format_poisson

        return format_poisson(self)

    def __repr__(self):
        return f"PoissonPoly({self})"


def var(n: int, i: int, j: int) -> PoissonPoly:
    """The variable ``a[i,j]`` (``i > j``)."""
    if not (1 <= j < i <= 2 * n):
        raise BadIndices(f"a[{i},{j}] is not a variable at n={n}")
    return PoissonPoly(n, {((i, j),): GaussRat(1)})


def entry(n: int, i: int, j: int) -> PoissonPoly:
    """Matrix entry of ``A``: variable below, ``eps_i`` on, 0 above the diagonal."""
    if not (1 <= i <= 2 * n and 1 <= j <= 2 * n):
        raise BadIndices(f"index ({i},{j}) out of range for n={n}")
    if i > j:
        return var(n, i, j)
    if i == j:
        return PoissonPoly.const(n, conventions(n).eps(i))
    return PoissonPoly(n)


# ---------------------------------------------------------------------------
# the generator bracket
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def bracket_gen(i: int, j: int, k: int, l: int, n: int) -> PoissonPoly:
    """``{a[i,j], a[k,l]}`` from the closed formula.

    Sums without an upper limit run to ``2n``; entries above the diagonal
    vanish, so this is the only reading that gives a finite sum.
    """
    N = 2 * n
    for x, y in ((i, j), (k, l)):
        if not (1 <= y < x <= N):
            raise BadIndices(f"a[{x},{y}] is not a variable at n={n}")
    c = conventions(n)
    p, e = c.prime, c.eps
    A = lambda x, y: entry(n, x, y)  # noqa: E731
    d = lambda b: 1 if b else 0  # noqa: E731
    out = PoissonPoly(n)
    lin = (d(i == k) - d(i == p(k)) + d(j == k) - d(j == p(k))
           - d(i == l) + d(i == p(l)) - d(j == l) + d(j == p(l)))
    if lin:
        out = out + (A(i, j) * A(k, l)).scale(lin)
    if d(l < j) - d(i < k):
        out = out - (A(k, j) * A(i, l)).scale(2 * (d(l < j) - d(i < k)))
    if l < i:
        out = out - (A(k, i) * A(l, j)).scale(2)
    if j < k:
        out = out + (A(i, k) * A(j, l)).scale(2)
    if l == p(j):
        for m in range(1, j):
            out = out + (A(k, p(m)) * A(i, m)).scale(2 * e(m) * e(j))
    if l == p(i):
        for m in range(p(i) + 1, N + 1):
            out = out + (A(k, m) * A(p(m), j)).scale(2 * e(i) * e(p(m)))
    if j == p(k):
        for m in range(p(k) + 1, N + 1):
            out = out - (A(i, m) * A(p(m), l)).scale(2 * e(m) * e(p(k)))
    if i == p(k):
        for m in range(i + 1, N + 1):
            out = out - (A(m, j) * A(p(m), l)).scale(2 * e(i) * e(m))
    return out


def _partials(f: PoissonPoly) -> Dict[GenId, PoissonPoly]:
    out: Dict[GenId, Dict[Monomial, GaussRat]] = {}
    for m, c in f.terms.items():
        for idx, v in enumerate(m):
            if idx and m[idx - 1] == v:
                continue
            mult = m.count(v)
            rest = m[:idx] + m[idx + 1:]
            acc = out.setdefault(v, {})
            acc[rest] = acc.get(rest, GaussRat(0)) + c * mult
    return {v: PoissonPoly(f.n, t) for v, t in out.items()}


def bracket(f: PoissonPoly, g: PoissonPoly, n: Optional[int] = None) -> PoissonPoly:
    """Leibniz extension: ``{f,g} = sum df/dx dg/dy {x,y}``."""
    if f.n != g.n or (n is not None and n != f.n):
        raise RankMismatch("rank mismatch")
    n = f.n
    df, dg = _partials(f), _partials(g)
    out = PoissonPoly(n)
    for x, fx in df.items():
        for y, gy in dg.items():
            if x == y:
                continue
            out = out + fx * gy * bracket_gen(x[0], x[1], y[0], y[1], n)
    return out


def reduced_bracket(f: PoissonPoly, g: PoissonPoly) -> PoissonPoly:
    """Bracket on the quotient: arguments and result rewritten in Omega_1
    variables."""
    return reduce(bracket(reduce(f), reduce(g)))


def jacobi(x: GenId, y: GenId, z: GenId, n: int, modulo: bool = True) -> PoissonPoly:
    """Cyclic Jacobi sum on three variables.

    With ``modulo`` (the default) every bracket is taken in the quotient by
    the central relations; otherwise the formula is applied to the free
    polynomial ring in all ``a[i,j]``, where it is not a Poisson bracket.
    """
    a, b, c = (var(n, *t) for t in (x, y, z))
    br = reduced_bracket if modulo else bracket
    return br(a, br(b, c)) + br(b, br(c, a)) + br(c, br(a, b))


# ---------------------------------------------------------------------------
# matrix form
# ---------------------------------------------------------------------------


def classical_r(n: int) -> Dict[Tuple[int, int, int, int], int]:
    """``r`` as ``{(i,j,k,l): c}`` meaning ``c e_ij (x) e_kl``."""
    c = conventions(n)
    p, e = c.prime, c.eps
    idx = range(1, 2 * n + 1)
    r: Dict[Tuple[int, int, int, int], int] = {}

    def add(key, v):
        r[key] = r.get(key, 0) + v
        if r[key] == 0:
            del r[key]

    for i in idx:
        add((i, i, i, i), 1)
        add((i, i, p(i), p(i)), -1)
    for i in idx:
        for j in idx:
            if i < j:
                add((i, j, j, i), 2)
                add((i, j, p(i), p(j)), -2 * e(i) * e(j))
    return r


def classical_ru(n: int) -> Dict[Tuple[int, int, int, int], int]:
    """``r^u``: the first leg of ``r`` transposed."""
    return {(j, i, k, l): v for (i, j, k, l), v in classical_r(n).items()}


def matrix_form_check(n: int, report: bool = False, modulo: bool = True):
    """Entry-wise check of ``{A1,A2} = [r, A1A2] + A1 r^u A2 - A2 r^u A1``.

    Entry ``((i,k),(j,l))`` of the left side is ``{A_ij, A_kl}``.  Both sides
    are compared after reduction by the central relations unless ``modulo``
    is false (the raw comparison fails from n = 2 on).  Returns a bool, or
    the list of failing entries when ``report`` is set.
    """
    N = 2 * n
    idx = range(1, N + 1)
    A = {(i, j): entry(n, i, j) for i in idx for j in idx}
    r = classical_r(n)
    ru = classical_ru(n)
    # r as {(row pair) -> [(col pair, c)]}
    def rows_of(m):
        out: Dict[Tuple[int, int], List[Tuple[Tuple[int, int], int]]] = {}
        for (i, j, k, l), v in m.items():
            out.setdefault((i, k), []).append(((j, l), v))
        return out

    def cols_of(m):
        out: Dict[Tuple[int, int], List[Tuple[Tuple[int, int], int]]] = {}
        for (i, j, k, l), v in m.items():
            out.setdefault((j, l), []).append(((i, k), v))
        return out

    r_rows, r_cols = rows_of(r), cols_of(r)
    zero = PoissonPoly(n)

    def X(a, b):  # (A1 A2)_{(i,k),(j,l)} = A_ij A_kl
        return A[(a[0], b[0])] * A[(a[1], b[1])]

    bad = []
    for i in idx:
        for k in idx:
            for j in idx:
                for l in idx:
                    row, col = (i, k), (j, l)
                    rhs = zero
                    for mid, v in r_rows.get(row, ()):
                        rhs = rhs + X(mid, col).scale(v)
                    for mid, v in r_cols.get(col, ()):
                        rhs = rhs - X(row, mid).scale(v)
                    rhs = rhs + _sandwich(A, ru, row, col, first=True)
                    rhs = rhs - _sandwich(A, ru, row, col, first=False)
                    diff = _lhs_entry(n, i, j, k, l) - rhs
                    if modulo:
                        diff = reduce(diff)
                    if not diff.is_zero():
                        bad.append(((i, k), (j, l)))
    return bad if report else not bad


def _sandwich(A, m, row, col, first: bool) -> PoissonPoly:
    """``(A1 m A2)`` (``first``) or ``(A2 m A1)`` at ``(row, col)``."""
    i, k = row
    j, l = col
    n = next(iter(A.values())).n
    out = PoissonPoly(n)
    for (a, b, c, d), v in m.items():
        # m = v e_ab (x) e_cd
        if first:
            # (A (x) I)(e_ab (x) e_cd)(I (x) A): row (i,k) -> A_ia, e_ab, leg2 k == c, then A_dl; leg1 b == j
            if b != j or c != k:
                continue
            out = out + (A[(i, a)] * A[(d, l)]).scale(v)
        else:
            # (I (x) A)(e_ab (x) e_cd)(A (x) I): leg1 i == a, A_kc, e_cd, A_bj, leg2 d == l
            if a != i or d != l:
                continue
            out = out + (A[(k, c)] * A[(b, j)]).scale(v)
    return out


def _lhs_entry(n: int, i: int, j: int, k: int, l: int) -> PoissonPoly:
    if i > j and k > l:
        return bracket_gen(i, j, k, l, n)
    return PoissonPoly(n)


# ---------------------------------------------------------------------------
# central relations and the reduction to Omega_1 variables
# ---------------------------------------------------------------------------


CENTRAL_VARIANTS = ("printed", "corrected")


def poisson_central(i: int, j: int, n: int, variant: str = "printed") -> PoissonPoly:
    """Left side of the central relation for ``(i, j)``, ``i != j``.

    ``printed`` replaces the ``k = i'`` summand by ``eps_{i'} a[i',j]``;
    ``corrected`` keeps the full sum ``sum_{k=j}^{i} eps_i eps_k a[k',i'] a[k,j]``,
    which is the ``q = 1`` value of the quantum central relation.
    """
    if variant not in CENTRAL_VARIANTS:
        raise ValueError(f"unknown central variant {variant!r}")
    N = 2 * n
    if i == j or not (1 <= i <= N and 1 <= j <= N):
        raise BadIndices(f"central relation needs i != j in 1..{N}")
    c = conventions(n)
    p, e = c.prime, c.eps
    A = lambda x, y: entry(n, x, y)  # noqa: E731
    out = PoissonPoly(n)
    for k in range(j, i):
        if k == p(i) and variant == "printed":
            continue
        out = out + (A(p(k), p(i)) * A(k, j)).scale(e(i) * e(k))
    out = out + A(i, j).scale(e(p(i)))
    if variant == "printed" and j <= p(i) <= i:
        out = out + A(p(i), j).scale(e(p(i)))
    return out


@lru_cache(maxsize=None)
def eliminate(i: int, j: int, n: int) -> PoissonPoly:
    """``a[i,j]`` for ``i + j > 2n + 1`` in terms of Omega_1 variables:
    ``a_ij = sum_{k=j}^{i-1} eps_k a_{k'i'} a_{kj}`` applied recursively."""
    if not is_omega2((i, j), n):
        raise BadIndices(f"a[{i},{j}] is not eliminable")
    c = conventions(n)
    p, e = c.prime, c.eps
    out = PoissonPoly(n)
    for k in range(j, i):
        out = out + (entry(n, p(k), p(i)) * entry(n, k, j)).scale(e(k))
    return reduce(out)


def reduce(f: PoissonPoly) -> PoissonPoly:
    """Rewrite every Omega_2 variable through ``eliminate``."""
    n = f.n
    if not any(is_omega2(v, n) for v in f.variables()):
        return f
    return f.substitute(lambda v: eliminate(*v, n) if is_omega2(v, n) else var(n, *v))


def central_audit(n: int, variant: str = "printed") -> List[dict]:
    """Each central relation after reduction; all should vanish."""
    out = []
    N = 2 * n
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            if i == j:
                continue
            res = reduce(poisson_central(i, j, n, variant))
            out.append({"i": i, "j": j, "residual": res, "zero": res.is_zero()})
    return out


def centrality_audit(n: int, variant: str = "printed", sample: Optional[int] = None,
                     seed: int = 0) -> List[dict]:
    """``{pcen(i,j), a[k,l]}`` in the quotient, over ``(i,j)`` and Omega_1
    variables ``a[k,l]``; both variants should give 0 if the relations are
    Poisson."""
    N = 2 * n
    rels = [(i, j) for i in range(1, N + 1) for j in range(1, N + 1) if i != j]
    gens = [g for g in all_generators(n) if is_omega1(g, n)]
    cases = [(r, g) for r in rels for g in gens]
    if sample is not None and sample < len(cases):
        cases = random.Random(seed).sample(cases, sample)
    out = []
    for (i, j), g in cases:
        res = reduced_bracket(poisson_central(i, j, n, variant), var(n, *g))
        out.append({"relation": (i, j), "variable": g, "residual": res,
                    "zero": res.is_zero()})
    return out


# ---------------------------------------------------------------------------
# braid action
# ---------------------------------------------------------------------------


TABLE_VARIANTS = ("printed", "corrected")


def poisson_braid_table(k: int, n: int, variant: str = "printed") -> Dict[GenId, PoissonPoly]:
    """Listed images of variables under ``beta_k``, resolved in order.

    ``variant="corrected"`` applies the same row repairs as the quantum
    table, specialized to ``q = 1``.
    """
    if not 1 <= k <= n:
        raise UnresolvedTableEntry(f"node {k} outside 1..{n}")
    if variant not in TABLE_VARIANTS:
        raise ValueError(f"unknown table variant {variant!r}")
    fixed = variant == "corrected"
    c = conventions(n)
    p, e = c.prime, c.eps
    N = 2 * n
    A = lambda x, y: entry(n, x, y)  # noqa: E731
    I = GaussRat(0, 1)
    t: Dict[GenId, PoissonPoly] = {}

    def put(key, img):
        t.setdefault(key, img)

    def b(key):
        x, y = key
        if x <= y:
            return A(x, y)
        return t.get(key, A(x, y))

    if k <= n - 2:
        kp = p(k)
        put((k + 1, k), -A(k + 1, k))
        for l in range(k + 2, kp - 1):
            put((l, k), A(l, k + 1) - A(l, k) * A(k + 1, k))
            put((l, k + 1), A(l, k))
        for l in range(1, k):
            put((k, l), A(k + 1, l) - A(k + 1, k) * A(k, l))
            put((k + 1, l), A(k, l))
        put((kp - 1, k + 1), A(kp - 1, k) * A(k + 1, k) + A(kp, k))
        if fixed:
            put((kp - 1, k), _limit_row(k, n, (kp - 1, k)))
        else:
            img = A(kp, k) - b((kp - 1, k + 1)) * A(k + 1, k)
            for s in range(k + 2, kp - 1):
                img = img + (A(p(s), k) * b((s, k))).scale(e(s))
            put((kp - 1, k), img)
        for l in range(1, k):
            put((kp - 1, l), A(kp, kp - 1) * A(kp - 1, l) + A(kp, l))
            put((kp, l), A(kp - 1, l))
        put((kp, k), -(A(kp - 1, k) * A(k + 1, k)) + A(kp - 1, k + 1))
        if fixed and k >= 2:
            put((kp + 1, k - 1), A(kp + 1, k - 1) + A(kp - 1, k) * A(kp, kp - 1)
                - A(kp - 1, k + 1) + b((kp, k)))
        for m in range(n, 0, -1):
            if m in (k - 1, k, k + 1):
                continue
            put((p(m), m), A(p(m), m) - A(p(m) - 1, m + 1) + b((p(m) - 1, m + 1)))
        return t
    if k == n - 1:
        put((n, n - 1), -A(n, n - 1))
        if fixed:
            x = A(n, n - 1)
            put((n + 1, n - 1), -A(n + 1, n - 1) + x * A(n + 2, n - 1) + x * x * A(n + 1, n - 1))
        else:
            put((n + 1, n - 1), -A(n + 2, n - 1))
        for l in range(1, n - 1):
            put((n - 1, l), A(n, l) - A(n, n - 1) * A(n - 1, l))
            put((n, l), A(n - 1, l))
        put((n + 1, n), -(A(n + 2, n + 1) * A(n + 1, n - 1)) - A(n + 2, n - 1))
        put((n + 2, n - 1), A(n, n - 1) * A(n + 1, n - 1) - A(n + 1, n))
        for l in range(1, n - 1):
            if fixed:
                put((n + 1, l), -A(n + 2, l) - A(n, n - 1) * A(n + 1, l))
                continue
            img = -A(n + 2, l) + (A(n + 2, n - 1) - A(n + 1, n)) * A(n - 1, l)
            for s in range(n + 3, p(l) + 1):
                img = img + A(n, n - 1) * A(s, n) * A(p(s), l)
            put((n + 1, l), img)
        for l in range(1, n - 1):
            put((n + 2, l), -A(n + 1, l))
        if n >= 3:
            put((n + 3, n - 2), -A(n + 3, n - 2) - A(n + 1, n - 1) * A(n, n - 1)
                + A(n, n - 1) * A(n + 1, n - 1))
            for l in range(1, n - 2):
                put((n + 3, l), -A(n + 3, l))
        for m in range(n + 4, N + 1):
            for l in range(1, p(m)):
                put((m, l), -A(m, l))
            put((m, p(m)), -A(m, p(m)) + A(m - 1, p(m) + 1) + b((m - 1, p(m) + 1)))
        return t
    put((n + 1, n), -A(n + 1, n))
    for l in range(1, n):
        put((n, l), (A(n + 1, l) - A(n + 1, n) * A(n, l)).scale(I))
        put((n + 1, l), A(n, l).scale(-I))
    if n >= 2:
        put((n + 2, n - 1), -A(n + 2, n - 1))
    for m in range(n + 3, N + 1):
        put((m, p(m)), -A(m, p(m)) + A(m - 1, p(m) + 1)
            + (b((m - 1, p(m) + 1)) if fixed else -b((m - 1, p(m) + 1))))
    if fixed:
        for m in range(n + 2, N + 1):
            for l in range(1, p(m)):
                put((m, l), -A(m, l))
    return t


def _limit_row(k: int, n: int, g: GenId) -> PoissonPoly:
    """Specialization at ``q = 1`` of the quantum image of a generator."""
    from .classical import quantum_to_poisson
    from .braidact import _generator_image, beta

    return quantum_to_poisson(_generator_image(beta(k, n), g))


def poisson_braid(k: int, x: PoissonPoly, n: Optional[int] = None,
                  variant: str = "printed") -> PoissonPoly:
    """Algebra map on ``P_n`` extending the listed images; unlisted
    variables are fixed."""
    n = x.n if n is None else n
    tab = poisson_braid_table(k, n, variant)
    return x.substitute(lambda v: tab.get(v, var(n, *v)))


def _braid_by_limit(k: int, n: int) -> Callable[[GenId], PoissonPoly]:
    """Images specialized from the quantum action (independent of the table)."""
    from .braidact import _generator_image, beta
    from .classical import quantum_to_poisson
    from .pbwengine import express_sij

    b = beta(k, n)
    cache: Dict[GenId, PoissonPoly] = {}

    def img(v: GenId) -> PoissonPoly:
        if v not in cache:
            cache[v] = quantum_to_poisson(_generator_image(b, v))
        return cache[v]

    return img


def braid_preserves_bracket_check(k: int, n: int, variant: str = "printed",
                                  sample: Optional[int] = None, seed: int = 0) -> List[dict]:
    """``beta_k {a_p, a_r}`` against ``{beta_k a_p, beta_k a_r}`` over Omega_1
    pairs, both reduced modulo the central relations.

    ``variant`` selects the listed table (``printed``/``corrected``) or
    ``"limit"``: images specialized from the quantum action.
    """
    if variant == "limit":
        images = _braid_by_limit(k, n)
    else:
        tab = poisson_braid_table(k, n, variant)
        images = lambda v: tab.get(v, var(n, *v))  # noqa: E731
    gens = [g for g in all_generators(n) if is_omega1(g, n)]
    pairs = [(a, b) for a, b in itertools.combinations(gens, 2)]
    if sample is not None and sample < len(pairs):
        pairs = random.Random(seed).sample(pairs, sample)
    out = []

    def mapped(f: PoissonPoly) -> PoissonPoly:
        return reduce(reduce(f).substitute(images))

    for a, b in pairs:
        lhs = mapped(bracket_gen(a[0], a[1], b[0], b[1], n))
        rhs = reduce(bracket(reduce(images(a)), reduce(images(b))))
        res = lhs - rhs
        out.append({"pair": (a, b), "residual": res, "zero": res.is_zero()})
    return out
