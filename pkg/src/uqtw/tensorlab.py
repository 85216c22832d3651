"""Matrices over Q(i)(q) or over the free algebra, and the constant R-matrices.

Flattening convention (used everywhere, including the YBE check):
a 2n x 2n matrix has 1-based indices ``i, j``; the tensor square uses row
``(i, k)`` and column ``(j, l)`` for the coefficient of ``e_ij (x) e_kl``,
flattened row-major as ``(i-1)*2n + (k-1)``.  Three-fold tensors flatten
``(i, k, m)`` the same way.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple

from .conventions import conventions, sbar
from .freealg import AlgebraElement
from .qscalar import ONE, Q, ZERO, GaussRat, RatFunc, qpow

__all__ = [
    "SparseMatrix",
    "build_R",
    "build_Ru",
    "r_matrix_terms",
    "check_YBE",
    "transpose",
    "transpose_leg1",
    "check_const_reflection",
    "check_rjru",
    "matrix_J",
    "matrix_D",
    "matrix_C",
    "identity",
    "symbolic_S",
    "reflection_relations",
    "expand_reflection",
    "central_relations",
    "expand_central",
]


def _is_zero(x) -> bool:
    return x.is_zero()


class SparseMatrix:
    """Square matrix stored as ``{(row, col): entry}`` with 0-based indices.

    Entries are :class:`RatFunc` or :class:`AlgebraElement`; products keep
    the left-to-right order of entries.
    """

    __slots__ = ("dim", "entries")

    def __init__(self, dim: int, entries: Dict[Tuple[int, int], object] | None = None):
        self.dim = dim
        self.entries = {k: v for k, v in (entries or {}).items() if not _is_zero(v)}

    def __getitem__(self, rc):
        return self.entries.get(rc, ZERO)

    def rows(self) -> Dict[int, Dict[int, object]]:
        out: Dict[int, Dict[int, object]] = {}
        for (r, c), v in self.entries.items():
            out.setdefault(r, {})[c] = v
        return out

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        brows = other.rows()
        acc: Dict[Tuple[int, int], object] = {}
        for (r, k), a in self.entries.items():
            row = brows.get(k)
            if not row:
                continue
            for c, b in row.items():
                prod = a * b
                key = (r, c)
                old = acc.get(key)
                acc[key] = prod if old is None else old + prod
        return SparseMatrix(self.dim, acc)

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        acc = dict(self.entries)
        for k, v in other.entries.items():
            acc[k] = acc[k] + v if k in acc else v
        return SparseMatrix(self.dim, acc)

    def __neg__(self):
        return SparseMatrix(self.dim, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.dim == other.dim and self.entries == other.entries

    def difference_support(self, other: "SparseMatrix") -> List[Tuple[int, int]]:
        """Indices where the two matrices differ."""
        keys = set(self.entries) | set(other.entries)
        return sorted(k for k in keys if not _is_zero(self[k] - other[k]))


# ---------------------------------------------------------------------------
# index plumbing
# ---------------------------------------------------------------------------


def pair_index(i: int, k: int, size: int) -> int:
    return (i - 1) * size + (k - 1)


def unpair(x: int, size: int) -> Tuple[int, int]:
    a, b = divmod(x, size)
    return a + 1, b + 1


def _tensor_entries(n: int, terms: Iterable[Tuple[int, int, int, int, RatFunc]]) -> SparseMatrix:
    size = 2 * n
    acc: Dict[Tuple[int, int], RatFunc] = {}
    for i, j, k, l, c in terms:
        key = (pair_index(i, k, size), pair_index(j, l, size))
        acc[key] = acc.get(key, ZERO) + c
    return SparseMatrix(size * size, acc)


def r_matrix_terms(n: int):
    """The three sums defining R, each as a list of ``(i, j, k, l, coeff)``
    meaning ``coeff * e_ij (x) e_kl``."""
    c = conventions(n)
    idx = list(c.indices())
    h = Q - Q.inverse()
    diagonal = [
        (i, i, j, j, qpow(int(i == j) - int(i == c.prime(j))))
        for i in idx for j in idx
    ]
    exchange = [(i, j, j, i, h) for i in idx for j in idx if i < j]
    twisted = [
        (i, j, c.prime(i), c.prime(j), -h * qpow(c.bar(j) - c.bar(i)) * (c.eps(i) * c.eps(j)))
        for i in idx for j in idx if i < j
    ]
    return diagonal, exchange, twisted


@lru_cache(maxsize=None)
def build_R(n: int) -> SparseMatrix:
    if n < 1:
        raise ValueError("rank must be at least 1")
    d, e, t = r_matrix_terms(n)
    return _tensor_entries(n, d + e + t)


def transpose_leg1(T: SparseMatrix, n: int, kind: str) -> SparseMatrix:
    """Apply a transposition to the first tensor leg of a (2n)^2 matrix."""
    size = 2 * n
    c = conventions(n)
    out = {}
    for (r, col), v in T.entries.items():
        i, k = unpair(r, size)
        j, l = unpair(col, size)
        ni, nj, sign = _transpose_index(c, i, j, kind)
        key = (pair_index(ni, k, size), pair_index(nj, l, size))
        out[key] = v * sign if sign != 1 else v
    return SparseMatrix(T.dim, out)


@lru_cache(maxsize=None)
def build_Ru(n: int) -> SparseMatrix:
    return transpose_leg1(build_R(n), n, "u")


def embed(M: SparseMatrix, n: int, legs: Tuple[int, int]) -> SparseMatrix:
    """Embed a two-leg operator into the three-fold tensor on ``legs``."""
    size = 2 * n
    a, b = legs
    other = ({0, 1, 2} - {a, b}).pop()
    out = {}
    for (r, col), v in M.entries.items():
        i, k = unpair(r, size)
        j, l = unpair(col, size)
        for m in range(1, size + 1):
            row = [0, 0, 0]
            cl = [0, 0, 0]
            row[a], row[b], row[other] = i, k, m
            cl[a], cl[b], cl[other] = j, l, m
            out[(_triple(row, size), _triple(cl, size))] = v
    return SparseMatrix(size ** 3, out)


def _triple(t, size: int) -> int:
    return ((t[0] - 1) * size + (t[1] - 1)) * size + (t[2] - 1)


def check_YBE(n: int) -> bool:
    """Exact check of ``R12 R13 R23 = R23 R13 R12``."""
    R = build_R(n)
    r12, r13, r23 = embed(R, n, (0, 1)), embed(R, n, (0, 2)), embed(R, n, (1, 2))
    return (r12 @ r13) @ r23 == (r23 @ r13) @ r12


# ---------------------------------------------------------------------------
# 2n x 2n matrices
# ---------------------------------------------------------------------------


def _transpose_index(c, i: int, j: int, kind: str):
    if kind == "u":
        return j, i, 1
    if kind == "t":
        return c.prime(j), c.prime(i), c.eps(i) * c.eps(j)
    if kind == "ut":
        return c.prime(i), c.prime(j), c.eps(i) * c.eps(j)
    raise ValueError(f"unknown transposition {kind!r}")


def transpose(M: SparseMatrix, n: int, kind: str) -> SparseMatrix:
    """``t``: ``e_ij -> eps_i eps_j e_{j'i'}``; ``u``: ``e_ij -> e_ji``;
    ``ut``: ``e_ij -> eps_i eps_j e_{i'j'}``."""
    c = conventions(n)
    out = {}
    for (r, col), v in M.entries.items():
        ni, nj, sign = _transpose_index(c, r + 1, col + 1, kind)
        out[(ni - 1, nj - 1)] = v * sign if sign != 1 else v
    return SparseMatrix(M.dim, out)


def diagonal(values: Sequence) -> SparseMatrix:
    return SparseMatrix(len(values), {(k, k): RatFunc.coerce(v) for k, v in enumerate(values)})


def identity(size: int) -> SparseMatrix:
    return diagonal([ONE] * size)


def matrix_J(n: int) -> SparseMatrix:
    c = conventions(n)
    return diagonal([c.eps(i) for i in c.indices()])


def matrix_D(n: int) -> SparseMatrix:
    c = conventions(n)
    return diagonal([qpow(c.bar(i)) for i in c.indices()])


def matrix_C(values: Sequence) -> SparseMatrix:
    """``diag(c_1, ..., c_n, c_{n'}, ..., c_{1'})`` given in matrix order.

    Admissible when ``c_k * c_{k'}`` is the same nonzero value for all k.
    """
    return diagonal(values)


def leg(M: SparseMatrix, n: int, which: int) -> SparseMatrix:
    """``M_1 = M (x) I`` (which=1) or ``M_2 = I (x) M`` (which=2)."""
    size = 2 * n
    out = {}
    for (r, col), v in M.entries.items():
        for m in range(size):
            if which == 1:
                out[(r * size + m, col * size + m)] = v
            else:
                out[(m * size + r, m * size + col)] = v
    return SparseMatrix(size * size, out)


def check_const_reflection(K: SparseMatrix, n: int) -> bool:
    """``R K1 Ru K2 = K2 Ru K1 R`` for a scalar matrix ``K``."""
    R, Ru = build_R(n), build_Ru(n)
    K1, K2 = leg(K, n, 1), leg(K, n, 2)
    return ((R @ K1) @ Ru) @ K2 == ((K2 @ Ru) @ K1) @ R


def check_rjru(n: int) -> Dict[str, bool]:
    """J-symmetry of R.

    ``"RJ1RuJ2"`` is ``R J1 Ru J2 = J2 Ru J1 R`` (holds exactly); the
    ``"J1"``/``"J2"`` keys record the shortened reading ``R J Ru = Ru J R``
    with J on one leg, which does not hold.
    """
    R, Ru = build_R(n), build_Ru(n)
    J = matrix_J(n)
    out = {
        f"J{w}": (R @ leg(J, n, w)) @ Ru == (Ru @ leg(J, n, w)) @ R
        for w in (1, 2)
    }
    out["RJ1RuJ2"] = check_const_reflection(J, n)
    return out


# ---------------------------------------------------------------------------
# the generator matrix S and its relations
# ---------------------------------------------------------------------------


def symbolic_S(n: int) -> SparseMatrix:
    """Lower triangular: ``eps_i`` on the diagonal, ``s[i,j]`` below."""
    c = conventions(n)
    out = {}
    for i in c.indices():
        out[(i - 1, i - 1)] = AlgebraElement.scalar(n, c.eps(i))
        for j in range(1, i):
            out[(i - 1, j - 1)] = AlgebraElement.generator(n, i, j)
    return SparseMatrix(2 * n, out)


def symbolic_Sbar(n: int) -> SparseMatrix:
    c = conventions(n)
    out = {}
    for i in c.indices():
        for j in range(1, i + 1):
            out[(i - 1, j - 1)] = sbar(i, j, n)
    return SparseMatrix(2 * n, out)


def _lift(M: SparseMatrix, n: int) -> SparseMatrix:
    """Scalar matrix with entries promoted to algebra elements."""
    return SparseMatrix(M.dim, {k: AlgebraElement.scalar(n, v) for k, v in M.entries.items()})


@lru_cache(maxsize=None)
def reflection_relations(n: int) -> Dict[Tuple[int, int, int, int], AlgebraElement]:
    """Nonzero entries of ``R S1 Ru S2 - S2 Ru S1 R``.

    Keys are ``(i, k, j, l)``: the coefficient of ``e_ij (x) e_kl``.
    """
    S = symbolic_S(n)
    R, Ru = _lift(build_R(n), n), _lift(build_Ru(n), n)
    S1, S2 = leg(S, n, 1), leg(S, n, 2)
    lhs = ((R @ S1) @ Ru) @ S2
    rhs = ((S2 @ Ru) @ S1) @ R
    size = 2 * n
    out = {}
    for key in sorted(set(lhs.entries) | set(rhs.entries)):
        diff = lhs[key] - rhs[key] if key in lhs.entries else -rhs[key]
        if isinstance(diff, AlgebraElement) and not diff.is_zero():
            i, k = unpair(key[0], size)
            j, l = unpair(key[1], size)
            out[(i, k, j, l)] = diff
    return out


def expand_reflection(n: int) -> List[AlgebraElement]:
    return list(reflection_relations(n).values())


@lru_cache(maxsize=None)
def central_relations(n: int) -> Dict[Tuple[int, int], AlgebraElement]:
    """Nonzero entries ``(i, j)`` of ``Sbar D^-1 S D + I``."""
    Sb, S = symbolic_Sbar(n), symbolic_S(n)
    D = matrix_D(n)
    Dinv = diagonal([D[(k, k)].inverse() for k in range(D.dim)])
    prod = ((Sb @ _lift(Dinv, n)) @ S) @ _lift(D, n)
    prod = prod + _lift(identity(2 * n), n)
    out = {}
    for (r, col), v in sorted(prod.entries.items()):
        if not v.is_zero():
            out[(r + 1, col + 1)] = v
    return out


def expand_central(n: int) -> List[AlgebraElement]:
    return list(central_relations(n).values())
