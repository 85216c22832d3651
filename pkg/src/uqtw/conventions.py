"""Index conventions for rank ``n`` (matrices of size ``2n``, indices 1-based)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .freealg import AlgebraElement
from .qscalar import Q, RatFunc, qpow


@dataclass(frozen=True)
class IndexConventions:
    n: int

    @property
    def size(self) -> int:
        return 2 * self.n

    def prime(self, i: int) -> int:
        return 2 * self.n + 1 - i

    def eps(self, i: int) -> int:
        return 1 if i <= self.n else -1

    def bar(self, i: int) -> int:
        """``(1bar, ..., (2n)bar) = (n, ..., 1, -1, ..., -n)``."""
        return self.n + 1 - i if i <= self.n else self.n - i

    def indices(self):
        return range(1, 2 * self.n + 1)


@lru_cache(maxsize=None)
def conventions(n: int) -> IndexConventions:
    if n < 1:
        raise ValueError("rank must be at least 1")
    return IndexConventions(n)


@lru_cache(maxsize=None)
def sbar(i: int, j: int, n: int) -> AlgebraElement:
    """Entry ``sbar[i,j]`` rewritten in the generators ``s``.

    ``sbar[i,i] = eps_{i'}``, ``sbar[i,j] = 0`` above the diagonal,
    ``sbar[i,j] = q eps_i eps_j s[j',i']`` for ``j < i != j'`` and the
    anti-diagonal entries follow the recursion
    ``sbar[j',j] = -q^2 s[j',j] + (q^2-1) sum_{m>j} q^{mbar-jbar} sbar[m',m]``.
    """
    c = conventions(n)
    if i < j:
        return AlgebraElement.zero(n)
    if i == j:
        return AlgebraElement.scalar(n, c.eps(c.prime(i)))
    if i != c.prime(j):
        coeff = Q * (c.eps(i) * c.eps(j))
        return AlgebraElement.generator(n, c.prime(j), c.prime(i)).scale(coeff)
    out = AlgebraElement.generator(n, i, j).scale(-(Q * Q))
    for m in range(j + 1, n + 1):
        out = out + sbar(c.prime(m), m, n).scale((Q * Q - 1) * qpow(c.bar(m) - c.bar(j)))
    return out
