"""Free associative algebra over Q(i)(q) on the generators ``s[i,j]``.

A generator is a pair ``(row, col)`` with ``row > col``; the diagonal
``s[i,i] = eps_i`` and the upper triangle are constants, never letters.
Words are tuples of generators; elements are ``{word: RatFunc}`` maps.
"""

from __future__ import annotations

from typing import Callable, Dict, Iterable, Mapping, Tuple

from .qscalar import ONE, ZERO, RatFunc

__all__ = [
    "GenId",
    "Word",
    "AlgebraElement",
    "RankMismatch",
    "MissingImage",
    "BadGenerator",
    "is_omega1",
    "is_omega2",
    "all_generators",
    "word_key",
    "stats",
    "gen",
    "add_into",
]

GenId = Tuple[int, int]
Word = Tuple[GenId, ...]


class RankMismatch(ValueError):
    pass


class MissingImage(KeyError):
    pass


class BadGenerator(ValueError):
    pass


def is_omega1(g: GenId, n: int) -> bool:
    """Band generators: ``col' >= row > col``, i.e. ``row + col <= 2n + 1``."""
    i, j = g
    return i > j and i + j <= 2 * n + 1


def is_omega2(g: GenId, n: int) -> bool:
    """Eliminable generators: ``row > col > row'``."""
    i, j = g
    return i > j and i + j > 2 * n + 1


def all_generators(n: int) -> list[GenId]:
    return [(i, j) for i in range(2, 2 * n + 1) for j in range(1, i)]


def check_generator(g: GenId, n: int) -> None:
    i, j = g
    if not (1 <= j < i <= 2 * n):
        raise BadGenerator(f"s[{i},{j}] is not a generator at rank n={n}")


def stats(w: Word) -> Tuple[int, int]:
    """``(length, weight)`` where the weight is the sum of row indices."""
    return len(w), sum(g[0] for g in w)


def word_key(w: Word):
    """Canonical printing order: length, weight, then letters by (row, col)."""
    return (len(w), sum(g[0] for g in w), w)


def add_into(acc: Dict, word, coeff: RatFunc) -> None:
    """``acc[word] += coeff``, dropping zeros."""
    old = acc.get(word)
    if old is None:
        if not coeff.is_zero():
            acc[word] = coeff
        return
    new = old + coeff
    if new.is_zero():
        del acc[word]
    else:
        acc[word] = new


class AlgebraElement:
    """A finite linear combination of words at a fixed rank ``n``."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Word, RatFunc] | None = None):
        self.n = n
        t = {}
        for w, c in (terms or {}).items():
            c = RatFunc.coerce(c)
            if not c.is_zero():
                t[tuple(w)] = c
        self.terms: Dict[Word, RatFunc] = t

    @classmethod
    def _raw(cls, n: int, terms: Dict[Word, RatFunc]) -> "AlgebraElement":
        el = cls.__new__(cls)
        el.n = n
        el.terms = terms
        return el

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "AlgebraElement":
        return cls._raw(n, {})

    @classmethod
    def one(cls, n: int) -> "AlgebraElement":
        return cls._raw(n, {(): ONE})

    @classmethod
    def scalar(cls, n: int, c) -> "AlgebraElement":
        return cls(n, {(): RatFunc.coerce(c)})

    @classmethod
    def generator(cls, n: int, i: int, j: int) -> "AlgebraElement":
        check_generator((i, j), n)
        return cls._raw(n, {((i, j),): ONE})

    @classmethod
    def word(cls, n: int, w: Iterable[GenId], c=ONE) -> "AlgebraElement":
        w = tuple(tuple(g) for g in w)
        for g in w:
            check_generator(g, n)
        return cls(n, {w: c})

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def letters(self) -> set:
        return {g for w in self.terms for g in w}

    def max_length(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "AlgebraElement") -> None:
        if self.n != other.n:
            raise RankMismatch(f"rank {self.n} vs rank {other.n}")

    def _lift(self, other) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            self._check(other)
            return other
        return AlgebraElement.scalar(self.n, other)

    def __add__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        t = dict(self.terms)
        for w, c in other.terms.items():
            add_into(t, w, c)
        return AlgebraElement._raw(self.n, t)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement._raw(self.n, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c) -> "AlgebraElement":
        c = RatFunc.coerce(c)
        if c.is_zero():
            return AlgebraElement.zero(self.n)
        return AlgebraElement._raw(self.n, {w: c * v for w, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        self._check(other)
        t: Dict[Word, RatFunc] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                add_into(t, w1 + w2, c1 * c2)
        return AlgebraElement._raw(self.n, t)

    def __rmul__(self, other):
        # scalars only: noncommutative products go through __mul__
        return self.scale(other)

    def __pow__(self, k: int) -> "AlgebraElement":
        if k < 0:
            raise ValueError("negative powers are not defined")
        out = AlgebraElement.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def __truediv__(self, c):
        return self.scale(RatFunc.coerce(c).inverse())

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.n == other.n and self.terms == other.terms
        try:
            return self == AlgebraElement.scalar(self.n, other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    # -- structure -----------------------------------------------------------

    def substitute(self, images: Mapping[GenId, "AlgebraElement"],
                   reduce: Callable[["AlgebraElement"], "AlgebraElement"] | None = None) -> "AlgebraElement":
        """Apply the algebra map determined by ``images`` on generators.

        ``reduce``, if given, is applied after every multiplication to keep
        intermediate expressions small.
        """
        out: Dict[Word, RatFunc] = {}
        cache: Dict[Word, AlgebraElement] = {(): AlgebraElement.one(self.n)}

        def image_of(w: Word) -> AlgebraElement:
            hit = cache.get(w)
            if hit is not None:
                return hit
            g = w[-1]
            if g not in images:
                raise MissingImage(f"no image for s[{g[0]},{g[1]}]")
            val = image_of(w[:-1]) * images[g]
            if reduce is not None:
                val = reduce(val)
            cache[w] = val
            return val

        for w, c in self.terms.items():
            for w2, c2 in image_of(w).terms.items():
                add_into(out, w2, c * c2)
        return AlgebraElement._raw(self.n, out)

    def map_coefficients(self, f: Callable[[RatFunc], RatFunc]) -> "AlgebraElement":
        return AlgebraElement(self.n, {w: f(c) for w, c in self.terms.items()})

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda wc: word_key(wc[0]))

    def coefficient(self, w: Iterable[GenId]) -> RatFunc:
        return self.terms.get(tuple(tuple(g) for g in w), ZERO)

    def __repr__(self):
        return f"AlgebraElement(n={self.n}, {self})"

    def __str__(self):
        from .printing import format_element

        return format_element(self)


def gen(n: int, i: int, j: int) -> AlgebraElement:
    return AlgebraElement.generator(n, i, j)
