"""Exact scalars for the twisted algebra: the field Q(i)(q).

Three layers:

* :class:`GaussRat` -- numbers ``a + b*i`` with ``a, b`` rational.
* :class:`LaurentPoly` -- finitely supported ``{exponent: GaussRat}`` maps,
  a thin value type used for construction, printing and tests.
* :class:`RatFunc` -- reduced quotients of Laurent polynomials.  This is the
  workhorse coefficient type, so it is backed by ``flint.fmpq_poly`` pairs
  (real part, imaginary part) instead of Python dictionaries.

``RatFunc`` values are canonical: ``q**v * N(q) / D(q)`` with ``N(0) != 0``,
``D(0) == 1`` and ``gcd(N, D) == 1`` over Q(i).  Two values are equal iff
their stored data are identical.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Tuple, Union

import flint

__all__ = [
    "GaussRat",
    "LaurentPoly",
    "RatFunc",
    "ScalarError",
    "DivisionByZero",
    "BadArgs",
    "ZeroInput",
    "PoleAtOne",
    "Q",
    "ONE",
    "ZERO",
    "I_UNIT",
    "qpow",
    "qint",
    "qbinom",
    "qfactorial",
    "order_at_one",
    "eval_at_one_after_dividing",
]


class ScalarError(ArithmeticError):
    """Base class for scalar-layer errors."""


class DivisionByZero(ScalarError, ZeroDivisionError):
    pass


class BadArgs(ScalarError, ValueError):
    pass


class ZeroInput(ScalarError, ValueError):
    pass


class PoleAtOne(ScalarError):
    pass


# ---------------------------------------------------------------------------
# Gaussian rationals
# ---------------------------------------------------------------------------

Number = Union[int, Fraction, "GaussRat"]


class GaussRat:
    """An exact Gaussian rational ``re + im*i``."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussRat):
            re, im = re.re, re.im + Fraction(im)
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRat is immutable")

    @staticmethod
    def coerce(x) -> "GaussRat":
        if isinstance(x, GaussRat):
            return x
        if isinstance(x, complex):
            raise TypeError("floating point complex values are not exact")
        return GaussRat(x)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def conjugate(self) -> "GaussRat":
        return GaussRat(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __add__(self, other):
        try:
            o = GaussRat.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussRat(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __sub__(self, other):
        try:
            o = GaussRat.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussRat(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return GaussRat.coerce(other) - self

    def __mul__(self, other):
        try:
            o = GaussRat.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussRat(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def inverse(self) -> "GaussRat":
        n = self.norm()
        if n == 0:
            raise DivisionByZero("inverse of zero")
        return GaussRat(self.re / n, -self.im / n)

    def __truediv__(self, other):
        try:
            o = GaussRat.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return GaussRat.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = GaussRat(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        try:
            o = GaussRat.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"GaussRat({self})"

    def __str__(self):
        return format_gauss(self)


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_gauss(c: GaussRat) -> str:
    """Render ``c`` in the CLI scalar syntax (``3/2``, ``-i``, ``(1+2*i)``)."""
    if c.im == 0:
        return _frac_str(c.re)
    if c.re == 0:
        if c.im == 1:
            return "i"
        if c.im == -1:
            return "-i"
        return f"{_frac_str(c.im)}*i"
    im = c.im
    sign = "+" if im > 0 else "-"
    mag = abs(im)
    imag = "i" if mag == 1 else f"{_frac_str(mag)}*i"
    return f"({_frac_str(c.re)}{sign}{imag})"


I_UNIT = GaussRat(0, 1)


# ---------------------------------------------------------------------------
# Gaussian polynomials as (real, imag) fmpq_poly pairs
# ---------------------------------------------------------------------------

_P = flint.fmpq_poly
_PZERO = _P([])
_PONE = _P([1])


def _gmul(ar, ai, br, bi):
    if ai.is_zero():
        if bi.is_zero():
            return ar * br, _PZERO
        return ar * br, ar * bi
    if bi.is_zero():
        return ar * br, ai * br
    return ar * br - ai * bi, ar * bi + ai * br


def _gdeg(ar, ai):
    return max(ar.degree(), ai.degree())


def _glead(ar, ai):
    d = _gdeg(ar, ai)
    return GaussRat(_fq(ar[d]), _fq(ai[d]))


def _fq(x) -> Fraction:
    x = flint.fmpq(x)
    return Fraction(int(x.p), int(x.q))


def _scale(ar, ai, c: GaussRat):
    """Multiply the Gaussian polynomial by the Gaussian scalar ``c``."""
    cr = flint.fmpq(c.re.numerator, c.re.denominator)
    if c.im == 0:
        return ar * cr, ai * cr
    ci = flint.fmpq(c.im.numerator, c.im.denominator)
    return ar * cr - ai * ci, ar * ci + ai * cr


def _gdivmod(ar, ai, br, bi):
    """Euclidean division over Q(i)[q] using the real norm of the divisor."""
    if bi.is_zero():
        return ar // br, ai // br, ar % br, ai % br
    nb = br * br + bi * bi
    # a * conj(b) = quot * nb + rem', and quot is the Q(i)[q] quotient
    pr, pi = _gmul(ar, ai, br, -bi)
    qr, qi = pr // nb, pi // nb
    tr, ti = _gmul(qr, qi, br, bi)
    return qr, qi, ar - tr, ai - ti


def _ggcd(ar, ai, br, bi):
    """Monic gcd over Q(i)[q]."""
    if ai.is_zero() and bi.is_zero():
        return ar.gcd(br), _PZERO
    while not (br.is_zero() and bi.is_zero()):
        _, _, rr, ri = _gdivmod(ar, ai, br, bi)
        ar, ai, br, bi = br, bi, rr, ri
    if ar.is_zero() and ai.is_zero():
        return ar, ai
    return _scale(ar, ai, _glead(ar, ai).inverse())


def _gexactdiv(ar, ai, br, bi):
    qr, qi, rr, ri = _gdivmod(ar, ai, br, bi)
    if not (rr.is_zero() and ri.is_zero()):
        raise AssertionError("inexact polynomial division")
    return qr, qi


def _valuation(ar, ai) -> int:
    if ar.is_zero() and ai.is_zero():
        return 0
    k = 0
    while ar[k] == 0 and ai[k] == 0:
        k += 1
    return k


def _geval(ar, ai, x: GaussRat) -> GaussRat:
    """Horner evaluation at a Gaussian rational point."""
    d = _gdeg(ar, ai)
    acc = GaussRat(0)
    for k in range(d, -1, -1):
        acc = acc * x + GaussRat(_fq(ar[k]), _fq(ai[k]))
    return acc


# ---------------------------------------------------------------------------
# Laurent polynomials (value type)
# ---------------------------------------------------------------------------


class LaurentPoly:
    """A Laurent polynomial in ``q`` with Gaussian-rational coefficients.

    Stored as an ``{exponent: GaussRat}`` map with no zero entries.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Dict[int, Number] | None = None):
        c = {}
        for e, v in (coeffs or {}).items():
            v = GaussRat.coerce(v)
            if not v.is_zero():
                c[int(e)] = v
        self._c = c

    @property
    def coeffs(self) -> Dict[int, GaussRat]:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, GaussRat(0)) + v
        return LaurentPoly(c)

    def __neg__(self):
        return LaurentPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        c: Dict[int, GaussRat] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, GaussRat(0)) + v1 * v2
        return LaurentPoly(c)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def evaluate(self, x: Number) -> GaussRat:
        x = GaussRat.coerce(x)
        return sum((v * x ** e for e, v in self._c.items()), GaussRat(0))

    def to_ratfunc(self) -> "RatFunc":
        return RatFunc.from_laurent(self._c)

    def __repr__(self):
        return f"LaurentPoly({self.to_ratfunc()})"


# ---------------------------------------------------------------------------
# Rational functions
# ---------------------------------------------------------------------------


class RatFunc:
    """A reduced element ``q**v * N / D`` of Q(i)(q).

    Construct with :meth:`const`, :data:`Q`, :meth:`from_laurent` or by
    arithmetic.  Instances are immutable.
    """

    __slots__ = ("_v", "_nr", "_ni", "_dr", "_di", "_hash")

    def __init__(self, v, nr, ni, dr, di):
        # trusted constructor: arguments must already be canonical
        self._v = v
        self._nr = nr
        self._ni = ni
        self._dr = dr
        self._di = di
        self._hash = None

    # -- construction ------------------------------------------------------

    @staticmethod
    def _make(v, nr, ni, dr, di, reduce=True) -> "RatFunc":
        if nr.is_zero() and ni.is_zero():
            return ZERO
        if reduce and (dr.degree() > 0 or di.degree() > 0):
            if ni.is_zero() and di.is_zero():
                g = nr.gcd(dr)
                if g.degree() > 0:
                    nr = nr // g
                    dr = dr // g
            else:
                gr, gi = _ggcd(nr, ni, dr, di)
                if _gdeg(gr, gi) > 0:
                    nr, ni = _gexactdiv(nr, ni, gr, gi)
                    dr, di = _gexactdiv(dr, di, gr, gi)
        k = _valuation(nr, ni)
        if k:
            nr, ni = nr.right_shift(k), ni.right_shift(k)
            v += k
        k = _valuation(dr, di)
        if k:
            dr, di = dr.right_shift(k), di.right_shift(k)
            v -= k
        d0r, d0i = dr[0], di[0]
        if not (d0r == 1 and d0i == 0):
            c = GaussRat(_fq(d0r), _fq(d0i)).inverse()
            nr, ni = _scale(nr, ni, c)
            dr, di = _scale(dr, di, c)
        return RatFunc(v, nr, ni, dr, di)

    @staticmethod
    def const(c: Number) -> "RatFunc":
        c = GaussRat.coerce(c)
        if c.is_zero():
            return ZERO
        return RatFunc(
            0,
            _P([flint.fmpq(c.re.numerator, c.re.denominator)]),
            _P([flint.fmpq(c.im.numerator, c.im.denominator)]) if c.im else _PZERO,
            _PONE,
            _PZERO,
        )

    @staticmethod
    def from_laurent(coeffs: Dict[int, Number]) -> "RatFunc":
        items = [(e, GaussRat.coerce(c)) for e, c in coeffs.items()]
        items = [(e, c) for e, c in items if not c.is_zero()]
        if not items:
            return ZERO
        lo = min(e for e, _ in items)
        hi = max(e for e, _ in items)
        re = [flint.fmpq(0)] * (hi - lo + 1)
        im = [flint.fmpq(0)] * (hi - lo + 1)
        for e, c in items:
            re[e - lo] = flint.fmpq(c.re.numerator, c.re.denominator)
            im[e - lo] = flint.fmpq(c.im.numerator, c.im.denominator)
        return RatFunc._make(lo, _P(re), _P(im), _PONE, _PZERO, reduce=False)

    @staticmethod
    def coerce(x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, LaurentPoly):
            return x.to_ratfunc()
        return RatFunc.const(x)

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return self is ZERO or (self._nr.is_zero() and self._ni.is_zero())

    def is_one(self) -> bool:
        return self._v == 0 and self.is_polynomial() and self._nr.is_one() and self._ni.is_zero()

    def is_polynomial(self) -> bool:
        """True when the denominator is 1 (a Laurent polynomial)."""
        return self._dr.is_one() and self._di.is_zero()

    def is_real(self) -> bool:
        return self._ni.is_zero() and self._di.is_zero()

    def is_constant(self) -> bool:
        return self._v == 0 and self.is_polynomial() and _gdeg(self._nr, self._ni) <= 0

    def is_monomial(self) -> bool:
        """True for ``c * q**k`` with ``c`` a nonzero Gaussian rational."""
        return self.is_polynomial() and _gdeg(self._nr, self._ni) == 0

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, RatFunc):
            try:
                other = RatFunc.coerce(other)
            except TypeError:
                return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        v1, v2 = self._v, other._v
        m = min(v1, v2)
        a_r, a_i = self._nr, self._ni
        b_r, b_i = other._nr, other._ni
        if v1 > m:
            a_r, a_i = a_r.left_shift(v1 - m), a_i.left_shift(v1 - m)
        if v2 > m:
            b_r, b_i = b_r.left_shift(v2 - m), b_i.left_shift(v2 - m)
        if self.is_polynomial() and other.is_polynomial():
            return RatFunc._make(m, a_r + b_r, a_i + b_i, _PONE, _PZERO, reduce=False)
        if self._dr == other._dr and self._di == other._di:
            return RatFunc._make(m, a_r + b_r, a_i + b_i, self._dr, self._di)
        x_r, x_i = _gmul(a_r, a_i, other._dr, other._di)
        y_r, y_i = _gmul(b_r, b_i, self._dr, self._di)
        d_r, d_i = _gmul(self._dr, self._di, other._dr, other._di)
        return RatFunc._make(m, x_r + y_r, x_i + y_i, d_r, d_i)

    __radd__ = __add__

    def __neg__(self):
        if self.is_zero():
            return self
        return RatFunc(self._v, -self._nr, -self._ni, self._dr, self._di)

    def __sub__(self, other):
        if not isinstance(other, RatFunc):
            try:
                other = RatFunc.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return RatFunc.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, RatFunc):
            try:
                other = RatFunc.coerce(other)
            except TypeError:
                return NotImplemented
        if self.is_zero() or other.is_zero():
            return ZERO
        v = self._v + other._v
        n_r, n_i = _gmul(self._nr, self._ni, other._nr, other._ni)
        if self.is_polynomial() and other.is_polynomial():
            return RatFunc(v, n_r, n_i, _PONE, _PZERO)
        d_r, d_i = _gmul(self._dr, self._di, other._dr, other._di)
        return RatFunc._make(v, n_r, n_i, d_r, d_i)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise DivisionByZero("inverse of the zero rational function")
        return RatFunc._make(-self._v, self._dr, self._di, self._nr, self._ni, reduce=False)

    def __truediv__(self, other):
        if not isinstance(other, RatFunc):
            try:
                other = RatFunc.coerce(other)
            except TypeError:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "RatFunc":
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "RatFunc":
        """Complex conjugation of the coefficients (``q`` stays real)."""
        return RatFunc(self._v, self._nr, -self._ni, self._dr, -self._di)

    # -- comparison ----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            try:
                other = RatFunc.coerce(other)
            except TypeError:
                return NotImplemented
        return (
            self._v == other._v
            and self._nr == other._nr
            and self._ni == other._ni
            and self._dr == other._dr
            and self._di == other._di
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._v, str(self._nr), str(self._ni), str(self._dr), str(self._di)))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    # -- inspection ---------------------------------------------------------

    def numerator(self) -> Dict[int, GaussRat]:
        """Laurent coefficients of ``q**v * N``."""
        return _coeff_map(self._nr, self._ni, self._v)

    def denominator(self) -> Dict[int, GaussRat]:
        return _coeff_map(self._dr, self._di, 0)

    def laurent(self) -> LaurentPoly:
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return LaurentPoly(self.numerator())

    def constant_value(self) -> GaussRat:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return GaussRat(_fq(self._nr[0]), _fq(self._ni[0]))

    def evaluate(self, x: Number) -> GaussRat:
        """Value at ``q = x``; ``x`` must not be a root of the denominator."""
        x = GaussRat.coerce(x)
        den = _geval(self._dr, self._di, x)
        if den.is_zero():
            raise DivisionByZero(f"{self} has a pole at q = {x}")
        if x.is_zero() and self._v < 0:
            raise DivisionByZero("pole at q = 0")
        return _geval(self._nr, self._ni, x) * x ** self._v / den

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        return format_ratfunc(self)


def _coeff_map(re, im, shift) -> Dict[int, GaussRat]:
    out = {}
    for k in range(_gdeg(re, im) + 1):
        c = GaussRat(_fq(re[k]), _fq(im[k]))
        if not c.is_zero():
            out[k + shift] = c
    return out


ZERO = RatFunc(0, _PZERO, _PZERO, _PONE, _PZERO)
ONE = RatFunc(0, _PONE, _PZERO, _PONE, _PZERO)
Q = RatFunc(1, _PONE, _PZERO, _PONE, _PZERO)


# ---------------------------------------------------------------------------
# Printing in the CLI scalar syntax
# ---------------------------------------------------------------------------


def _format_laurent(coeffs: Dict[int, GaussRat]) -> str:
    if not coeffs:
        return "0"
    parts = []
    for e in sorted(coeffs, reverse=True):
        c = coeffs[e]
        if e == 0:
            mono = ""
        elif e == 1:
            mono = "q"
        else:
            mono = f"q^{e}"
        neg = False
        if c.im == 0 and c.re < 0:
            neg, c = True, -c
        elif c.re == 0 and c.im < 0:
            neg, c = True, -c
        if mono and c == 1:
            body = mono
        elif mono:
            body = f"{format_gauss(c)}*{mono}"
        else:
            body = format_gauss(c)
        parts.append(("-" if neg else "+", body))
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def format_ratfunc(x: RatFunc) -> str:
    num = _format_laurent(x.numerator())
    if x.is_polynomial():
        return num
    den = _format_laurent(x.denominator())
    return f"({num})/({den})"


def format_numerator(x: RatFunc) -> str:
    return _format_laurent(x.numerator())


def format_denominator(x: RatFunc) -> str:
    return _format_laurent(x.denominator())


# ---------------------------------------------------------------------------
# q-combinatorics and behaviour at q = 1
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def qpow(k: int) -> RatFunc:
    return RatFunc(k, _PONE, _PZERO, _PONE, _PZERO)


@lru_cache(maxsize=None)
def qint(k: int, d: int = 1) -> RatFunc:
    """The q-integer ``(q^{dk} - q^{-dk}) / (q^d - q^{-d})``."""
    if k < 0 or d < 1:
        raise BadArgs(f"qint needs k >= 0 and d >= 1, got k={k}, d={d}")
    # symmetric sum q^{d(k-1)} + q^{d(k-3)} + ... + q^{-d(k-1)}
    return RatFunc.from_laurent({d * (k - 1 - 2 * t): 1 for t in range(k)})


@lru_cache(maxsize=None)
def qfactorial(k: int, d: int = 1) -> RatFunc:
    out = ONE
    for s in range(1, k + 1):
        out = out * qint(s, d)
    return out


@lru_cache(maxsize=None)
def qbinom(k: int, r: int, d: int = 1) -> RatFunc:
    if d < 1 or k < 0 or r < 0:
        raise BadArgs("qbinom needs k, r >= 0 and d >= 1")
    if r > k:
        raise BadArgs(f"qbinom needs r <= k, got k={k}, r={r}")
    out = qfactorial(k, d) / (qfactorial(r, d) * qfactorial(k - r, d))
    if not out.is_polynomial():
        raise AssertionError("q-binomial must be a Laurent polynomial")
    return out


_QM1 = _P([-1, 1])


def _order_at_one(re, im) -> int:
    k = 0
    while True:
        rr, ri = re % _QM1, im % _QM1
        if not (rr.is_zero() and ri.is_zero()):
            return k
        re, im = re // _QM1, im // _QM1
        k += 1


def order_at_one(x: RatFunc) -> int:
    """The integer ``v`` with ``x = (q - 1)**v * u`` and ``u(1)`` finite, nonzero."""
    if x.is_zero():
        raise ZeroInput("order_at_one of zero is undefined")
    return _order_at_one(x._nr, x._ni) - _order_at_one(x._dr, x._di)


def eval_at_one_after_dividing(x: RatFunc, v: int) -> GaussRat:
    """Value of ``x / (1 - q)**v`` at ``q = 1``."""
    if x.is_zero():
        return GaussRat(0)
    order = order_at_one(x)
    if order < v:
        raise PoleAtOne(f"{x} vanishes to order {order} < {v} at q = 1")
    if order > v:
        return GaussRat(0)
    nr, ni = x._nr, x._ni
    for _ in range(max(v, 0)):
        nr, ni = nr // _QM1, ni // _QM1
    dr, di = x._dr, x._di
    for _ in range(max(-v, 0)):
        dr, di = dr // _QM1, di // _QM1
    val = _geval(nr, ni, GaussRat(1)) / _geval(dr, di, GaussRat(1))
    return val * GaussRat((-1) ** (v % 2))


def gauss_sum(xs: Iterable[GaussRat]) -> GaussRat:
    return sum(xs, GaussRat(0))


def as_ratfunc(x) -> RatFunc:
    return RatFunc.coerce(x)
