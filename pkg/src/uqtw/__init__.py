"""Exact computations in the twisted quantum algebra U_q^tw(gl_n) of type CI.

Submodules: ``qscalar`` (coefficients), ``freealg`` (noncommutative
polynomials), ``tensorlab`` (R-matrix and reflection equation),
``pbwengine`` (rewriting to PBW normal form), ``classical`` and ``poisson``
(the q = 1 side), ``braidact`` (braid group action) and ``cli``.
"""

from .freealg import AlgebraElement, gen
from .pbwengine import normalize, pbw_monomials
from .poisson import PoissonPoly, bracket
from .qscalar import Q, GaussRat, RatFunc

__all__ = [
    "AlgebraElement",
    "GaussRat",
    "PoissonPoly",
    "Q",
    "RatFunc",
    "bracket",
    "gen",
    "normalize",
    "pbw_monomials",
]

__version__ = "0.1.0"
