"""Hand-transcribed generator relations, checked against the machine ones.

``sre_instance`` writes out the generator form of the reflection equation
term by term.  Several of its sums carry no upper limit; an instance in
which such a sum is switched on is reported as ambiguous, and is checked
separately with the sum closed at ``2n``.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

from .conventions import conventions
from .freealg import AlgebraElement, word_key
from .linspan import LinearSpan
from .pbwengine import central_relation, normalize
from .qscalar import Q, qpow

__all__ = ["entry", "sre_instance", "transcription_cross_check"]


def entry(n: int, x: int, y: int) -> AlgebraElement:
    """``S[x,y]``: a generator below the diagonal, ``eps_x`` on it, 0 above."""
    if x > y:
        return AlgebraElement.generator(n, x, y)
    if x == y:
        return AlgebraElement.scalar(n, conventions(n).eps(x))
    return AlgebraElement.zero(n)


def _d(a: bool) -> int:
    return 1 if a else 0


def sre_instance(i: int, a: int, j: int, b: int, n: int,
                 open_to: Optional[int] = None) -> Optional[AlgebraElement]:
    """``lhs - rhs`` of the transcribed relation for ``s[i,a] s[j,b]``.

    Open-ended sums run up to ``open_to`` when given; otherwise an instance
    with an active open-ended sum returns ``None``.
    """
    c = conventions(n)
    p, e, bar = c.prime, c.eps, c.bar
    h = Q - Q.inverse()
    h2 = h * h
    S = lambda x, y: entry(n, x, y)  # noqa: E731
    N = 2 * n

    def qd(x, y):
        return _d(x == y) - _d(x == p(y))

    open_sums = [
        a == p(i) and (_d(i < j) - _d(b < p(i))) != 0 and p(i) + 1 <= N,
        b == p(i) and p(i) + 1 <= N,
        a == p(j) and p(j) + 1 <= N,
        i == p(j) and i + 1 <= N,
    ]
    if any(open_sums) and open_to is None:
        return None

    lhs = (S(i, a) * S(j, b)).scale(qpow(qd(i, j) + qd(a, j)))
    rhs = (S(j, b) * S(i, a)).scale(qpow(qd(i, b) + qd(a, b)))
    rhs = rhs + (S(j, a) * S(i, b)).scale(h * qpow(qd(i, a)) * (_d(b < a) - _d(i < j)))
    rhs = rhs + (S(j, i) * S(b, a)).scale(h * qpow(qd(a, b)) * _d(b < i))
    rhs = rhs - (S(i, j) * S(a, b)).scale(h * qpow(qd(i, j)) * _d(a < j))
    rhs = rhs + (S(j, i) * S(a, b)).scale(h2 * (_d(b < a < i) - _d(a < i < j)))
    if b == p(a):
        for k in range(1, a):
            coeff = -h * qpow(bar(a) - bar(k) + _d(i == p(k)) - _d(i == k)) * (e(k) * e(a))
            rhs = rhs + (S(j, p(k)) * S(i, k)).scale(coeff)
        for k in range(p(i) + 1, a):
            coeff = -h2 * qpow(bar(a) - bar(k)) * (e(k) * e(a))
            rhs = rhs + (S(j, i) * S(p(k), k)).scale(coeff)
    if open_to is not None:
        top = open_to + 1
        if a == p(i):
            for k in range(p(i) + 1, top):
                coeff = h2 * qpow(bar(k) - bar(p(i))) * (e(i) * e(p(k))) * (_d(i < j) - _d(b < p(i)))
                rhs = rhs + (S(j, k) * S(p(k), b)).scale(coeff)
        if b == p(i):
            for k in range(p(i) + 1, top):
                coeff = -h * qpow(bar(i) - bar(p(k)) + _d(a == p(i)) - _d(a == i)) * (e(i) * e(p(k)))
                rhs = rhs + (S(j, k) * S(p(k), a)).scale(coeff)
        if a == p(j):
            for k in range(p(j) + 1, top):
                coeff = h * qpow(bar(k) - bar(p(j)) + qd(i, j)) * (e(k) * e(p(j)))
                rhs = rhs + (S(i, k) * S(p(k), b)).scale(coeff)
        if i == p(j):
            for k in range(i + 1, top):
                coeff = h * qpow(bar(k) - bar(i) + _d(a == p(k)) - _d(a == k)) * (e(i) * e(k))
                rhs = rhs + (S(k, a) * S(p(k), b)).scale(coeff)
    if i == p(j):
        for k in range(i + 1, p(a)):
            coeff = h2 * qpow(bar(k) - bar(i)) * (e(k) * e(i))
            rhs = rhs + (S(k, p(k)) * S(a, b)).scale(coeff)
    return lhs - rhs


def transcription_cross_check(n: int) -> dict:
    """Compare transcribed instances with the machine-extracted relations.

    * ``sre_not_in_span``: unambiguous instances outside the linear span of
      the expanded reflection and central relations (entry indices).
    * ``sre_not_in_ideal``: instances that do not normalize to 0.
    * ``machine_not_in_span``: quadratic machine relations outside the span
      of the unambiguous transcribed instances.
    * ``open_*``: the same checks for the ambiguous instances with the
      open-ended sums closed at ``2n``.
    * ``central_not_in_span`` / ``central_not_in_ideal``: same for the
      central relations with ``j != i'``.
    """
    from .tensorlab import central_relations, reflection_relations

    key = word_key
    machine_refl = reflection_relations(n)
    machine = LinearSpan(key)
    for r in list(machine_refl.values()) + list(central_relations(n).values()):
        machine.add(r.terms)

    N = 2 * n
    instances: Dict[Tuple[int, int, int, int], AlgebraElement] = {}
    ambiguous: List[Tuple[int, int, int, int]] = []
    for i in range(1, N + 1):
        for a in range(1, N + 1):
            for j in range(1, N + 1):
                for b in range(1, N + 1):
                    if i < a or j < b:
                        continue
                    inst = sre_instance(i, a, j, b, n)
                    if inst is None:
                        ambiguous.append((i, a, j, b))
                    elif not inst.is_zero():
                        instances[(i, a, j, b)] = inst
    sre_not_in_span = [k for k, v in instances.items() if not machine.contains(v.terms)]
    sre_not_in_ideal = [k for k, v in instances.items() if not normalize(v).is_zero()]
    transcribed = LinearSpan(key)
    for v in instances.values():
        transcribed.add(v.terms)
    machine_not_in_span = [k for k, v in machine_refl.items() if not transcribed.contains(v.terms)]

    # reading with the open sums closed at 2n (entries above the diagonal vanish)
    opened = {k: sre_instance(*k, n, open_to=N) for k in ambiguous}
    open_not_in_span = [k for k, v in opened.items() if not machine.contains(v.terms)]
    open_not_in_ideal = [k for k, v in opened.items() if not normalize(v).is_zero()]
    for v in opened.values():
        transcribed.add(v.terms)
    machine_not_in_span_open = [k for k, v in machine_refl.items()
                                if not transcribed.contains(v.terms)]

    c = conventions(n)
    central_not_in_span, central_not_in_ideal = [], []
    for i in range(2, N + 1):
        for j in range(1, i):
            if j == c.prime(i):
                continue
            r = central_relation(i, j, n)
            if not machine.contains(r.terms):
                central_not_in_span.append((i, j))
            if not normalize(r).is_zero():
                central_not_in_ideal.append((i, j))
    return {
        "n": n,
        "instances": len(instances),
        "ambiguous": ambiguous,
        "sre_not_in_span": sre_not_in_span,
        "sre_not_in_ideal": sre_not_in_ideal,
        "machine_not_in_span": machine_not_in_span,
        "open_not_in_span": open_not_in_span,
        "open_not_in_ideal": open_not_in_ideal,
        "machine_not_in_span_open": machine_not_in_span_open,
        "central_not_in_span": central_not_in_span,
        "central_not_in_ideal": central_not_in_ideal,
    }
