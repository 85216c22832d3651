"""Exact row reduction of sparse vectors indexed by hashable keys."""

from __future__ import annotations

from typing import Dict, Hashable, Iterable, Mapping

from .freealg import add_into
from .qscalar import RatFunc


class LinearSpan:
    """Incrementally maintained echelon basis over Q(i)(q).

    Pivots are chosen by ``key`` (largest first), so the basis is
    deterministic for a given insertion order.
    """

    def __init__(self, key=None):
        self.key = key or (lambda k: k)
        self.rows: Dict[Hashable, Dict[Hashable, RatFunc]] = {}

    def reduce(self, vec: Mapping[Hashable, RatFunc]) -> Dict[Hashable, RatFunc]:
        v = dict(vec)
        while v:
            hits = [k for k in v if k in self.rows]
            if not hits:
                break
            p = max(hits, key=self.key)
            c = v[p]
            for k, x in self.rows[p].items():
                add_into(v, k, -c * x)
        return v

    def add(self, vec: Mapping[Hashable, RatFunc]) -> bool:
        """Insert ``vec``; return True if it enlarged the span."""
        v = self.reduce(vec)
        if not v:
            return False
        p = max(v, key=self.key)
        inv = v[p].inverse()
        self.rows[p] = {k: x * inv for k, x in v.items()}
        return True

    def contains(self, vec: Mapping[Hashable, RatFunc]) -> bool:
        return not self.reduce(vec)

    def __len__(self):
        return len(self.rows)


def span_of(vectors: Iterable[Mapping[Hashable, RatFunc]], key=None) -> LinearSpan:
    sp = LinearSpan(key)
    for v in vectors:
        sp.add(v)
    return sp
