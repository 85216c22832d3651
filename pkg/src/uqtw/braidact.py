"""Braid group action on the band generators and its audits.

The images of ``s_m = s[m+1,m]`` are the primary data; images of every
other generator are obtained by pushing the band images through
``express_sij`` and normalizing.  The explicit table for non-band
generators is kept separately and compared against that extension.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from .conventions import conventions
from .freealg import AlgebraElement, GenId, all_generators
from .pbwengine import (
    band,
    build_rule_table,
    express_sij,
    iserre_list,
    normalize,
    pbw_generators,
    serre_list,
)
from .qscalar import I_UNIT, ONE, Q, qpow
from .transcribed import entry

__all__ = [
    "BadNode",
    "UnresolvedTableEntry",
    "BraidAuto",
    "chi_sign",
    "beta",
    "apply",
    "apply_word",
    "extended_table",
    "table_image",
    "table_consistency",
    "verify_automorphism",
    "verify_inverse",
    "verify_braid_relations",
    "iota_relations_audit",
]


class BadNode(ValueError):
    pass


class UnresolvedTableEntry(KeyError):
    pass


CONVENTIONS = ("plain", "signed")


@dataclass(frozen=True)
class BraidAuto:
    """``beta_k`` (``direction=+1``) or its inverse (``-1``) at rank ``n``.

    ``convention="plain"`` takes the band images as listed.
    ``"signed"`` precomposes ``beta_{n-1}`` and ``beta_n`` with the sign
    automorphism ``s_n -> -s_n``; with it the braid relations hold exactly.
    """

    k: int
    n: int
    direction: int
    images: Tuple[Tuple[int, AlgebraElement], ...]
    convention: str = "plain"

    def image(self, m: int) -> AlgebraElement:
        return dict(self.images)[m]

    def band_images(self) -> Dict[GenId, AlgebraElement]:
        return {(m + 1, m): img for m, img in self.images}


def _band_images(k: int, n: int, direction: int) -> Dict[int, AlgebraElement]:
    s = {m: band(m, n) for m in range(1, n + 1)}
    h = Q - Q.inverse()
    out = dict(s)
    out[k] = -s[k]
    fwd = direction > 0
    if k <= n - 2:
        a, b = s[k + 1], s[k]
        if fwd:
            out[k + 1] = ((a * b).scale(Q) - b * a).scale(h.inverse())
        else:
            out[k + 1] = (a * b - (b * a).scale(Q)).scale(h.inverse())
    if 2 <= k <= n - 1:
        a, b = s[k], s[k - 1]
        if fwd:
            out[k - 1] = (a * b - (b * a).scale(Q)).scale(h.inverse())
        else:
            out[k - 1] = ((a * b).scale(Q) - b * a).scale(h.inverse())
    if k == n - 1:
        two = Q + Q.inverse()
        c = -(two * h * h).inverse()
        x, y = s[n - 1], s[n]
        if fwd:
            cubic = x * x * y - (x * y * x).scale(Q * two) + (y * x * x).scale(Q * Q)
        else:
            cubic = y * x * x - (x * y * x).scale(Q * two) + (x * x * y).scale(Q * Q)
        out[n] = cubic.scale(c) - y
    if k == n and n >= 2:
        H = Q * Q - Q.inverse() * Q.inverse()
        x, y = s[n], s[n - 1]
        c = I_UNIT * H.inverse()
        if fwd:
            out[n - 1] = (x * y - (y * x).scale(Q * Q)).scale(c)
        else:
            out[n - 1] = ((x * y).scale(Q * Q) - y * x).scale(c)
    return out


def chi_sign(g: GenId, n: int) -> int:
    """``s[i,j] -> chi_sign * s[i,j]`` under the sign automorphism
    ``s_n -> -s_n``: -1 exactly when ``j <= n < i`` (odd degree in ``s_n``)."""
    i, j = g
    return -1 if j <= n < i else 1


def _flip_top(x: AlgebraElement, n: int) -> AlgebraElement:
    return x.substitute({(m + 1, m): band(m, n) if m < n else -band(n, n)
                         for m in range(1, n + 1)})


@lru_cache(maxsize=None)
def beta(k: int, n: int, direction: int = 1, convention: str = "plain") -> BraidAuto:
    """Generator images of ``beta_k`` (``direction=-1`` for the inverse)."""
    if not 1 <= k <= n:
        raise BadNode(f"node {k} outside 1..{n}")
    if direction not in (1, -1):
        raise ValueError("direction must be +1 or -1")
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    imgs = _band_images(k, n, direction)
    if convention == "signed" and k >= n - 1:
        if direction > 0:
            imgs[n] = -imgs[n]
        else:
            imgs = {m: _flip_top(x, n) for m, x in imgs.items()}
    return BraidAuto(k, n, direction, tuple(sorted(imgs.items())), convention)


@lru_cache(maxsize=None)
def _generator_image(b: BraidAuto, g: GenId) -> AlgebraElement:
    """Normalized image of any generator, through ``express_sij``."""
    i, j = g
    if i == j + 1 and i <= b.n + 1:
        return normalize(b.image(j))
    return normalize(express_sij(i, j, b.n).substitute(b.band_images(), reduce=normalize))


def _images(b: BraidAuto, x: AlgebraElement) -> Dict[GenId, AlgebraElement]:
    return {g: _generator_image(b, g) for g in x.letters()}


def apply(b: BraidAuto, x: AlgebraElement) -> AlgebraElement:
    """Image of ``x`` under ``b``, in normal form."""
    if x.n != b.n:
        raise ValueError("rank mismatch")
    x = normalize(x)
    return normalize(x.substitute(_images(b, x), reduce=normalize))


def apply_word(word: Sequence[int], x: AlgebraElement, convention: str = "plain") -> AlgebraElement:
    """Apply ``beta_{w_1} beta_{w_2} ... `` (rightmost acts first); negative
    entries denote inverses."""
    out = normalize(x)
    for k in reversed(list(word)):
        if k == 0:
            raise BadNode("node 0")
        out = apply(beta(abs(k), x.n, 1 if k > 0 else -1, convention), out)
    return out


# ---------------------------------------------------------------------------
# explicit table for non-band generators
# ---------------------------------------------------------------------------


TABLE_VARIANTS = ("printed", "corrected")


def _table_rows(k: int, n: int, variant: str = "printed") -> List[Tuple[GenId, str, AlgebraElement]]:
    """Explicit rows ``(generator, source, image)`` in listed order.

    ``source`` is ``"table"`` for the main list and ``"special"`` for the
    separately stated rows of the two special nodes.  Rows whose index
    range collides with an explicitly listed row are skipped for that
    index.  ``variant="corrected"`` replaces the rows that disagree with
    the multiplicative extension by repaired ones.
    """
    if variant not in TABLE_VARIANTS:
        raise ValueError(f"unknown table variant {variant!r}")
    fixed = variant == "corrected"
    h = Q - Q.inverse()
    c = conventions(n)
    p, bar, eps = c.prime, c.bar, c.eps
    N = 2 * n
    qinv = Q.inverse()
    S = lambda i, j: entry(n, i, j)  # noqa: E731
    rows: List[Tuple[GenId, str, AlgebraElement]] = []
    t: Dict[GenId, AlgebraElement] = {}

    def put(key: GenId, img: AlgebraElement, source: str = "table") -> None:
        rows.append((key, source, img))
        if source == "table":
            t.setdefault(key, img)

    def b(key: GenId) -> AlgebraElement:
        # image of an already listed row, identity when the table says "otherwise"
        i, j = key
        if i <= j:
            return S(i, j)
        return t.get(key, S(i, j))

    if k <= n - 2:
        kp = p(k)
        put((k + 1, k), -S(k + 1, k))
        for l in range(k + 2, kp - 1):
            put((l, k), S(l, k + 1).scale(qinv) - S(l, k) * S(k + 1, k))
            put((l, k + 1), S(l, k))
        for l in range(1, k):
            put((k, l), S(k + 1, l).scale(Q) - (S(k + 1, k) * S(k, l)).scale(Q))
            put((k + 1, l), S(k, l))
        put((kp - 1, k + 1), (S(kp - 1, k) * S(k + 1, k)).scale(qinv) + S(kp, k).scale(qinv)
            + S(kp - 1, k + 1).scale(ONE - qinv * qinv))
        if fixed:
            # one step of the row recursion through s[k'-2,k] and s[k+2,k+1]
            top = ((S(k + 2, k + 1) * S(k + 1, k)).scale(Q) - S(k + 1, k) * S(k + 2, k + 1)).scale(h.inverse())
            low = b((kp - 2, k))
            img = (low * top - (top * low).scale(Q)).scale(h.inverse())
        else:
            img = S(kp, k).scale(qpow(bar(kp - 1) - bar(k) + 1))
            img = img - (b((kp - 1, k + 1)) * S(k + 1, k)).scale(qpow(2 * bar(k + 1) + 1))
            for s in range(k + 2, kp - 1):
                img = img + (S(p(s), k) * b((s, k))).scale(qpow(bar(kp - 1) - bar(s) + 1) * eps(s))
        put((kp - 1, k), img)
        for l in range(1, k):
            put((kp - 1, l), (S(kp, kp - 1) * S(kp - 1, l)).scale(Q) + S(kp, l).scale(Q))
            put((kp, l), S(kp - 1, l))
        put((kp, k), -(S(kp - 1, k) * S(k + 1, k)) + S(kp - 1, k + 1).scale(qinv))
        if k >= 2:
            put((kp + 1, k - 1), S(kp + 1, k - 1) + (S(kp - 1, k) * S(kp, kp - 1)).scale(qinv)
                - S(kp - 1, k + 1).scale(qinv * qinv) + b((kp, k)).scale(qinv if fixed else -qinv))
        for m in range(n, 0, -1):
            if m in (k - 1, k, k + 1):
                continue
            put((p(m), m), S(p(m), m) - S(p(m) - 1, m + 1).scale(qinv)
                + b((p(m) - 1, m + 1)).scale(qinv))
        return rows
    if k == n - 1:
        put((n, n - 1), -S(n, n - 1))
        if fixed:
            x = S(n, n - 1)
            put((n + 1, n - 1), -S(n + 1, n - 1).scale(Q * Q) + (x * S(n + 2, n - 1)).scale(Q ** 3)
                + (x * x * S(n + 1, n - 1)).scale(Q ** 3))
        else:
            put((n + 1, n - 1), -S(n + 2, n - 1))
            put((n + 1, n - 1), -S(n + 2, n), "special")
        put((n + 2, n), -S(n + 1, n - 1), "special")
        for l in range(1, n - 1):
            put((n - 1, l), S(n, l).scale(Q) - (S(n, n - 1) * S(n - 1, l)).scale(Q))
            put((n, l), S(n - 1, l))
        put((n + 1, n), -(S(n + 2, n + 1) * S(n + 1, n - 1)).scale(Q) - S(n + 2, n - 1).scale(Q))
        put((n + 2, n - 1), S(n + 2, n - 1).scale(Q * Q - 1) - S(n + 1, n).scale(Q)
            + (S(n, n - 1) * S(n + 1, n - 1)).scale(Q * Q))
        for l in range(1, n - 1):
            if fixed:
                put((n + 1, l), -S(n + 2, l).scale(Q) - (S(n, n - 1) * S(n + 1, l)).scale(Q))
                continue
            inner = AlgebraElement.zero(n)
            for s in range(n + 3, p(l) + 1):
                inner = inner + (S(s, n) * S(p(s), l)).scale(qpow(bar(s) - bar(n + 2)))
            put((n + 1, l), -S(n + 2, l).scale(Q) + (S(n, n - 1) * inner).scale(Q)
                + (S(n + 2, n - 1) * S(n - 1, l)).scale(Q) - S(n + 1, n) * S(n - 1, l))
        for l in range(1, n - 1):
            put((n + 2, l), -S(n + 1, l))
        if n >= 3:
            put((n + 3, n - 2), -S(n + 3, n - 2) - (S(n + 1, n - 1) * S(n, n - 1)).scale(qinv)
                + S(n + 1, n).scale(qinv * qinv) + b((n + 2, n - 1)).scale(qinv))
        for m in range(n + 3, N + 1):
            if m >= n + 4:
                put((m, p(m)), -S(m, p(m)) + S(m - 1, p(m) + 1).scale(qinv)
                    + b((m - 1, p(m) + 1)).scale(qinv))
            if m >= n + 4 or fixed:
                for l in range(1, p(m)):
                    put((m, l), -S(m, l))
        return rows
    # k == n
    put((n + 1, n), -S(n + 1, n))
    for l in range(1, n):
        qn = Q * Q if fixed else Q
        put((n, l), (S(n + 1, l).scale(qn) - (S(n + 1, n) * S(n, l)).scale(qn)).scale(I_UNIT))
        put((n + 1, l), S(n, l).scale(-I_UNIT))
    if n >= 2:
        put((n, n - 1), S(n + 2, n).scale(I_UNIT), "special")
        put((n + 2, n - 1), -S(n + 2, n - 1))
    for m in range(n + 3, N + 1):
        put((m, p(m)), -S(m, p(m)) + S(m - 1, p(m) + 1).scale(qinv)
            + b((m - 1, p(m) + 1)).scale(qinv if fixed else -qinv))
    if fixed:
        for m in range(n + 2, N + 1):
            for l in range(1, p(m)):
                put((m, l), -S(m, l))
    return rows


def extended_table(k: int, n: int, variant: str = "printed") -> Dict[GenId, AlgebraElement]:
    """Explicit images of generators under ``beta_k`` (main list only).

    Recursive rows are resolved in listed order; generators not listed
    are fixed.
    """
    if not 1 <= k <= n:
        raise BadNode(f"node {k} outside 1..{n}")
    out: Dict[GenId, AlgebraElement] = {}
    for key, source, img in _table_rows(k, n, variant):
        if source == "table":
            out.setdefault(key, img)
    return out


def table_image(k: int, n: int, g: GenId, variant: str = "printed") -> AlgebraElement:
    """Table image of ``g``; the identity for unlisted generators."""
    tab = extended_table(k, n, variant)
    if g in tab:
        return tab[g]
    if g not in all_generators(n):
        raise UnresolvedTableEntry(f"s[{g[0]},{g[1]}] is not a generator at n={n}")
    return AlgebraElement.generator(n, *g)


def table_consistency(k: int, n: int, convention: str = "plain",
                      variant: str = "printed") -> List[dict]:
    """Compare every explicit row, and the identity on every unlisted
    Omega_1 generator, with the multiplicative extension of the band
    images.  Each report row carries the normalized residual.

    Under ``"signed"`` the rows of ``beta_{n-1}``, ``beta_n`` are read as
    images of ``chi(s[i,j])``, ``chi`` being the sign automorphism.
    """
    b = beta(k, n, 1, convention)
    twist = convention == "signed" and k >= n - 1
    rows = list(_table_rows(k, n, variant))
    listed = {key for key, _, _ in rows}
    for g in pbw_generators(n):
        if g not in listed:
            rows.append((g, "identity", AlgebraElement.generator(n, *g)))
    out = []
    for key, src, img in rows:
        if twist and chi_sign(key, n) < 0:
            img = -img
        res = normalize(img) - _generator_image(b, key)
        out.append({"generator": key, "source": src, "residual": res, "zero": res.is_zero()})
    return out


# ---------------------------------------------------------------------------
# audits
# ---------------------------------------------------------------------------


def _relations_for_audit(n: int) -> List[Tuple[str, AlgebraElement]]:
    table = build_rule_table(n)
    rels = []
    for (x, z), rhs in sorted(table.rules.items()):
        lhs = AlgebraElement.word(n, (x, z))
        rels.append((f"rule[{x},{z}]", lhs - rhs))
    for name, rel in serre_list(n):
        if name in ("line3", "line4"):
            continue
        rels.append((name, rel))
    return rels


def verify_automorphism(k: int, n: int, direction: int = 1,
                        convention: str = "plain") -> List[dict]:
    """Map every rewriting relation and every Serre relation through
    ``beta_k`` and normalize; a sound map leaves only zero residuals."""
    b = beta(k, n, direction, convention)
    out = []
    for name, rel in _relations_for_audit(n):
        res = normalize(rel.substitute(_images(b, rel), reduce=normalize))
        out.append({"relation": name, "residual": res, "zero": res.is_zero()})
    return out


def verify_inverse(n: int, convention: str = "plain") -> List[dict]:
    """``beta_k^-1 beta_k`` and ``beta_k beta_k^-1`` on every band generator."""
    out = []
    for k in range(1, n + 1):
        for m in range(1, n + 1):
            s = band(m, n)
            for word in ((-k, k), (k, -k)):
                res = apply_word(word, s, convention) - s
                out.append({"k": k, "word": word, "m": m, "residual": res, "zero": res.is_zero()})
    return out


def braid_relation_words(n: int, far_only: bool = False) -> List[Tuple[str, Tuple[int, ...], Tuple[int, ...]]]:
    rels = []
    if not far_only:
        for k in range(1, n - 1):
            rels.append((f"braid3[{k},{k + 1}]", (k, k + 1, k), (k + 1, k, k + 1)))
        if n >= 2:
            rels.append((f"braid4[{n - 1},{n}]", (n, n - 1, n, n - 1), (n - 1, n, n - 1, n)))
    for k in range(1, n + 1):
        for l in range(k + 2, n + 1):
            rels.append((f"far[{k},{l}]", (k, l), (l, k)))
    return rels


def verify_braid_relations(n: int, far_only: bool = False, convention: str = "plain") -> List[dict]:
    """Both sides of each braid relation applied to every band generator."""
    out = []
    for name, w1, w2 in braid_relation_words(n, far_only):
        for m in range(1, n + 1):
            s = band(m, n)
            lhs, rhs = apply_word(w1, s, convention), apply_word(w2, s, convention)
            res = lhs - rhs
            out.append({"relation": name, "m": m, "residual": res, "zero": res.is_zero(),
                        "sign_flip": not res.is_zero() and (lhs + rhs).is_zero()})
    return out


def iota_relations_audit(n: int, max_degree: int = 3) -> dict:
    """Defining relations of the B-generators transported to ``s``, plus a
    degree count of the ordered B-monomials against the PBW monomials."""
    from math import comb

    from .pbwengine import pbw_monomials

    rows = []
    for name, rel in iserre_list(n):
        res = normalize(rel)
        rows.append({"relation": name, "residual": res, "zero": res.is_zero()})
    counts = []
    for d in range(max_degree + 1):
        expected = comb(n * n + d - 1, d)
        counts.append({"degree": d, "pbw": len(pbw_monomials(n, d)), "expected": expected})
    return {"relations": rows, "counts": counts}
