"""Command-line front end.

    uqtw normalize --n 2 "s[4,3]"
    uqtw commutator --n 2 "s[3,1]" "s[2,1]"
    uqtw poisson --n 2 "a[3,1]" "a[2,1]"
    uqtw braid --n 3 --word 1,-2 "s[3,2]"
    uqtw basis --n 2 --degree 2
    uqtw verify --n 2 --suite ybe

Exit codes: 0 success, 1 residual found, 2 input error, 3 fuel exhausted.
"""

from __future__ import annotations

import argparse
import itertools
import json
import math
import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from .freealg import AlgebraElement, all_generators, is_omega1
from .poisson import PoissonPoly
from .printing import format_element, format_poisson, format_word
from .qscalar import (ONE, Q, GaussRat, RatFunc, I_UNIT, format_denominator,
                      format_gauss, format_numerator)

__all__ = [
    "CliSyntaxError",
    "IndexOutOfRange",
    "parse",
    "evaluate",
    "parse_element",
    "run",
    "main",
    "SUITES",
]

EXIT_OK, EXIT_RESIDUAL, EXIT_INPUT, EXIT_FUEL = 0, 1, 2, 3


class CliSyntaxError(SyntaxError):
    """Malformed input; ``pos`` is the 0-based character offset."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


class IndexOutOfRange(ValueError):
    pass


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

# AST nodes are tuples: ("num", Fraction) ("q",) ("i",) ("gen", letter, idx)
# ("add"|"sub"|"mul"|"div", a, b) ("neg", a) ("pow", a, k)
Ast = tuple


@dataclass
class _Tok:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> List[_Tok]:
    toks: List[_Tok] = []
    k, L = 0, len(text)
    while k < L:
        ch = text[k]
        if ch.isspace():
            k += 1
        elif ch.isdigit():
            m = k
            while m < L and text[m].isdigit():
                m += 1
            toks.append(_Tok("num", text[k:m], k))
            k = m
        elif ch in "+-*/^()[],":
            toks.append(_Tok(ch, ch, k))
            k += 1
        elif ch.isalpha():
            m = k
            while m < L and (text[m].isalnum() or text[m] == "_"):
                m += 1
            toks.append(_Tok("name", text[k:m], k))
            k = m
        else:
            raise CliSyntaxError(f"unexpected character {ch!r}", k)
    toks.append(_Tok("end", "", L))
    return toks


class _Parser:
    def __init__(self, text: str, n: int):
        self.toks = _tokenize(text)
        self.k = 0
        self.n = n

    def peek(self) -> _Tok:
        return self.toks[self.k]

    def take(self, kind: Optional[str] = None) -> _Tok:
        t = self.toks[self.k]
        if kind is not None and t.kind != kind:
            want = "number" if kind == "num" else repr(kind)
            got = "end of input" if t.kind == "end" else repr(t.text)
            raise CliSyntaxError(f"expected {want}, found {got}", t.pos)
        self.k += 1
        return t

    def expr(self) -> Ast:
        node = self.term()
        while self.peek().kind in "+-":
            op = self.take().kind
            node = ("add" if op == "+" else "sub", node, self.term())
        return node

    def term(self) -> Ast:
        node = self.factor()
        while self.peek().kind in ("*", "/"):
            op = self.take().kind
            node = ("mul" if op == "*" else "div", node, self.factor())
        return node

    def factor(self) -> Ast:
        t = self.peek()
        if t.kind in "+-":
            self.take()
            inner = self.factor()
            return ("neg", inner) if t.kind == "-" else inner
        node = self.primary()
        while self.peek().kind == "^":
            self.take()
            sign = 1
            if self.peek().kind in "+-":
                sign = -1 if self.take().kind == "-" else 1
            node = ("pow", node, sign * int(self.take("num").text))
        return node

    def primary(self) -> Ast:
        t = self.take()
        if t.kind == "num":
            return ("num", Fraction(int(t.text)))
        if t.kind == "(":
            node = self.expr()
            self.take(")")
            return node
        if t.kind == "name":
            if t.text == "q":
                return ("q",)
            if t.text == "i":
                return ("i",)
            if t.text in ("s", "a", "B"):
                return self.generator(t)
            raise CliSyntaxError(f"unknown name {t.text!r}", t.pos)
        got = "end of input" if t.kind == "end" else repr(t.text)
        raise CliSyntaxError(f"unexpected {got}", t.pos)

    def generator(self, head: _Tok) -> Ast:
        self.take("[")
        idx = [int(self.take("num").text)]
        if head.text != "B":
            self.take(",")
            idx.append(int(self.take("num").text))
        self.take("]")
        n, N = self.n, 2 * self.n
        if head.text == "B":
            if not 1 <= idx[0] <= n:
                raise IndexOutOfRange(f"B[{idx[0]}] needs 1 <= m <= {n}")
        else:
            i, j = idx
            if not (1 <= j < i <= N):
                raise IndexOutOfRange(f"{head.text}[{i},{j}] needs 1 <= j < i <= {N}")
        return ("gen", head.text, tuple(idx))


def parse(text: str, n: int) -> Ast:
    """Parse ``text`` into an AST, checking generator indices for rank ``n``."""
    if n < 1:
        raise IndexOutOfRange("rank must be at least 1")
    p = _Parser(text, n)
    node = p.expr()
    t = p.peek()
    if t.kind != "end":
        raise CliSyntaxError(f"unexpected {t.text!r}", t.pos)
    return node


def _letters(node: Ast) -> set:
    if node[0] == "gen":
        return {node[1]}
    out = set()
    for x in node[1:]:
        if isinstance(x, tuple):
            out |= _letters(x)
    return out


def _uses_q(node: Ast) -> bool:
    if node[0] == "q":
        return True
    return any(isinstance(x, tuple) and _uses_q(x) for x in node[1:])


def evaluate(node: Ast, n: int) -> Union[AlgebraElement, PoissonPoly]:
    """``s``/``B`` expressions give algebra elements, ``a`` expressions give
    Poisson polynomials; mixing the two is an input error."""
    letters = _letters(node)
    if "a" in letters and letters - {"a"}:
        raise ValueError("a[i,j] cannot be mixed with s[i,j] or B[i]")
    if "a" in letters:
        if _uses_q(node):
            raise ValueError("q has no meaning in a Poisson expression")
        return _eval(node, n, poisson=True)
    return _eval(node, n, poisson=False)


def _is_scalar(x) -> bool:
    return isinstance(x, (RatFunc, GaussRat))


def _eval(node: Ast, n: int, poisson: bool):
    kind = node[0]
    if kind == "num":
        return GaussRat(node[1]) if poisson else RatFunc.coerce(GaussRat(node[1]))
    if kind == "i":
        return I_UNIT if poisson else RatFunc.coerce(I_UNIT)
    if kind == "q":
        return Q
    if kind == "gen":
        from .pbwengine import iota_generator
        from .poisson import var

        letter, idx = node[1], node[2]
        if letter == "a":
            return var(n, *idx)
        if letter == "s":
            return AlgebraElement.generator(n, *idx)
        return iota_generator(idx[0], n)
    if kind == "neg":
        return -_eval(node[1], n, poisson)
    if kind == "pow":
        base, k = _eval(node[1], n, poisson), node[2]
        if k < 0 and not _is_scalar(base):
            raise ValueError("negative powers are only defined for scalars")
        if _is_scalar(base) and k < 0 and base == 0:
            raise ZeroDivisionError("0 raised to a negative power")
        if isinstance(base, GaussRat):
            out = GaussRat(1)
            for _ in range(abs(k)):
                out = out * base
            return out if k >= 0 else GaussRat(1) / out
        return base ** k
    a, b = _eval(node[1], n, poisson), _eval(node[2], n, poisson)
    if kind == "div":
        if not _is_scalar(b):
            raise ValueError("division is only defined by scalars")
        if b == 0:
            raise ZeroDivisionError("division by zero")
        if _is_scalar(a):
            return a / b
        return a.scale(GaussRat(1) / b if poisson else ONE / b)
    if kind == "mul":
        if _is_scalar(a) and _is_scalar(b):
            return a * b
        if _is_scalar(a):
            return b.scale(a)
        if _is_scalar(b):
            return a.scale(b)
        return a * b
    if _is_scalar(a) and _is_scalar(b):
        return a + b if kind == "add" else a - b
    a, b = _lift(a, n, poisson), _lift(b, n, poisson)
    return a + b if kind == "add" else a - b


def _lift(x, n: int, poisson: bool):
    if not _is_scalar(x):
        return x
    return PoissonPoly.const(n, x) if poisson else AlgebraElement.scalar(n, x)


def parse_element(text: str, n: int, poisson: Optional[bool] = None) -> Union[AlgebraElement, PoissonPoly]:
    """Parse and evaluate; scalar results are promoted to elements.

    A constant has no letters to tell the two algebras apart; ``poisson``
    settles it (the default is the quantum algebra).
    """
    node = parse(text, n)
    letters = _letters(node)
    if poisson is None:
        poisson = "a" in letters
    elif poisson != ("a" in letters) and letters:
        raise ValueError("expected a[i,j]" if poisson else "expected s[i,j] or B[i]")
    x = evaluate(node, n)
    if _is_scalar(x) and poisson and isinstance(x, RatFunc):
        if _uses_q(node):
            raise ValueError("q has no meaning in a Poisson expression")
        x = _eval(node, n, poisson=True)
    return _lift(x, n, poisson)


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------


def _gauss_fraction(c: GaussRat) -> Tuple[str, str]:
    d = math.lcm(Fraction(c.re).denominator, Fraction(c.im).denominator)
    return format_gauss(c * d), str(d)


def _terms_json(x) -> List[dict]:
    out = []
    for w, c in x.sorted_terms():
        if isinstance(c, RatFunc):
            coeff = {"num": format_numerator(c), "den": format_denominator(c)}
        else:
            num, den = _gauss_fraction(c)
            coeff = {"num": num, "den": den}
        out.append({"coeff": coeff, "word": [list(g) for g in w]})
    return out


def _render(x) -> str:
    return format_poisson(x) if isinstance(x, PoissonPoly) else format_element(x)


@dataclass
class Report:
    status: str
    rank: int
    result: List[dict]
    residuals: List[dict]
    lines: List[str]

    def text(self) -> str:
        return "\n".join(self.lines)

    def json(self) -> str:
        return json.dumps({"status": self.status, "rank": self.rank,
                           "result": self.result, "residuals": self.residuals})


def _element_report(x, n: int) -> Report:
    return Report("ok", n, _terms_json(x), [], [_render(x)])


# ---------------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------------


@dataclass
class SuiteResult:
    name: str
    checked: int
    residuals: List[dict]
    note: str = ""


def _res(name: str, residual) -> dict:
    return {"name": name, "residual": residual if isinstance(residual, str) else _render(residual)}


def _suite_ybe(n, opts):
    from .tensorlab import check_YBE

    ok = check_YBE(n)
    return SuiteResult("ybe", 1, [] if ok else [_res("YBE", "R12 R13 R23 != R23 R13 R12")])


def _suite_reflection(n, opts):
    from .tensorlab import check_const_reflection, matrix_C, matrix_J

    rng = random.Random(0)
    cases = [("J", matrix_J(n))]
    for t in range(5):
        top = [Fraction(rng.randint(1, 9), rng.randint(1, 9)) * rng.choice((1, -1)) for _ in range(n)]
        prod = Fraction(rng.randint(1, 9)) * rng.choice((1, -1))
        vals = top + [prod / v for v in reversed(top)]
        cases.append((f"C{t}", matrix_C([RatFunc.coerce(GaussRat(v)) for v in vals])))
    bad = [_res(name, "reflection equation fails") for name, K in cases
           if not check_const_reflection(K, n)]
    return SuiteResult("reflection", len(cases), bad)


def _suite_relations(n, opts):
    from .pbwengine import normalize
    from .tensorlab import reflection_relations

    rels = reflection_relations(n)
    bad = []
    for key, r in rels.items():
        res = normalize(r)
        if not res.is_zero():
            bad.append(_res(f"reflection{list(key)}", res))
    return SuiteResult("relations", len(rels), bad)


def _suite_central(n, opts):
    from .pbwengine import central_relation, normalize
    from .tensorlab import central_relations

    rels = central_relations(n)
    bad = []
    for key, r in rels.items():
        res = normalize(r)
        if not res.is_zero():
            bad.append(_res(f"central{list(key)}", res))
    count = len(rels)
    N = 2 * n
    for i in range(1, N + 1):
        for j in range(1, i):
            res = normalize(central_relation(i, j, n))
            count += 1
            if not res.is_zero():
                bad.append(_res(f"specific[{i},{j}]", res))
    return SuiteResult("central", count, bad)


def _suite_confluence(n, opts):
    from .pbwengine import confluence_audit

    rep = confluence_audit(n, 3, sample=500 if n >= 3 else None)
    bad = [_res(f"word {format_word(w)}", "leftmost and rightmost rewriting differ")
           for w in rep["discrepancies"]]
    bad += [_res(f"word {format_word(w)}", "fuel exhausted") for w in rep["fuel_exhausted"]]
    return SuiteResult("confluence", rep["checked"], bad)


def _suite_serre(n, opts):
    from .pbwengine import normalize, serre_list

    rows = serre_list(n)
    if opts.corrected:
        rows = [(name, rel) for name, rel in rows if name not in ("line3", "line4")]
    bad = []
    for name, rel in rows:
        res = normalize(rel)
        if not res.is_zero():
            bad.append(_res(name, res))
    note = "repaired lines only" if opts.corrected else \
        "line3/line4 are the printed forms; line3+/line4* are the repaired ones"
    return SuiteResult("serre", len(rows), bad, note)


def _suite_iserre(n, opts):
    from .braidact import iota_relations_audit

    rep = iota_relations_audit(n)
    bad = [_res(r["relation"], r["residual"]) for r in rep["relations"] if not r["zero"]]
    bad += [_res(f"count[d={c['degree']}]", f"{c['pbw']} != {c['expected']}")
            for c in rep["counts"] if c["pbw"] != c["expected"]]
    return SuiteResult("iserre", len(rep["relations"]) + len(rep["counts"]), bad)


def _suite_braid(n, opts):
    from .braidact import (table_consistency, verify_automorphism,
                           verify_braid_relations, verify_inverse)

    conv = "signed" if opts.corrected else "plain"
    variant = "corrected" if opts.corrected else "printed"
    bad, count = [], 0
    for k in range(1, n + 1):
        for row in verify_automorphism(k, n, 1, conv):
            count += 1
            if not row["zero"]:
                bad.append(_res(f"beta{k}({row['relation']})", row["residual"]))
        for row in table_consistency(k, n, conv, variant):
            count += 1
            if not row["zero"]:
                g = row["generator"]
                bad.append(_res(f"table beta{k}(s[{g[0]},{g[1]}]) [{row['source']}]", row["residual"]))
    for row in verify_inverse(n, conv):
        count += 1
        if not row["zero"]:
            bad.append(_res(f"inverse word {list(row['word'])} on s{row['m']}", row["residual"]))
    for row in verify_braid_relations(n, False, conv):
        count += 1
        if not row["zero"]:
            tag = " (sign flip)" if row["sign_flip"] else ""
            bad.append(_res(f"{row['relation']} on s{row['m']}{tag}", row["residual"]))
    return SuiteResult("braid", count, bad, f"convention={conv}, table={variant}")


def _suite_jacobi(n, opts):
    from .poisson import jacobi

    gens = all_generators(n)
    triples = list(itertools.combinations(gens, 3))
    if len(triples) > 200:
        triples = random.Random(0).sample(triples, 200)
    bad = []
    for t in triples:
        res = jacobi(*t, n)
        if not res.is_zero():
            bad.append(_res("jacobi" + str([list(g) for g in t]), res))
    return SuiteResult("jacobi", len(triples), bad)


def _suite_matrix_form(n, opts):
    from .poisson import matrix_form_check

    bad = matrix_form_check(n, report=True)
    N = 2 * n
    return SuiteResult("matrix-form", N ** 4,
                       [_res(f"entry {list(r)} {list(c)}", "mismatch") for r, c in bad])


def _suite_poisson_braid(n, opts):
    from .poisson import braid_preserves_bracket_check

    variant = "corrected" if opts.corrected else "printed"
    bad, count = [], 0
    for k in range(1, n + 1):
        for row in braid_preserves_bracket_check(k, n, variant):
            count += 1
            if not row["zero"]:
                a, b = row["pair"]
                bad.append(_res(f"beta{k} on {{a[{a[0]},{a[1]}], a[{b[0]},{b[1]}]}}", row["residual"]))
    return SuiteResult("poisson-braid", count, bad, f"table={variant}")


def _suite_classical_limit(n, opts):
    from .classical import bracket_from_formula, classical_structure_from_quantum

    gens = [g for g in all_generators(n) if is_omega1(g, n)]
    bad = []
    for p in gens:
        for r in gens:
            res = classical_structure_from_quantum(p, r, n) - bracket_from_formula(p, r, n)
            if not res.is_zero():
                bad.append(_res(f"pair s[{p[0]},{p[1]}], s[{r[0]},{r[1]}]", res))
    return SuiteResult("classical-limit", len(gens) ** 2, bad)


def _suite_psi(n, opts):
    from .classical import psi_check, psi_failures

    variant = "corrected" if opts.corrected else "printed"
    fails = psi_failures(n, variant)
    bad = [_res(f"[psi e{a[0]}{a[1]}, psi e{b[0]}{b[1]}]", "not a homomorphism") for a, b in fails]
    if not fails and not psi_check(n, variant):
        bad.append(_res("rank", "psi is not injective"))
    return SuiteResult("psi", n ** 4, bad, f"map={variant}")


SUITES: Dict[str, Callable] = {
    "ybe": _suite_ybe,
    "reflection": _suite_reflection,
    "relations": _suite_relations,
    "central": _suite_central,
    "confluence": _suite_confluence,
    "serre": _suite_serre,
    "iserre": _suite_iserre,
    "braid": _suite_braid,
    "jacobi": _suite_jacobi,
    "matrix-form": _suite_matrix_form,
    "poisson-braid": _suite_poisson_braid,
    "classical-limit": _suite_classical_limit,
    "psi": _suite_psi,
}

_ENGINE_SUITES = {"relations", "central", "confluence", "serre", "iserre", "braid",
                  "classical-limit"}


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _parse_word(text: str, n: int) -> Tuple[int, ...]:
    try:
        word = tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise ValueError(f"bad braid word {text!r}") from None
    for k in word:
        if not 1 <= abs(k) <= n:
            raise ValueError(f"braid word entry {k} outside +-1..{n}")
    return word


def _quantum(text: str, n: int) -> AlgebraElement:
    return parse_element(text, n, poisson=False)


def _cmd_normalize(args) -> Report:
    from .pbwengine import normalize

    return _element_report(normalize(_quantum(args.expr, args.n), fuel=args.fuel), args.n)


def _cmd_commutator(args) -> Report:
    from .pbwengine import normalize

    x, y = _quantum(args.x, args.n), _quantum(args.y, args.n)
    return _element_report(normalize(x * y - y * x, fuel=args.fuel), args.n)


def _cmd_poisson(args) -> Report:
    from .poisson import bracket, reduce, reduced_bracket

    f, g = parse_element(args.x, args.n, True), parse_element(args.y, args.n, True)
    out = bracket(f, g) if args.raw else reduced_bracket(f, g)
    return _element_report(out, args.n)


def _cmd_braid(args) -> Report:
    from .braidact import apply_word
    from .pbwengine import normalize

    word = _parse_word(args.word, args.n)
    conv = "signed" if args.corrected else "plain"
    x = normalize(_quantum(args.expr, args.n), fuel=args.fuel)
    return _element_report(apply_word(word, x, conv), args.n)


def _cmd_basis(args) -> Report:
    from .pbwengine import pbw_monomials

    if args.degree < 0:
        raise ValueError("degree must be non-negative")
    words = pbw_monomials(args.n, args.degree)
    result = [{"coeff": {"num": "1", "den": "1"}, "word": [list(g) for g in w]} for w in words]
    lines = [format_word(w) if w else "1" for w in words]
    return Report("ok", args.n, result, [], lines)


def _cmd_verify(args) -> Report:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    lines, residuals = [], []
    for name in names:
        r = SUITES[name](args.n, args)
        status = "pass" if not r.residuals else "FAIL"
        note = f"; {r.note}" if r.note else ""
        lines.append(f"{name}: {status} ({r.checked} checks, {len(r.residuals)} residuals{note})")
        for row in r.residuals:
            lines.append(f"  {row['name']}: {row['residual']}")
            residuals.append({"suite": name, **row})
    return Report("residual" if residuals else "ok", args.n, [], residuals, lines)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="uqtw", description="Exact computations in the twisted quantum algebra")
    sub = ap.add_subparsers(dest="verb", required=True)

    def common(p, fuel=True):
        p.add_argument("--n", type=int, required=True, help="rank")
        p.add_argument("--format", choices=("text", "json"), default="text")
        if fuel:
            p.add_argument("--fuel", type=int, default=10 ** 6, help="rewriting budget")

    p = sub.add_parser("normalize", help="PBW normal form")
    common(p)
    p.add_argument("expr")
    p = sub.add_parser("commutator", help="normal form of xy - yx")
    common(p)
    p.add_argument("x")
    p.add_argument("y")
    p = sub.add_parser("poisson", help="Poisson bracket of two polynomials in a[i,j]")
    common(p, fuel=False)
    p.add_argument("--raw", action="store_true", help="skip reduction by the central relations")
    p.add_argument("x")
    p.add_argument("y")
    p = sub.add_parser("braid", help="apply a braid word (rightmost letter first)")
    common(p)
    p.add_argument("--word", required=True, help="comma separated, negative = inverse")
    p.add_argument("--corrected", action="store_true", help="use the sign-corrected generator images")
    p.add_argument("expr")
    p = sub.add_parser("basis", help="ordered PBW monomials of a given degree")
    common(p, fuel=False)
    p.add_argument("--degree", type=int, required=True)
    p = sub.add_parser("verify", help="run verification suites")
    common(p)
    p.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    p.add_argument("--corrected", action="store_true",
                   help="use corrected maps and tables instead of the printed ones")
    return ap


def run(argv: Sequence[str]) -> Tuple[int, str]:
    """Execute a command line; returns ``(exit code, output text)``."""
    from .pbwengine import MAX_RANK, FuelExhausted

    ap = build_parser()
    try:
        args = ap.parse_args(list(argv))
    except SystemExit as exc:
        return (EXIT_OK if exc.code == 0 else EXIT_INPUT), ""
    fmt = getattr(args, "format", "text")
    try:
        if args.n < 1:
            raise ValueError("rank must be at least 1")
        if getattr(args, "fuel", 1) < 1:
            raise ValueError("fuel must be positive")
        engine = args.verb in ("normalize", "commutator", "braid", "basis") or (
            args.verb == "verify" and (args.suite == "all" or args.suite in _ENGINE_SUITES))
        if engine and args.n > MAX_RANK:
            raise ValueError(f"rank {args.n} outside the supported range 1..{MAX_RANK}")
        handler = {
            "normalize": _cmd_normalize,
            "commutator": _cmd_commutator,
            "poisson": _cmd_poisson,
            "braid": _cmd_braid,
            "basis": _cmd_basis,
            "verify": _cmd_verify,
        }[args.verb]
        rep = handler(args)
    except FuelExhausted as exc:
        partial = exc.partial
        rep = Report("fuel_exhausted", args.n,
                     _terms_json(partial) if partial is not None else [], [],
                     ["fuel exhausted"] + ([f"partial: {_render(partial)}"] if partial is not None else []))
        return EXIT_FUEL, rep.json() if fmt == "json" else rep.text()
    except (CliSyntaxError, IndexOutOfRange, ValueError, ZeroDivisionError, KeyError) as exc:
        msg = f"error: {exc}"
        if fmt == "json":
            return EXIT_INPUT, json.dumps({"status": "input_error", "rank": args.n, "result": [],
                                           "residuals": [], "error": str(exc)})
        return EXIT_INPUT, msg
    code = EXIT_RESIDUAL if rep.residuals else EXIT_OK
    return code, rep.json() if fmt == "json" else rep.text()


def main(argv: Optional[Sequence[str]] = None) -> int:
    code, out = run(sys.argv[1:] if argv is None else argv)
    if out:
        stream = sys.stderr if code == EXIT_INPUT and not out.startswith("{") else sys.stdout
        print(out, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
