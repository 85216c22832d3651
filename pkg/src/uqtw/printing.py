"""Text rendering shared by the CLI, golden files and ``__str__``."""

from __future__ import annotations

from .qscalar import RatFunc, format_ratfunc


def format_word(w, letter: str = "s") -> str:
    return "*".join(f"{letter}[{i},{j}]" for i, j in w)


def format_coeff(c: RatFunc) -> str:
    s = format_ratfunc(c)
    if " " in s or s.startswith("("):
        return f"({s})"
    return s


def format_term(c: RatFunc, w, letter: str = "s") -> str:
    if not w:
        return format_coeff(c)
    body = format_word(w, letter)
    if c.is_one():
        return body
    if (-c).is_one():
        return f"-{body}"
    return f"{format_coeff(c)} * {body}"


def join_terms(parts) -> str:
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        if p.startswith("-"):
            out += f" - {p[1:]}"
        else:
            out += f" + {p}"
    return out


def format_element(x, letter: str = "s") -> str:
    return join_terms([format_term(c, w, letter) for w, c in x.sorted_terms()])


def golden_lines(x, letter: str = "s") -> list[str]:
    """One monomial per line: ``coeff * s[i1,j1]*s[i2,j2]*...``."""
    lines = []
    for w, c in x.sorted_terms():
        coeff = format_coeff(c)
        lines.append(f"{coeff} * {format_word(w, letter)}" if w else coeff)
    return lines


def format_gauss_coeff(c) -> str:
    from .qscalar import format_gauss

    s = format_gauss(c)
    if " " in s:
        return f"({s})"
    return s


def format_poisson(f) -> str:
    parts = []
    for m, c in f.sorted_terms():
        if not m:
            parts.append(format_gauss_coeff(c))
            continue
        body = format_word(m, "a")
        if c == 1:
            parts.append(body)
        elif c == -1:
            parts.append(f"-{body}")
        else:
            parts.append(f"{format_gauss_coeff(c)} * {body}")
    return join_terms(parts)
