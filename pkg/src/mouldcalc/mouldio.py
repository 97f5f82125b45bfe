"""Text formats: mould files and word literals.

Mould file::

    mould convention=V group=z2 depth=2 empty=1
    1 (0) : 1/x1
    1 (1) : 1/x1
    2 (0,0) : 1/(x1*x2)
    ...

One line per (depth, sigma-vector) in depth then mixed-radix order.  Blank
lines and lines starting with '#' are ignored on input.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError, VariableEscape
from .exactalg import LinForm
from .exactalg.textio import parse_ratfun, render_ratfun
from .gamma import GammaSpec
from .mould import Mould
from .words import Letter, Word

# -------------------------------------------------------------- sigma vectors


def render_sigmas(sigmas) -> str:
    return "(" + ",".join(g.render() for g in sigmas) + ")"


def _split_top(text: str) -> list:
    """Split on commas that are not inside parentheses."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def parse_sigmas(text: str, spec: GammaSpec, source=None, line=None) -> tuple:
    t = text.strip()
    if not (t.startswith("(") and t.endswith(")")):
        raise ParseError("sigma vector must be parenthesized: %r" % text, source, line)
    inner = t[1:-1].strip()
    if not inner:
        return ()
    try:
        return tuple(spec.parse_elem(p) for p in _split_top(inner))
    except ParseError as exc:
        raise ParseError(str(exc), source, line) from exc


# ---------------------------------------------------------------- mould files


def render_mould(m: Mould) -> str:
    head = "mould convention=%s group=%s depth=%d empty=%s" % (m.convention, m.spec.render(), m.R, m.empty)
    lines = [head]
    for r, sig, f in m.items():
        lines.append("%d %s : %s" % (r, render_sigmas(sig), render_ratfun(f, "x")))
    return "\n".join(lines) + "\n"


_HEADER = re.compile(r"mould((?:\s+\w+=\S+)*)\s*$")


def parse_mould(text: str, source=None) -> Mould:
    lines = text.splitlines()
    body = [(i + 1, l) for i, l in enumerate(lines) if l.strip() and not l.lstrip().startswith("#")]
    if not body:
        raise ParseError("empty mould file", source, 1)
    lineno, head = body[0]
    m = _HEADER.match(head.strip())
    if not m:
        raise ParseError("expected header 'mould convention=.. group=.. depth=.. empty=..'", source, lineno)
    fields = dict(kv.split("=", 1) for kv in m.group(1).split())
    missing = [k for k in ("convention", "group", "depth", "empty") if k not in fields]
    if missing:
        raise ParseError("header is missing %s" % ", ".join(missing), source, lineno)
    conv = fields["convention"]
    if conv not in ("U", "V"):
        raise ParseError("convention must be U or V", source, lineno)
    spec = GammaSpec.parse(fields["group"])
    try:
        R = int(fields["depth"])
        empty = Fraction(fields["empty"])
    except ValueError as exc:
        raise ParseError(str(exc), source, lineno) from exc
    tables: list = [dict() for _ in range(R)]
    for lineno, l in body[1:]:
        if ":" not in l:
            raise ParseError("expected '<depth> <sigmas> : <ratfun>'", source, lineno)
        left, right = l.split(":", 1)
        left = left.strip()
        sp = left.find(" ")
        if sp < 0:
            raise ParseError("expected '<depth> <sigmas>' before ':'", source, lineno)
        try:
            r = int(left[:sp])
        except ValueError as exc:
            raise ParseError("bad depth %r" % left[:sp], source, lineno) from exc
        if not 1 <= r <= R:
            raise ParseError("depth %d out of range 1..%d" % (r, R), source, lineno)
        sig = parse_sigmas(left[sp:], spec, source, lineno)
        if len(sig) != r:
            raise ParseError("sigma vector has length %d, expected %d" % (len(sig), r), source, lineno)
        if sig in tables[r - 1]:
            raise ParseError("duplicate entry", source, lineno)
        col = len(l) - len(l.split(":", 1)[1].lstrip()) + 1
        try:
            f = parse_ratfun(right.strip(), source)
        except ParseError as exc:
            raise ParseError(str(exc), source, lineno, col) from exc
        if f.max_var() > r:
            raise VariableEscape("%s, line %d: component at depth %d uses x%d" % (source or "<input>", lineno, r, f.max_var()))
        tables[r - 1][sig] = f
    for r in range(1, R + 1):
        for sig in spec.vectors(r):
            if sig not in tables[r - 1]:
                raise ParseError("missing entry %d %s" % (r, render_sigmas(sig)), source)
    return Mould(conv, spec, R, empty, tables)


def read_mould(path: str) -> Mould:
    with open(path, encoding="utf-8") as fh:
        return parse_mould(fh.read(), source=path)


def write_mould(m: Mould, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(render_mould(m))


# --------------------------------------------------------------- word literals

_TERM = re.compile(r"\s*([+-]?)\s*(?:(\d+)\s*\*?\s*)?([xuv])(\d+)\s*")


def parse_linform(text: str, source=None) -> LinForm:
    t = text.strip()
    if not t:
        raise ParseError("empty linear form", source)
    if t == "0":
        return LinForm({})
    pos = 0
    terms: dict = {}
    first = True
    while pos < len(t):
        m = _TERM.match(t, pos)
        if not m or m.end() == pos or (not first and not m.group(1)):
            raise ParseError("bad linear form %r" % text, source, None, pos + 1)
        sign = -1 if m.group(1) == "-" else 1
        coef = int(m.group(2)) if m.group(2) else 1
        idx = int(m.group(4))
        if idx < 1:
            raise ParseError("variable index must be >= 1", source, None, pos + 1)
        terms[idx] = terms.get(idx, 0) + sign * coef
        pos = m.end()
        first = False
    return LinForm(terms)


def parse_word(text: str, spec: GammaSpec, source=None) -> Word:
    """Parse '[(0|v1),(1|v2)]'; product-group elements are written '((0,1)|v1)'."""
    t = text.strip()
    if not (t.startswith("[") and t.endswith("]")):
        raise ParseError("word literal must be bracketed: %r" % text, source)
    inner = t[1:-1].strip()
    if not inner:
        return ()
    out = []
    for part in _split_top(inner):
        p = part.strip()
        if not (p.startswith("(") and p.endswith(")")) or "|" not in p:
            raise ParseError("bad letter %r (expected '(sigma|form)')" % part, source)
        body = p[1:-1]
        s, form = body.rsplit("|", 1)
        out.append(Letter(spec.parse_elem(s), parse_linform(form, source)))
    return tuple(out)


def render_word_literal(w: Word, family: str = "v") -> str:
    return "[" + ",".join(l.render(family) for l in w) + "]"
