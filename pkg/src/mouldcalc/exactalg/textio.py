"""Canonical text form of polynomials and rational functions, and a parser for it.

Terms are written ``c*v1^2*v3`` in descending graded-lex order; a rational
function is ``num/den`` with parentheses where a factor has more than one
term. The parser accepts ordinary arithmetic over the same tokens, so the
rendered form parses back to the same value and re-renders identically.
"""

from __future__ import annotations

import re
from functools import lru_cache
from math import gcd
from fractions import Fraction

from ..errors import DivisionByZero, ParseError
from .linform import FAMILIES
from .kernels import FIELD_BITS
from .poly import Poly, glex_key, mono_exps
from .ratfun import ONE, ZERO, RatFun


def _render_coef(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return "%d/%d" % (c.numerator, c.denominator)


@lru_cache(maxsize=1 << 16)
def _render_mono(m: int, family: str) -> str:
    parts = []
    for i, e in enumerate(mono_exps(m), start=1):
        if e == 1:
            parts.append("%s%d" % (family, i))
        elif e:
            parts.append("%s%d^%d" % (family, i, e))
    return "*".join(parts)


@lru_cache(maxsize=1 << 16)
def _glex(m: int):
    return glex_key(m)


def _render_terms(terms: dict, family: str, num: int = 1, den: int = 1) -> str:
    """Render the sum of (num/den) * c * m over terms {m: int or Fraction}."""
    if not terms:
        return "0"
    out = []
    for m in sorted(terms, key=_glex, reverse=True):
        c = terms[m]
        if isinstance(c, Fraction):
            c = c * Fraction(num, den)
            n, d = c.numerator, c.denominator
        else:
            n, d = c * num, den
            if d != 1:
                g = gcd(n, d)
                n, d = n // g, d // g
        neg = n < 0
        if neg:
            n = -n
        coef = str(n) if d == 1 else "%d/%d" % (n, d)
        if m == 0:
            body = coef
        elif n == 1 and d == 1:
            body = _render_mono(m, family)
        else:
            body = coef + "*" + _render_mono(m, family)
        if out:
            out.append(("-" if neg else "+") + body)
        else:
            out.append(("-" if neg else "") + body)
    return "".join(out)


def render_poly(p: Poly, family: str = "x") -> str:
    return _render_terms(p.terms, family)


def render_ratfun(f: RatFun, family: str = "x") -> str:
    ints = f.canonical_ints()
    if ints is None:
        return "0"
    c, n, d = ints
    ns = _render_terms(n, family, c.numerator, c.denominator)
    if d == {0: 1}:
        return ns
    ds = _render_terms(d, family)
    if len(n) > 1 or "/" in ns:
        ns = "(" + ns + ")"
    if len(d) > 1 or "*" in ds:
        ds = "(" + ds + ")"
    return ns + "/" + ds


# ------------------------------------------------------------------ parser

_TOKEN = re.compile(r"\s*(?:(\d+)|([xuv])(\d+)|(\*\*|[-+*/^()]))")


class _Parser:
    def __init__(self, text: str, source=None):
        self.text = text
        self.source = source
        self.toks = []
        pos = 0
        text_len = len(text)
        while pos < text_len:
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m:
                raise ParseError("unexpected character %r" % text[pos], source, column=pos + 1)
            start = m.start(0) + (len(m.group(0)) - len(m.group(0).lstrip()))
            if m.group(1) is not None:
                self.toks.append(("num", int(m.group(1)), start))
            elif m.group(2) is not None:
                idx = int(m.group(3))
                if idx < 1:
                    raise ParseError("variable index must be >= 1", source, column=start + 1)
                self.toks.append(("var", (m.group(2), idx), start))
            else:
                op = m.group(4)
                self.toks.append(("op", "^" if op == "**" else op, start))
            pos = m.end(0)
        self.i = 0
        self.families: set = set()

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def error(self, msg, tok=None):
        col = tok[2] + 1 if tok else len(self.text) + 1
        raise ParseError(msg, self.source, column=col)

    def expect(self, op):
        t = self.take()
        if t is None or t[0] != "op" or t[1] != op:
            self.error("expected %r" % op, t)

    def parse(self) -> RatFun:
        if not self.toks:
            self.error("empty expression")
        v = self.expr()
        if self.peek() is not None:
            self.error("trailing input", self.peek())
        return v

    def expr(self) -> RatFun:
        v = self.term()
        while True:
            t = self.peek()
            if t and t[0] == "op" and t[1] in "+-":
                self.take()
                rhs = self.term()
                v = v + rhs if t[1] == "+" else v - rhs
            else:
                return v

    def term(self) -> RatFun:
        v = self.unary()
        while True:
            t = self.peek()
            if t and t[0] == "op" and t[1] in "*/":
                self.take()
                rhs = self.unary()
                if t[1] == "*":
                    v = v * rhs
                else:
                    if rhs.is_zero():
                        self.error("division by zero", t)
                    v = v / rhs
            else:
                return v

    def unary(self) -> RatFun:
        t = self.peek()
        if t and t[0] == "op" and t[1] in "+-":
            self.take()
            v = self.unary()
            return -v if t[1] == "-" else v
        return self.power()

    def power(self) -> RatFun:
        base = self.atom()
        t = self.peek()
        if t and t[0] == "op" and t[1] == "^":
            self.take()
            neg = False
            s = self.peek()
            if s and s[0] == "op" and s[1] == "-":
                self.take()
                neg = True
            e = self.take()
            if e is None or e[0] != "num":
                self.error("expected integer exponent", e)
            k = -e[1] if neg else e[1]
            if k < 0 and base.is_zero():
                self.error("division by zero", e)
            return base ** k
        return base

    def atom(self) -> RatFun:
        t = self.take()
        if t is None:
            self.error("unexpected end of input")
        if t[0] == "num":
            return RatFun(t[1])
        if t[0] == "var":
            fam, idx = t[1]
            self.families.add(fam)
            return RatFun.var(idx)
        if t[1] == "(":
            v = self.expr()
            self.expect(")")
            return v
        self.error("unexpected %r" % t[1], t)
        raise AssertionError  # unreachable


_POLY_TERM = re.compile(r"([+-]?)(?:(\d+)(?:/(\d+))?(?:\*|(?=[xuv])|$))?((?:[xuv]\d+(?:\^\d+)?\*?)*)")
_POLY_VAR = re.compile(r"([xuv])(\d+)(?:\^(\d+))?")


def _fast_poly(text: str):
    """Expanded polynomial text (the rendered shape) to (scale, {monomial: int}), or None."""
    t = text.replace(" ", "")
    if not t:
        return None
    terms = []
    lcm = 1
    pos = 0
    fams = set()
    while pos < len(t):
        m = _POLY_TERM.match(t, pos)
        if not m or m.end() == pos or (pos and not m.group(1)):
            return None
        num, den, mono = m.group(2), m.group(3), m.group(4)
        if num is None and not mono:
            return None
        if mono.endswith("*"):
            return None
        c = int(num) if num else 1
        if m.group(1) == "-":
            c = -c
        d = int(den) if den else 1
        if d == 0:
            return None
        if d != 1:
            lcm = lcm * d // gcd(lcm, d)
        key = 0
        for v in _POLY_VAR.finditer(mono):
            fams.add(v.group(1))
            idx = int(v.group(2))
            if idx < 1:
                return None
            key += int(v.group(3) or 1) << (FIELD_BITS * (idx - 1))
        terms.append((key, c, d))
        pos = m.end()
    if len(fams) > 1:
        return None
    out: dict = {}
    for key, c, d in terms:
        out[key] = out.get(key, 0) + c * (lcm // d)
    return Fraction(1, lcm), {k: v for k, v in out.items() if v}


def _split_fraction(text: str):
    """Split 'N', '(N)', 'N/(D)', '(N)/x1' ... at the top-level fraction bar, else None.

    A bar is a top-level '/' followed by '(' or a variable; other slashes
    belong to rational coefficients.
    """
    depth = 0
    bars = []
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            nxt = text[i + 1:].lstrip()[:1]
            if nxt == "(" or nxt in FAMILIES:
                bars.append(i)
    if len(bars) > 1:
        return None
    parts = [text] if not bars else [text[: bars[0]], text[bars[0] + 1:]]
    out = []
    for part in parts:
        q = part.strip()
        if q.startswith("(") and q.endswith(")"):
            q = q[1:-1]
        if "(" in q or ")" in q:
            return None
        out.append(q)
    return out


def _try_fast(text: str):
    parts = _split_fraction(text)
    if parts is None:
        return None
    polys = [_fast_poly(q) for q in parts]
    if any(p is None for p in polys):
        return None
    sn, n = polys[0]
    if len(polys) == 1:
        return RatFun.from_int_poly(n, sn)
    sd, d = polys[1]
    if not d:
        return None  # let the general parser report the division by zero
    return RatFun.from_int_polys(n, d, sn / sd)


def parse_ratfun(text: str, source=None) -> RatFun:
    fast = _try_fast(text)
    if fast is not None:
        return fast
    try:
        return _Parser(text, source).parse()
    except DivisionByZero as exc:
        raise ParseError(str(exc), source) from exc


def detect_family(text: str, default: str = "x") -> str:
    for ch in text:
        if ch in FAMILIES:
            return ch
    return default


__all__ = ["render_poly", "render_ratfun", "parse_ratfun", "detect_family", "ZERO", "ONE"]
