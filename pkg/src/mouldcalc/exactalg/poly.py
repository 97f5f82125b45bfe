"""Monomial helpers, integer-polynomial GCD and division, and the public Poly type.

Integer polynomials are plain dicts {packed monomial: int}; see _kernels_py.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from . import kernels as K
from .kernels import FIELD_BITS, FIELD_MASK

# ---------------------------------------------------------------- monomials


def mono_exps(m: int) -> tuple:
    out = []
    while m:
        out.append(m & FIELD_MASK)
        m >>= FIELD_BITS
    return tuple(out)


def mono_from_exps(exps) -> int:
    m = 0
    for i, e in enumerate(exps):
        if e:
            if e > FIELD_MASK:
                raise OverflowError("exponent %d exceeds the supported maximum" % e)
            m |= e << (FIELD_BITS * i)
    return m


def mono_deg(m: int) -> int:
    d = 0
    while m:
        d += m & FIELD_MASK
        m >>= FIELD_BITS
    return d


def glex_key(m: int):
    """Sort key realising graded-lex order with x1 > x2 > ..."""
    e = mono_exps(m)
    return (sum(e), e)


def glex_sorted(monos, descending=True):
    return sorted(monos, key=glex_key, reverse=descending)


def poly_vars(p: dict) -> set:
    acc = 0
    for m in p:
        acc |= m
    out = set()
    i = 1
    while acc:
        if acc & FIELD_MASK:
            out.add(i)
        acc >>= FIELD_BITS
        i += 1
    return out


def max_var(p: dict) -> int:
    vs = poly_vars(p)
    return max(vs) if vs else 0


def total_degree(p: dict) -> int:
    return max((mono_deg(m) for m in p), default=0)


def sign_normalize(p: dict):
    """Return (sign, p') with p' having a positive coefficient at its largest packed key."""
    if p and p[max(p)] < 0:
        return -1, {m: -c for m, c in p.items()}
    return 1, p


def primitive(p: dict):
    """Return (content, p / content) with the sign chosen as in sign_normalize."""
    if not p:
        return 0, p
    g = K.content(p)
    p = K.pdiv_int(p, g)
    s, p = sign_normalize(p)
    return s * g, p


def ppow(p: dict, n: int) -> dict:
    out = {0: 1}
    base = p
    while n:
        if n & 1:
            out = K.pmul(out, base)
        n >>= 1
        if n:
            base = K.pmul(base, base)
    return out


# ------------------------------------------------ recursive representation


def coeffs_in(p: dict, k: int) -> dict:
    """Split p as sum_d c_d(x without x_k) * x_k^d; returns {d: c_d}."""
    shift = FIELD_BITS * (k - 1)
    unit = 1 << shift
    out: dict = {}
    for m, c in p.items():
        d = (m >> shift) & FIELD_MASK
        g = out.get(d)
        if g is None:
            out[d] = g = {}
        g[m - d * unit] = c
    return out


def from_coeffs(cs: dict, k: int) -> dict:
    unit = 1 << (FIELD_BITS * (k - 1))
    out = {}
    for d, c in cs.items():
        base = d * unit
        for m, v in c.items():
            out[m + base] = v
    return out


def exact_div(p: dict, q: dict):
    """Exact quotient p/q over Z, or None when q does not divide p."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    if not p:
        return {}
    if len(q) == 1:
        (mq, cq), = q.items()
        out = {}
        for m, c in p.items():
            r = mono_div(m, mq)
            if r is None:
                return None
            v, rem = divmod(c, cq)
            if rem:
                return None
            out[r] = v
        return out
    k = max_var(q)
    P = coeffs_in(p, k)
    Q = coeffs_in(q, k)
    dq = max(Q)
    if dq == 0:
        # q free of its own max variable cannot happen; kept for safety
        return None
    lcq = Q[dq]
    quot = {}
    while P:
        dp = max(P)
        if dp < dq:
            return None
        t = exact_div(P[dp], lcq)
        if t is None:
            return None
        quot[dp - dq] = t
        for d, c in Q.items():
            dd = d + dp - dq
            newc = K.padd_scaled(P.get(dd, {}), 1, K.pmul(t, c), -1)
            if newc:
                P[dd] = newc
            else:
                P.pop(dd, None)
    return from_coeffs(quot, k)


def mono_div(m: int, n: int):
    """m / n as packed monomials, or None if n does not divide m."""
    out = 0
    shift = 0
    while m or n:
        a = m & FIELD_MASK
        b = n & FIELD_MASK
        if b > a:
            return None
        out |= (a - b) << shift
        m >>= FIELD_BITS
        n >>= FIELD_BITS
        shift += FIELD_BITS
    return out


def content_in(p: dict, k: int) -> dict:
    g: dict = {}
    for c in coeffs_in(p, k).values():
        g = ipoly_gcd(g, c)
        if g == {0: 1}:
            return g
    return g


def ipoly_gcd(p: dict, q: dict) -> dict:
    """GCD over Z[x], normalised to be primitive-with-positive-content times sign
    convention of sign_normalize (the integer content is included)."""
    if not p:
        return _normalize_gcd(q)
    if not q:
        return _normalize_gcd(p)
    vp = poly_vars(p)
    vq = poly_vars(q)
    if not vp and not vq:
        return {0: gcd(p[0], q[0])}
    if not vp:
        return {0: gcd(p[0], K.content(q))}
    if not vq:
        return {0: gcd(q[0], K.content(p))}
    # G = gcd(p, q) has positive degree in x_j only if x_j occurs in both, and
    # then every specialization keeping both leading coefficients sees it.
    if all(_coprime_mod_p(p, q, j) for j in sorted(vp & vq)):
        return {0: gcd(K.content(p), K.content(q))}
    k = max(vp | vq)
    if k not in vp:
        return ipoly_gcd(p, content_in(q, k))
    if k not in vq:
        return ipoly_gcd(content_in(p, k), q)
    cp = content_in(p, k)
    cq = content_in(q, k)
    pp = exact_div(p, cp)
    qq = exact_div(q, cq)
    c = ipoly_gcd(cp, cq)
    if _coprime_mod_p(pp, qq, k):
        return _normalize_gcd(c)
    g = _prs_gcd(pp, qq, k)
    return _normalize_gcd(K.pmul(c, g))


_PRIME = K.MOD_P


def _eval_mod(p: dict, k: int, values: dict) -> dict:
    """Univariate image {deg_k: value mod prime} of p with the other variables fixed."""
    n = max(values, default=0)
    return K.univariate_image(p, k, [values.get(i, 0) for i in range(1, max(n, k) + 1)])


def _uni_gcd_deg(a: dict, b: dict) -> int:
    a = [a.get(i, 0) for i in range(max(a) + 1)]
    b = [b.get(i, 0) for i in range(max(b) + 1)]
    while b:
        inv = pow(b[-1], _PRIME - 2, _PRIME)
        while len(a) >= len(b) and a:
            f = a[-1] * inv % _PRIME
            off = len(a) - len(b)
            for i, bc in enumerate(b):
                a[off + i] = (a[off + i] - f * bc) % _PRIME
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a
    return len(a) - 1


def _coprime_mod_p(p: dict, q: dict, k: int) -> bool:
    """True only if p, q certainly have no common factor of positive x_k-degree."""
    import random

    rng = random.Random(len(p) * 1000003 + len(q))
    others = (poly_vars(p) | poly_vars(q)) - {k}
    dp = max(coeffs_in(p, k))
    dq = max(coeffs_in(q, k))
    for _ in range(2):
        values = {i: rng.randrange(1, _PRIME) for i in others}
        a = _eval_mod(p, k, values)
        b = _eval_mod(q, k, values)
        if not a or not b or max(a) != dp or max(b) != dq:
            continue
        if _uni_gcd_deg(a, b) == 0:
            return True
        return False
    return False


def _normalize_gcd(p: dict) -> dict:
    if not p:
        return {}
    s, p = sign_normalize(p)
    return p


def _deg(P: dict) -> int:
    return max(P) if P else -1


def _prem(A: dict, B: dict) -> dict:
    dA = _deg(A)
    dB = _deg(B)
    lcB = B[dB]
    R = dict(A)
    e = dA - dB + 1
    while R and _deg(R) >= dB:
        dR = _deg(R)
        lcR = R[dR]
        s = dR - dB
        newR = {}
        for d, c in R.items():
            if d == dR:
                continue
            newR[d] = K.pmul(lcB, c)
        for d, c in B.items():
            if d == dB:
                continue
            dd = d + s
            v = K.padd_scaled(newR.get(dd, {}), 1, K.pmul(lcR, c), -1)
            newR[dd] = v
        R = {d: c for d, c in newR.items() if c}
        e -= 1
    if e > 0 and R:
        f = ppow(lcB, e)
        R = {d: K.pmul(f, c) for d, c in R.items()}
    return R


def _prs_gcd(a: dict, b: dict, k: int) -> dict:
    A = coeffs_in(a, k)
    B = coeffs_in(b, k)
    if _deg(A) < _deg(B):
        A, B = B, A
    g = {0: 1}
    h = {0: 1}
    while True:
        delta = _deg(A) - _deg(B)
        R = _prem(A, B)
        if not R:
            break
        if _deg(R) == 0:
            return {0: 1}
        A = B
        divisor = K.pmul(g, ppow(h, delta))
        B = {}
        for d, c in R.items():
            qd = exact_div(c, divisor)
            if qd is None:  # pragma: no cover - would mean a PRS bug
                raise ArithmeticError("subresultant division was not exact")
            B[d] = qd
        g = A[_deg(A)]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            num = ppow(g, delta)
            den = ppow(h, delta - 1)
            h = exact_div(num, den)
            if h is None:  # pragma: no cover
                raise ArithmeticError("subresultant division was not exact")
    res = from_coeffs(B, k)
    cont = content_in(res, k)
    return exact_div(res, cont)


# ------------------------------------------------------------- public Poly


class Poly:
    """Immutable sparse polynomial with rational coefficients."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        t = {}
        if terms:
            for m, c in terms.items():
                if isinstance(m, tuple):
                    m = mono_from_exps(m)
                c = Fraction(c)
                if c:
                    t[m] = t.get(m, 0) + c
        self.terms = {m: c for m, c in t.items() if c}
        self._hash = None

    @classmethod
    def from_int_poly(cls, p: dict, scale=1) -> "Poly":
        obj = cls.__new__(cls)
        scale = Fraction(scale)
        obj.terms = {m: c * scale for m, c in p.items()} if scale else {}
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> "Poly":
        return cls({0: c})

    @classmethod
    def var(cls, index: int) -> "Poly":
        return cls({1 << (FIELD_BITS * (index - 1)): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {0: 1}

    def to_int_poly(self):
        """Return (scale, p) with integer primitive p and self = scale * p."""
        if not self.terms:
            return Fraction(0), {}
        den = 1
        for c in self.terms.values():
            den = den * c.denominator // gcd(den, c.denominator)
        p = {m: int(c * den) for m, c in self.terms.items()}
        g, p = primitive(p)
        return Fraction(g, den), p

    def sorted_terms(self):
        return [(m, self.terms[m]) for m in glex_sorted(self.terms)]

    def leading_coefficient(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        return self.terms[max(self.terms, key=glex_key)]

    def exponent_map(self) -> dict:
        """Terms keyed by exponent tuples (e1, e2, ...) instead of packed ints."""
        return {mono_exps(m): c for m, c in self.terms.items()}

    def variables(self) -> set:
        return poly_vars(self.terms)

    def __add__(self, other: "Poly") -> "Poly":
        t = dict(self.terms)
        for m, c in other.terms.items():
            t[m] = t.get(m, 0) + c
        return Poly(t)

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        t: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 + m2
                t[m] = t.get(m, 0) + c1 * c2
        return Poly(t)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def render(self, family: str = "x") -> str:
        from .textio import render_poly

        return render_poly(self, family)

    def __repr__(self):
        return "Poly(%s)" % self.render()
