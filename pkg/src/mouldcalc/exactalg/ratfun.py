"""Exact rational functions over Q.

A RatFun is stored as c * n / (prod_i f_i^e_i * comp) where
  * c is a nonzero Fraction (or 0 for the zero function),
  * n is a primitive integer polynomial, positive at its largest packed key,
  * the f_i are interned primitive linear polynomials (irreducible, distinct),
  * comp is a primitive integer polynomial holding whatever part of the
    denominator is not known to split into linear factors (usually {0: 1}),
and n is coprime to the whole denominator. When comp is trivial the
representation is unique, so equality is a structural comparison; the
canonical expanded (num, den) pair is derived on demand for printing and for
comparisons that involve a nontrivial comp.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from math import gcd

from ..errors import DivisionByZero, PoleAtSubstitution
from . import kernels as K
from .kernels import FIELD_BITS, FIELD_MASK
from .linform import LinForm, VarId
from .poly import (
    Poly,
    exact_div,
    glex_key,
    ipoly_gcd,
    mono_exps,
    poly_vars,
    primitive,
    sign_normalize,
    total_degree,
)

ONE_POLY = {0: 1}


# ------------------------------------------------------------------ factors


class Factor:
    """An interned primitive linear polynomial."""

    __slots__ = ("poly", "key", "uid", "shift", "a", "rest", "varmask", "__weakref__")

    _table: dict = {}
    _next = 0

    def __new__(cls, poly: dict):
        key = tuple(sorted(poly.items()))
        obj = cls._table.get(key)
        if obj is not None:
            return obj
        obj = object.__new__(cls)
        obj.poly = poly
        obj.key = key
        obj.uid = Factor._next
        Factor._next += 1
        top = max(poly)
        obj.a = poly[top]
        obj.shift = top.bit_length() - 1  # single-variable monomial: exponent 1
        obj.rest = {m: c for m, c in poly.items() if m != top}
        vm = 0
        for m in poly:
            vm |= m
        obj.varmask = vm
        cls._table[key] = obj
        return obj

    def __reduce__(self):
        return (Factor, (self.poly,))

    def __hash__(self):
        return self.uid

    def __eq__(self, other):
        return self is other

    def __repr__(self):
        return "Factor(%s)" % Poly.from_int_poly(self.poly).render()


def _is_linear(p: dict) -> bool:
    for m in p:
        if m and (m & (m - 1)):
            return False  # more than one bit set: degree >= 2 or mixed
        if m and (m.bit_length() - 1) % FIELD_BITS:
            return False  # exponent >= 2 in one variable
    return len(p) > 1 or (0 not in p)


def _divides_possible(varmask_n: int, f: Factor) -> bool:
    return bool((varmask_n >> f.shift) & FIELD_MASK)


def _varmask(p: dict) -> int:
    vm = 0
    for m in p:
        vm |= m
    return vm


@lru_cache(maxsize=1 << 16)
def _expand_factors(items: tuple) -> dict:
    """Expanded product of (Factor, exp) pairs; items sorted by uid."""
    if not items:
        return ONE_POLY
    if len(items) == 1:
        f, e = items[0]
        if e == 1:
            return f.poly
        return K.pmul(_expand_factors(((f, e - 1),)), f.poly)
    head = _expand_factors(items[:-1])
    f, e = items[-1]
    return K.pmul(head, _expand_factors(((f, e),)))


def _sorted_items(d: dict) -> tuple:
    return tuple(sorted(((f, e) for f, e in d.items() if e), key=lambda fe: fe[0].uid))


# ----------------------------------------------------------------- RatFun


class RatFun:
    __slots__ = ("c", "n", "lin", "comp", "_canon", "_hash")

    def __init__(self, value=0):
        """RatFun from an int, Fraction, or decimal-free string; see parse() for text."""
        if isinstance(value, RatFun):
            self._set(value.c, value.n, value.lin, value.comp)
            return
        c = Fraction(value)
        if c:
            self._set(c, ONE_POLY, (), ONE_POLY)
        else:
            self._set(Fraction(0), {}, (), ONE_POLY)

    def _set(self, c, n, lin, comp):
        self.c = c
        self.n = n
        self.lin = lin
        self.comp = comp
        self._canon = None
        self._hash = None

    @classmethod
    def _raw(cls, c, n, lin, comp=ONE_POLY) -> "RatFun":
        obj = cls.__new__(cls)
        obj._set(c, n, lin, comp)
        return obj

    def __reduce__(self):
        lin = tuple((f.poly, e) for f, e in self.lin)
        return (_rebuild, (self.c, self.n, lin, self.comp))

    # -------------------------------------------------- constructors

    @classmethod
    def const(cls, value) -> "RatFun":
        return cls(value)

    @classmethod
    def var(cls, index: int) -> "RatFun":
        return cls._raw(Fraction(1), {1 << (FIELD_BITS * (index - 1)): 1}, ())

    @classmethod
    def from_linform(cls, form: LinForm) -> "RatFun":
        return cls.from_int_poly(form.to_poly())

    @classmethod
    def from_int_poly(cls, p: dict, scale=1) -> "RatFun":
        if not p or not scale:
            return ZERO
        g, p = primitive(p)
        return cls._raw(Fraction(scale) * g, p, ())

    @classmethod
    def from_polys(cls, num: Poly, den: Poly) -> "RatFun":
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        sn, n = num.to_int_poly()
        sd, d = den.to_int_poly()
        if not n:
            return ZERO
        return _from_expanded(sn / sd, n, d, ())

    @classmethod
    def from_int_polys(cls, num: dict, den: dict, scale=1) -> "RatFun":
        """scale * num / den for integer polynomials."""
        if not den:
            raise DivisionByZero("zero denominator")
        return _from_expanded(Fraction(scale), num, den, ())

    @classmethod
    def linear_product_inverse(cls, forms) -> "RatFun":
        """1 / prod(forms) for nonzero linear forms (fast path for named moulds)."""
        c = Fraction(1)
        dd: dict = {}
        for form in forms:
            p = form.to_poly()
            if not p:
                raise DivisionByZero("zero linear form")
            g, p = primitive(p)
            c /= g
            if p == ONE_POLY:
                continue
            f = Factor(p)
            dd[f] = dd.get(f, 0) + 1
        return cls._raw(c, ONE_POLY, _sorted_items(dd))

    # ------------------------------------------------------ predicates

    def is_zero(self) -> bool:
        return not self.c

    def is_const(self) -> bool:
        return not self.c or (self.n == ONE_POLY and not self.lin and self.comp == ONE_POLY)

    def const_value(self) -> Fraction:
        if not self.is_const():
            raise ValueError("not a constant")
        return self.c

    def variables(self) -> set:
        vm = _varmask(self.n) | _varmask(self.comp)
        for f, _ in self.lin:
            vm |= f.varmask
        return poly_vars({vm: 1}) if vm else set()

    def max_var(self) -> int:
        vs = self.variables()
        return max(vs) if vs else 0

    # ------------------------------------------------------ arithmetic

    def __neg__(self) -> "RatFun":
        if not self.c:
            return self
        return RatFun._raw(-self.c, self.n, self.lin, self.comp)

    def scale(self, k) -> "RatFun":
        if not k or not self.c:
            return ZERO
        return RatFun._raw(self.c * k, self.n, self.lin, self.comp)

    def __add__(self, other) -> "RatFun":
        if not isinstance(other, RatFun):
            other = RatFun(other)
        return _add(self, other)

    __radd__ = __add__

    def __sub__(self, other) -> "RatFun":
        if not isinstance(other, RatFun):
            other = RatFun(other)
        return _add(self, -other)

    def __rsub__(self, other) -> "RatFun":
        return RatFun(other) - self

    def __mul__(self, other) -> "RatFun":
        if not isinstance(other, RatFun):
            if isinstance(other, (int, Fraction)):
                return self.scale(other)
            other = RatFun(other)
        return _mul(self, other)

    __rmul__ = __mul__

    def inverse(self) -> "RatFun":
        if not self.c:
            raise DivisionByZero("inverse of zero")
        # new numerator: the denominator; new denominator: n
        den_lin = self.lin
        nd = self.n
        c = 1 / self.c
        if self.comp != ONE_POLY or not (nd == ONE_POLY or _is_linear(nd)):
            num = K.pmul(_expand_factors(den_lin), self.comp)
            return _from_expanded(c, num, nd, tuple(f for f, _ in den_lin))
        num = _expand_factors(den_lin)
        if nd == ONE_POLY:
            return RatFun._raw(c, num, ())
        s, num = sign_normalize(num)
        return RatFun._raw(c * s, num, ((Factor(nd), 1),))

    def __truediv__(self, other) -> "RatFun":
        if not isinstance(other, RatFun):
            other = Fraction(other)
            if not other:
                raise DivisionByZero("division by zero")
            return self.scale(1 / other)
        if not other.c:
            raise DivisionByZero("division by zero")
        return _mul(self, other.inverse())

    def __rtruediv__(self, other) -> "RatFun":
        return RatFun(other) / self

    def __pow__(self, k: int) -> "RatFun":
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    # -------------------------------------------------------- canonical

    def canonical_ints(self):
        """(c, n, d): self = c * n / d with integer polys, n primitive and d
        primitive with positive graded-lex leading coefficient; None for zero."""
        if not self.c:
            return None
        d = _expand_factors(self.lin)
        if self.comp != ONE_POLY:
            d = K.pmul(d, self.comp)
        lead = max(d, key=glex_key)
        c = self.c
        if d[lead] < 0:
            d = {m: -v for m, v in d.items()}
            c = -c
        return c, self.n, d

    def canonical(self):
        """(num, den) as Poly with den primitive and positive graded-lex leading coefficient."""
        if self._canon is None:
            ints = self.canonical_ints()
            if ints is None:
                self._canon = (Poly(), Poly.const(1))
            else:
                c, n, d = ints
                self._canon = (Poly.from_int_poly(n, c), Poly.from_int_poly(d))
        return self._canon

    @property
    def num(self) -> Poly:
        return self.canonical()[0]

    @property
    def den(self) -> Poly:
        return self.canonical()[1]

    def __eq__(self, other):
        if not isinstance(other, RatFun):
            if isinstance(other, (int, Fraction)):
                other = RatFun(other)
            else:
                return NotImplemented
        if self is other:
            return True
        if self.c == other.c and self.n == other.n and self.lin == other.lin and self.comp == other.comp:
            return True
        if self.comp == ONE_POLY and other.comp == ONE_POLY:
            return False
        return self.canonical() == other.canonical()

    def __hash__(self):
        if self._hash is None:
            n, d = self.canonical()
            self._hash = hash((n, d))
        return self._hash

    def render(self, family: str = "x") -> str:
        from .textio import render_ratfun

        return render_ratfun(self, family)

    def __str__(self):
        return self.render("x")

    def __repr__(self):
        return "RatFun(%s)" % self.render("x")

    # ----------------------------------------------------- evaluation

    def eval_at(self, point) -> Fraction:
        """Exact value at a rational point {index: Fraction}; ZeroDivisionError at a pole."""
        num = _eval_int_poly(self.n, point)
        den = _eval_int_poly(self.comp, point)
        for f, e in self.lin:
            den *= _eval_int_poly(f.poly, point) ** e
        if not den:
            raise ZeroDivisionError("pole")
        return self.c * num / den

    def subst(self, mapping) -> "RatFun":
        """Substitute x_i -> LinForm for each VarId (or index) in mapping."""
        idx = {}
        for k, v in mapping.items():
            idx[k.index if isinstance(k, VarId) else k] = v
        vs = self.variables()
        missing = [i for i in vs if i not in idx]
        if missing:
            raise KeyError("no image for variable index %d" % missing[0])
        n = max(vs) if vs else 0
        forms = tuple(idx.get(i, LinForm()) for i in range(1, n + 1))
        return subst_forms(self, forms)


def _rebuild(c, n, lin, comp):
    return RatFun._raw(c, n, _sorted_items({Factor(p): e for p, e in lin}), comp)


ZERO = RatFun._raw(Fraction(0), {}, ())
ONE = RatFun._raw(Fraction(1), ONE_POLY, ())


def _eval_int_poly(p: dict, point) -> Fraction:
    total = Fraction(0)
    for m, c in p.items():
        v = Fraction(c)
        i = 1
        while m:
            e = m & FIELD_MASK
            if e:
                v *= point[i] ** e
            m >>= FIELD_BITS
            i += 1
        total += v
    return total


# ------------------------------------------------------- core operations


def _finish(c: Fraction, n: dict, dd: dict, need_content: bool = True) -> RatFun:
    if not n or not c:
        return ZERO
    if need_content:
        g, n = primitive(n)
        c = c * g
    else:
        s, n = sign_normalize(n)
        if s < 0:
            c = -c
    return RatFun._raw(c, n, _sorted_items(dd))


def _cancel_linear(n: dict, dd: dict, candidates) -> dict:
    """Divide n by candidate linear factors as far as dd allows; mutates dd."""
    if n == ONE_POLY:
        return n
    vm = _varmask(n)
    for f in candidates:
        e = dd.get(f, 0)
        while e and _divides_possible(vm, f):
            if not K.may_divide(n, f.shift, f.a, f.rest):
                break
            q = K.div_linear(n, f.shift, f.a, f.rest)
            if q is None:
                break
            n = q
            e -= 1
            vm = _varmask(n)
        dd[f] = e
    return n


def _mul(a: RatFun, b: RatFun) -> RatFun:
    if not a.c or not b.c:
        return ZERO
    if a.comp != ONE_POLY or b.comp != ONE_POLY:
        return _mul_slow(a, b)
    na = a.n
    nb = b.n
    if not b.lin and not a.lin:
        n = K.pmul(na, nb) if nb != ONE_POLY and na != ONE_POLY else (na if nb == ONE_POLY else nb)
        return _finish(a.c * b.c, n, {}, need_content=False)
    da = dict(a.lin)
    db = dict(b.lin)
    if b.lin and na != ONE_POLY:
        na = _cancel_linear(na, db, [f for f, _ in b.lin])
    if a.lin and nb != ONE_POLY:
        nb = _cancel_linear(nb, da, [f for f, _ in a.lin])
    for f, e in db.items():
        if e:
            da[f] = da.get(f, 0) + e
    if na == ONE_POLY:
        n = nb
    elif nb == ONE_POLY:
        n = na
    else:
        n = K.pmul(na, nb)
    if n is a.n or n is b.n:
        return RatFun._raw(a.c * b.c, n, _sorted_items(da))
    return _finish(a.c * b.c, n, da, need_content=False)


def _add(a: RatFun, b: RatFun) -> RatFun:
    if not a.c:
        return b
    if not b.c:
        return a
    if a.comp != ONE_POLY or b.comp != ONE_POLY:
        return _add_slow(a, b)
    ca, cb = a.c, b.c
    qa, qb = ca.denominator, cb.denominator
    Q = qa * qb // gcd(qa, qb)
    sa = ca.numerator * (Q // qa)
    sb = cb.numerator * (Q // qb)
    if a.lin == b.lin:
        n = K.padd_scaled(a.n, sa, b.n, sb)
        if not n:
            return ZERO
        dd = dict(a.lin)
        cands = [f for f, _ in a.lin]
    else:
        da = dict(a.lin)
        db = dict(b.lin)
        dd = dict(da)
        cofa = []
        cofb = []
        cands = []
        for f, e in db.items():
            ea = da.get(f, 0)
            if ea < e:
                dd[f] = e
                if ea:
                    cofa.append((f, e - ea))
                else:
                    cofa.append((f, e))
            elif ea > e:
                cofb.append((f, ea - e))
            else:
                cands.append(f)
        for f, e in da.items():
            if f not in db:
                cofb.append((f, e))
        ta = a.n
        if cofa:
            ta = K.pmul(ta, _expand_factors(_sorted_items(dict(cofa))))
        tb = b.n
        if cofb:
            tb = K.pmul(tb, _expand_factors(_sorted_items(dict(cofb))))
        n = K.padd_scaled(ta, sa, tb, sb)
        if not n:
            return ZERO
    g, n = primitive(n)
    if cands:
        n = _cancel_linear(n, dd, cands)
    return RatFun._raw(Fraction(g, Q), n, _sorted_items(dd))


# ------------------------------------------------------------ slow paths


def _expanded(r: RatFun):
    """(scale, n, d) integer polys with r = scale * n / d."""
    d = _expand_factors(r.lin)
    if r.comp != ONE_POLY:
        d = K.pmul(d, r.comp)
    return r.c, r.n, d


def _from_expanded(c: Fraction, n: dict, d: dict, hints) -> RatFun:
    """Normalise c * n / d (integer polys) and split known linear factors off d."""
    if not n or not c:
        return ZERO
    if not d:
        raise DivisionByZero("zero denominator")
    g = ipoly_gcd(n, d)
    if g != ONE_POLY:
        n = exact_div(n, g)
        d = exact_div(d, g)
    gn, n = primitive(n)
    gd, d = primitive(d)
    c = c * gn / gd
    dd: dict = {}
    # monomial content of d splits into single-variable factors
    vm = _varmask(d)
    i = 1
    while vm:
        if vm & FIELD_MASK:
            shift = FIELD_BITS * (i - 1)
            low = min((m >> shift) & FIELD_MASK for m in d)
            if low:
                f = Factor({1 << shift: 1})
                dd[f] = low
                d = {m - low * (1 << shift): v for m, v in d.items()}
        vm >>= FIELD_BITS
        i += 1
    if len(d) > 1 and not _is_linear(d):
        hints = list(hints) + _candidate_factors(poly_vars(d))
    for f in hints:
        if f in dd or len(d) == 1:
            continue
        e = 0
        dvm = _varmask(d)
        while len(d) > 1 and _divides_possible(dvm, f):
            if not K.may_divide(d, f.shift, f.a, f.rest):
                break
            q = K.div_linear(d, f.shift, f.a, f.rest)
            if q is None:
                break
            d = q
            e += 1
            dvm = _varmask(d)
        if e:
            dd[f] = e
    s, d = sign_normalize(d)
    if s < 0:
        c = -c
    if d == ONE_POLY:
        comp = ONE_POLY
    elif _is_linear(d):
        f = Factor(d)
        dd[f] = dd.get(f, 0) + 1
        comp = ONE_POLY
    else:
        comp = d
    s, n = sign_normalize(n)
    if s < 0:
        c = -c
    return RatFun._raw(c, n, _sorted_items(dd), comp)


@lru_cache(maxsize=256)
def _candidate_factors_cached(vs: tuple) -> list:
    from .poly import primitive as _prim

    out = []
    unit = [1 << (FIELD_BITS * (i - 1)) for i in vs]
    for a in range(len(vs)):
        for b in range(a + 1, len(vs)):
            out.append({unit[a]: 1, unit[b]: -1})
            out.append({unit[a]: 1, unit[b]: 1})
    for a in range(len(vs)):
        for b in range(a + 2, len(vs)):
            out.append({unit[i]: 1 for i in range(a, b + 1)})
    return [Factor(_prim(p)[1]) for p in out]


def _candidate_factors(vs) -> list:
    """Linear forms tried against otherwise unfactored denominators: x_i +- x_j and
    sums of consecutive variables, which cover every denominator the mould
    operators produce."""
    vs = tuple(sorted(vs))
    if len(vs) > 10:
        return []
    return _candidate_factors_cached(vs)


def _hints(*rs):
    out = []
    seen = set()
    for r in rs:
        for f, _ in r.lin:
            if f not in seen:
                seen.add(f)
                out.append(f)
    return out


def _mul_slow(a: RatFun, b: RatFun) -> RatFun:
    ca, na, da = _expanded(a)
    cb, nb, db = _expanded(b)
    return _from_expanded(ca * cb, K.pmul(na, nb), K.pmul(da, db), _hints(a, b))


def _add_slow(a: RatFun, b: RatFun) -> RatFun:
    ca, na, da = _expanded(a)
    cb, nb, db = _expanded(b)
    q = ca.denominator * cb.denominator
    n = K.padd_scaled(K.pmul(na, db), ca.numerator * cb.denominator, K.pmul(nb, da), cb.numerator * ca.denominator)
    return _from_expanded(Fraction(1, q), n, K.pmul(da, db), _hints(a, b))


# ------------------------------------------------------------ substitution


def _compose(p: dict, polys, cache: dict) -> dict:
    """p(x_1 -> polys[0], x_2 -> polys[1], ...) for integer polynomials."""
    out: dict = {}
    for m, c in p.items():
        term = None
        i = 0
        while m:
            e = m & FIELD_MASK
            if e:
                key = (i, e)
                pw = cache.get(key)
                if pw is None:
                    pw = polys[i]
                    for _ in range(e - 1):
                        pw = K.pmul(pw, polys[i])
                    cache[key] = pw
                term = pw if term is None else K.pmul(term, pw)
            m >>= FIELD_BITS
            i += 1
        if term is None:
            term = ONE_POLY
        out = K.padd_scaled(out, 1, term, c)
    return out


def subst_forms(f: RatFun, forms) -> RatFun:
    """Substitute x_i -> forms[i-1] (LinForm) in f."""
    if not f.c or f.is_const():
        return f
    renaming = all(len(t.terms) == 1 and t.terms[0][1] == 1 for t in forms)
    if renaming:
        targets = [t.terms[0][0] for t in forms]
        injective = len(set(targets)) == len(targets)
        if injective and list(targets) == list(range(1, len(targets) + 1)):
            return f
        rn = lambda p: K.rename(p, targets)  # noqa: E731
    else:
        polys = [t.to_poly() for t in forms]
        cache: dict = {}
        injective = False
        rn = lambda p: _compose(p, polys, cache)  # noqa: E731
    c = f.c
    dd: dict = {}
    for fac, e in f.lin:
        p = rn(fac.poly)
        if not p:
            raise PoleAtSubstitution("denominator factor vanishes under substitution")
        g, p = primitive(p)
        c = c / (g ** e)
        if p == ONE_POLY:
            continue
        nf = Factor(p)
        dd[nf] = dd.get(nf, 0) + e
    n = rn(f.n)
    if not n:
        # the whole function vanishes; only poles would matter and none occurred
        if f.comp != ONE_POLY and not rn(f.comp):
            raise PoleAtSubstitution("denominator vanishes under substitution")
        return ZERO
    if f.comp != ONE_POLY:
        comp = rn(f.comp)
        if not comp:
            raise PoleAtSubstitution("denominator vanishes under substitution")
        d = K.pmul(_expand_factors(_sorted_items(dd)), comp)
        return _from_expanded(c, n, d, list(dd))
    if injective:
        return _finish(c, n, dd, need_content=False)
    g, n = primitive(n)
    c = c * g
    n = _cancel_linear(n, dd, list(dd))
    return RatFun._raw(c, n, _sorted_items(dd))


def shift_vars(f: RatFun, offset: int) -> RatFun:
    """Rename x_i -> x_{i+offset}: a multiplication of every monomial by a fixed one."""
    if offset == 0 or f.is_const():
        return f
    s = FIELD_BITS * offset
    n = {m << s: c for m, c in f.n.items()}
    lin = _sorted_items({Factor({m << s: c for m, c in fac.poly.items()}): e for fac, e in f.lin})
    comp = f.comp if f.comp == ONE_POLY else {m << s: c for m, c in f.comp.items()}
    return RatFun._raw(f.c, n, lin, comp)


# ------------------------------------------------------------- zero tests


def is_zero(f: RatFun, strategy: str = "canonical", trials: int = 8, rng=None, bound: int = 10**6) -> bool:
    """Zero test. The probabilistic strategy evaluates at random rational points."""
    if strategy == "canonical":
        return not f.c
    if strategy != "probabilistic":
        raise ValueError("unknown strategy %r" % strategy)
    if rng is None:
        rng = random.Random(0)
    vs = sorted(f.variables())
    for _ in range(trials):
        for _attempt in range(100):
            point = {
                i: Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for i in vs
            }
            try:
                v = f.eval_at(point)
            except ZeroDivisionError:
                continue
            break
        else:  # pragma: no cover - astronomically unlikely
            raise ArithmeticError("could not avoid poles")
        if v:
            return False
    return True


def rf_arith(a: RatFun, b: RatFun, op: str) -> RatFun:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError("unknown op %r" % op)


def rf_subst(f: RatFun, mapping) -> RatFun:
    return f.subst(mapping)


def rf_is_zero(f: RatFun, strategy: str = "canonical", trials: int = 8, seed: int = 0) -> bool:
    return is_zero(f, strategy, trials=trials, rng=random.Random(seed))


def degree_info(f: RatFun):
    """(numerator total degree, denominator total degree) of the canonical form."""
    n, d = f.canonical()
    return total_degree(n.terms), total_degree(d.terms)


__all__ = [
    "RatFun",
    "Factor",
    "ZERO",
    "ONE",
    "rf_arith",
    "rf_subst",
    "rf_is_zero",
    "is_zero",
    "subst_forms",
    "shift_vars",
    "mono_exps",
]
