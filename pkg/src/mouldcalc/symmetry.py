"""Dimoulds, the Sh and Sh* maps, and the four symmetry predicates.

Every symmetry is decided two ways: directly from the defining sums on
generic words, and through the dimould characterization (group-like or
primitive under Sh / Sh*).  The direct route enumerates shuffles and
contracting shuffles by its own non-recursive path enumeration, so the two
routes share no expansion code.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import NamedTuple

from .errors import ConventionMismatch, DepthExceeded, SpecMismatch
from .exactalg import LinForm, RatFun
from .exactalg.ratfun import ONE, ZERO, subst_forms
from .mould import Mould, exp_times, identity_mould, log_times, lu_bracket, mould_make
from .words import Letter, generic_word, shstar_terms, shuffle_counts

KINDS = ("alternal", "symmetral", "alternil", "symmetril")


def _rename(f: RatFun, targets) -> RatFun:
    return subst_forms(f, tuple(LinForm.var(t) for t in targets))


class Dimould:
    """Entries (r, s) with r + s <= R; the (omega; eta) entry uses x_1..x_r for
    omega and x_{r+1}..x_{r+s} for eta."""

    __slots__ = ("convention", "spec", "R", "tables")

    def __init__(self, convention, spec, R, tables):
        self.convention = convention
        self.spec = spec
        self.R = R
        self.tables = tables  # {(r, s): {sigma-vector: RatFun}}

    @property
    def empty(self) -> RatFun:
        return self.tables[(0, 0)][()]

    def entry(self, r: int, s: int, sigmas) -> RatFun:
        return self.tables[(r, s)][tuple(sigmas)]

    def shapes(self):
        return [(r, n - r) for n in range(self.R + 1) for r in range(n, -1, -1)]

    def same_shape(self, other: "Dimould") -> None:
        if self.spec is not other.spec or self.R != other.R:
            raise SpecMismatch("dimoulds over different groups or depths")
        if self.convention != other.convention:
            raise ConventionMismatch("mixing %s and %s conventions" % (self.convention, other.convention))

    def first_difference(self, other: "Dimould"):
        self.same_shape(other)
        for r, s in self.shapes():
            ta, tb = self.tables[(r, s)], other.tables[(r, s)]
            for sig in self.spec.vectors(r + s):
                if ta[sig] != tb[sig]:
                    return (r, s, sig, ta[sig] - tb[sig])
        return None

    def __eq__(self, other):
        if not isinstance(other, Dimould):
            return NotImplemented
        return self.first_difference(other) is None

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "Dimould") -> "Dimould":
        self.same_shape(other)
        t = {k: {sig: f + other.tables[k][sig] for sig, f in v.items()} for k, v in self.tables.items()}
        return Dimould(self.convention, self.spec, self.R, t)

    def __mul__(self, other: "Dimould") -> "Dimould":
        return dimould_mu(self, other)


def _build(convention, spec, R, fn) -> Dimould:
    tables = {}
    for n in range(R + 1):
        for r in range(n, -1, -1):
            s = n - r
            tables[(r, s)] = {sig: fn(r, s, sig) for sig in spec.vectors(n)}
    return Dimould(convention, spec, R, tables)


def dimould_unit(convention, spec, R) -> Dimould:
    return _build(convention, spec, R, lambda r, s, sig: ONE if r + s == 0 else ZERO)


def tensor(m: Mould, n: Mould) -> Dimould:
    m.same_shape(n)

    def fn(r, s, sig):
        a = m.component(sig[:r])
        if a.is_zero():
            return ZERO
        b = n.shifted(sig[r:], r) if s else n.component(())
        return a * b

    return _build(m.convention, m.spec, m.R, fn)


def dimould_mu(a: Dimould, b: Dimould) -> Dimould:
    a.same_shape(b)

    def fn(r, s, sig):
        total = ZERO
        om, et = sig[:r], sig[r:]
        for i in range(r + 1):
            for j in range(s + 1):
                fa = a.tables[(i, j)][om[:i] + et[:j]]
                if fa.is_zero():
                    continue
                fb = b.tables[(r - i, s - j)][om[i:] + et[j:]]
                if fb.is_zero():
                    continue
                ta = list(range(1, i + 1)) + list(range(r + 1, r + j + 1))
                tb = list(range(i + 1, r + 1)) + list(range(r + j + 1, r + s + 1))
                total = total + _rename(fa, ta) * _rename(fb, tb)
        return total

    return _build(a.convention, a.spec, a.R, fn)


def sh_map(m: Mould) -> Dimould:
    def fn(r, s, sig):
        om = generic_word(sig[:r])
        et = generic_word(sig[r:], start=r + 1)
        total = ZERO
        for w, k in shuffle_counts(om, et).items():
            total = total + m.evaluate(w).scale(k)
        return total

    return _build(m.convention, m.spec, m.R, fn)


def shstar_map(m: Mould) -> Dimould:
    if m.convention != "V":
        raise ConventionMismatch("the contracting shuffle map needs a V-convention mould")

    def fn(r, s, sig):
        om = generic_word(sig[:r])
        et = generic_word(sig[r:], start=r + 1)
        total = ZERO
        for w, k in shstar_terms(om, et).items():
            total = total + k * m.evaluate(w)
        return total

    return _build(m.convention, m.spec, m.R, fn)


# ------------------------------------------------- direct-route expansions


def _direct_shuffle_terms(om, et):
    """(word, 1) per shuffle, enumerated by the positions taken by om."""
    p, q = len(om), len(et)
    for pos in itertools.combinations(range(p + q), p):
        out = [None] * (p + q)
        ia = ib = 0
        ps = set(pos)
        for k in range(p + q):
            if k in ps:
                out[k] = om[ia]
                ia += 1
            else:
                out[k] = et[ib]
                ib += 1
        yield tuple(out), ONE


def _direct_shstar_terms(om, et):
    """(word, coefficient) per contracting-shuffle path.

    A path is a step sequence over {take a, take b, merge keeping a's form,
    merge keeping b's form}.  Merging heads (s,v), (s',v') gives (ss', v) with
    1/(v-v') or (ss', v') with -1/(v-v').  Forms must be pairwise distinct,
    which holds on generic words, so the equal-form rule never fires.
    """
    forms = [l.form for l in om] + [l.form for l in et]
    if len(set(forms)) != len(forms):
        raise ValueError("direct contracting-shuffle route needs distinct forms")
    stack = [(0, 0, (), ONE)]
    p, q = len(om), len(et)
    while stack:
        i, j, w, c = stack.pop()
        if i == p and j == q:
            yield w, c
            continue
        if i < p:
            stack.append((i + 1, j, w + (om[i],), c))
        if j < q:
            stack.append((i, j + 1, w + (et[j],), c))
        if i < p and j < q:
            a, b = om[i], et[j]
            k = RatFun.linear_product_inverse([a.form - b.form])
            sg = a.sigma * b.sigma
            stack.append((i + 1, j + 1, w + (Letter(sg, a.form),), c * k))
            stack.append((i + 1, j + 1, w + (Letter(sg, b.form),), -(c * k)))


# ------------------------------------------------------- symmetry checks


class Witness(NamedTuple):
    p: int
    q: int
    sigmas: tuple
    residual: RatFun


class SymmetryResult:
    def __init__(self, kind, holds, witness=None, records=None):
        self.kind = kind
        self.holds = holds
        self.witness = witness
        self.records = records or []

    def __bool__(self):
        return self.holds

    def __repr__(self):
        return "SymmetryResult(%s, holds=%s)" % (self.kind, self.holds)


def _needs_v(m: Mould, kind: str) -> None:
    if kind not in KINDS:
        raise ValueError("unknown symmetry kind %r" % kind)
    if kind in ("alternil", "symmetril") and m.convention != "V":
        raise ConventionMismatch("%s needs a V-convention mould" % kind)


def _membership(m: Mould, kind: str):
    want = 0 if kind in ("alternal", "alternil") else 1
    if m.empty != want:
        return Witness(0, 0, (), RatFun(m.empty - want))
    return None


def check_symmetry(m: Mould, kind: str, route: str = "direct", max_depth: int | None = None, all_records: bool = False) -> SymmetryResult:
    """Decide one of the four symmetries at all depths p+q <= max_depth (default R).

    Membership (empty component 0 for the Lie kinds, 1 for the group kinds)
    is part of the definition and is checked first on both routes.
    """
    _needs_v(m, kind)
    R = m.R if max_depth is None else max_depth
    if R > m.R:
        raise DepthExceeded("cannot check past the mould depth")
    bad = _membership(m, kind)
    if bad is not None:
        return SymmetryResult(kind, False, bad, [bad] if all_records else [])
    if route == "direct":
        return _check_direct(m, kind, R, all_records)
    if route == "characterization":
        return _check_characterization(m, kind, R, all_records)
    raise ValueError("unknown route %r" % route)


def _check_direct(m, kind, R, all_records):
    terms = _direct_shuffle_terms if kind in ("alternal", "symmetral") else _direct_shstar_terms
    group_like = kind in ("symmetral", "symmetril")
    records = []
    first = None
    for n in range(2, R + 1):
        for p in range(1, n):
            q = n - p
            for sig in m.spec.vectors(n):
                om = generic_word(sig[:p])
                et = generic_word(sig[p:], start=p + 1)
                total = ZERO
                for w, c in terms(om, et):
                    total = total + c * m.evaluate(w)
                if group_like:
                    total = total - m.evaluate(om) * m.evaluate(et)
                rec = Witness(p, q, sig, total)
                if all_records:
                    records.append(rec)
                if not total.is_zero() and first is None:
                    first = rec
                    if not all_records:
                        return SymmetryResult(kind, False, first)
    return SymmetryResult(kind, first is None, first, records)


def _check_characterization(m, kind, R, all_records):
    if R < m.R:
        from .mould import truncate

        m = truncate(m, R)
    dm = sh_map(m) if kind in ("alternal", "symmetral") else shstar_map(m)
    iden = identity_mould(m.convention, m.spec, m.R)
    if kind in ("symmetral", "symmetril"):
        target = tensor(m, m)
    else:
        target = tensor(m, iden) + tensor(iden, m)
    records = []
    first = None
    for r, s in dm.shapes():
        for sig in m.spec.vectors(r + s):
            res = dm.tables[(r, s)][sig] - target.tables[(r, s)][sig]
            rec = Witness(r, s, sig, res)
            if all_records and r and s:
                records.append(rec)
            if not res.is_zero() and first is None:
                first = rec
                if not all_records:
                    return SymmetryResult(kind, False, first)
    return SymmetryResult(kind, first is None, first, records)


# ----------------------------------------------------- structured samples


def _bracket_coefficients(r: int) -> dict:
    """Coefficients of the left-normed bracket [[[1,2],3],...,r] as {permutation: +-1}."""
    poly = {(0,): 1}
    for k in range(1, r):
        nxt: dict = {}
        for w, c in poly.items():
            for key, sgn in ((w + (k,), c), ((k,) + w, -c)):
                nxt[key] = nxt.get(key, 0) + sgn
        poly = {w: c for w, c in nxt.items() if c}
    return poly


def _lie_dual(f_of, spec, r):
    """Depth-r table of the alternal mould w -> sum_u <theta(u), w> F(u).

    theta(u) is the left-normed bracket of the letters of u.  Pairing any
    Lie polynomial with a proper shuffle gives zero, so the result is
    alternal whatever F is.  For generic w the coefficient of w in
    theta(w o pi) is the bracket coefficient at pi^{-1}.
    """
    coeffs = _bracket_coefficients(r)
    table = {}
    for sig in spec.vectors(r):
        w = generic_word(sig)
        total = ZERO
        for pi in itertools.permutations(range(r)):
            # u = w o pi; w appears in theta(u) at position pattern inv(pi)
            inv = [0] * r
            for a, b in enumerate(pi):
                inv[b] = a
            c = coeffs.get(tuple(inv))
            if not c:
                continue
            u = tuple(w[i] for i in pi)
            total = total + f_of(u).scale(c)
        table[sig] = total
    return table


def random_alternal(convention, spec, R, rng, terms: int = 1) -> Mould:
    from .mould import random_component

    tables = []
    for r in range(1, R + 1):
        comps = {sig: random_component(rng, r, terms) for sig in spec.vectors(r)}

        def f_of(u, comps=comps, r=r):
            sig = tuple(l.sigma for l in u)
            return subst_forms(comps[sig], tuple(l.form for l in u))

        tables.append(_lie_dual(f_of, spec, r))
    return Mould(convention, spec, R, 0, tables)


def random_alternil(spec, R, rng) -> Mould:
    from .flexion import ganit_apply, named_mould

    pic = named_mould("pic", spec, R)
    base = ganit_apply(pic, random_alternal("V", spec, R, rng))
    c = named_mould("C", spec, R).scale(Fraction(rng.choice([-2, -1, 1, 3]), rng.choice([1, 2])))
    lp = log_times(pic).scale(Fraction(rng.choice([-1, 1, 2]), 1))
    out = base + c + lp
    return out + lu_bracket(c, base).scale(Fraction(1, rng.choice([1, 2, 3])))


def random_structured(kind: str, spec, R: int, seed: int, convention: str = "V") -> Mould:
    """Random mould of the requested symmetry.

    alternal: Lie-dual of random depth tables (covers all iterated brackets);
    symmetral: exp of alternal; alternil: ganit(pic) of alternal plus multiples
    of C, log(pic) and a bracket; symmetril: exp of alternil.
    """
    rng = random.Random(seed)
    if kind == "alternal":
        return random_alternal(convention, spec, R, rng)
    if kind == "symmetral":
        return exp_times(random_alternal(convention, spec, R, rng))
    if kind == "alternil":
        return random_alternil(spec, R, rng)
    if kind == "symmetril":
        return exp_times(random_alternil(spec, R, rng))
    raise ValueError("unknown symmetry kind %r" % kind)


def depth_one_mould(convention, spec, R, rng) -> Mould:
    from .mould import random_component

    return mould_make(convention, spec, R, 0, lambda r, s: random_component(rng, 1) if r == 1 else ZERO)


__all__ = [
    "Dimould",
    "KINDS",
    "SymmetryResult",
    "Witness",
    "check_symmetry",
    "depth_one_mould",
    "dimould_mu",
    "dimould_unit",
    "random_alternal",
    "random_alternil",
    "random_structured",
    "sh_map",
    "shstar_map",
    "tensor",
]
