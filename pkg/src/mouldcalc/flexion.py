"""Flexions, named moulds, ganit_v(B), the g_B word expansion and its
decomposition combinatorics."""

from __future__ import annotations

from functools import reduce

from .errors import ConventionMismatch, EmptyAbsorber, NotInGARI
from .exactalg import LinForm, RatFun
from .exactalg.ratfun import ONE, ZERO
from .gamma import GammaSpec
from .mould import Mould, anti, like, mould_make, pari, pari_anti
from .words import FormalWordSum, Letter, Word, shstar_terms, shuffle_counts, shuffle_star, shuffle_star_sums, shuffle_sums

# ------------------------------------------------------------------ flexions


def _sigma_product(word: Word):
    return reduce(lambda x, y: x * y, (l.sigma for l in word))


def ulflex(a: Word, b: Word) -> Word:
    """V convention: a with its last sigma multiplied by all sigmas of b."""
    if not a:
        raise EmptyAbsorber("upper flexion needs a nonempty absorbing block")
    if not b:
        return a
    last = a[-1]
    return a[:-1] + (Letter(last.sigma * _sigma_product(b), last.form),)


def lrflex(a: Word, b: Word) -> Word:
    """V convention: b with every form measured from the last form of a."""
    if not a:
        raise EmptyAbsorber("lower flexion needs a nonempty reference block")
    ref = a[-1].form
    return tuple(Letter(l.sigma, l.form - ref) for l in b)


def _form_sum(word: Word) -> LinForm:
    total = LinForm({})
    for l in word:
        total = total + l.form
    return total


def u_upper_last(a: Word, b: Word) -> Word:
    """U convention: the last letter of a absorbs the u-sum of b."""
    if not a:
        raise EmptyAbsorber("upper flexion needs a nonempty absorbing block")
    if not b:
        return a
    last = a[-1]
    return a[:-1] + (Letter(last.sigma, last.form + _form_sum(b)),)


def u_upper_first(b: Word, c: Word) -> Word:
    """U convention: the first letter of c absorbs the u-sum of b."""
    if not c:
        raise EmptyAbsorber("upper flexion needs a nonempty absorbing block")
    if not b:
        return c
    first = c[0]
    return (Letter(first.sigma, first.form + _form_sum(b)),) + c[1:]


def u_lower(b: Word, ref: Letter) -> Word:
    """U convention: every sigma of b divided by the reference letter's sigma."""
    inv = ref.sigma.inv()
    return tuple(Letter(l.sigma * inv, l.form) for l in b)


def flex(a: Word, b: Word, which: str, convention: str = "V") -> Word:
    """upper_ul: a absorbs b at its last letter; lower_lr: b measured from a's last letter."""
    if which == "upper_ul":
        return ulflex(a, b) if convention == "V" else u_upper_last(a, b)
    if which == "lower_lr":
        if convention == "V":
            return lrflex(a, b)
        if not a:
            raise EmptyAbsorber("lower flexion needs a nonempty reference block")
        return u_lower(b, a[-1])
    raise ValueError("unknown flexion %r" % which)


# ------------------------------------------------------------- named moulds


def _x(i):
    return LinForm.var(i)


def _named_component(name: str, r: int) -> RatFun:
    if name == "A":
        if r < 2:
            return ZERO
        return RatFun.linear_product_inverse([_x(i + 1) - _x(i) for i in range(1, r)])
    if name == "paj":
        forms = []
        acc = LinForm({})
        for i in range(1, r + 1):
            acc = acc + _x(i)
            forms.append(acc)
        return RatFun.linear_product_inverse(forms)
    if name == "C":
        if r == 1:
            return ONE
        return RatFun.linear_product_inverse([_x(i) - _x(1) for i in range(2, r + 1)])
    if name == "pic":
        return RatFun.linear_product_inverse([_x(i) for i in range(1, r + 1)])
    if name == "pij":
        return RatFun.linear_product_inverse([_x(i) - _x(i + 1) for i in range(1, r)] + [_x(r)])
    if name == "poc":
        return -RatFun.linear_product_inverse([_x(1)] + [_x(i) - _x(i + 1) for i in range(1, r)])
    raise ValueError("unknown named mould %r" % name)


NAMED = {"A": ("U", 0), "paj": ("U", 1), "C": ("V", 0), "pic": ("V", 1), "pij": ("V", 1), "poc": ("V", 1)}


def named_mould(name: str, spec: GammaSpec, R: int) -> Mould:
    """Closed-form moulds; every sigma-vector carries the same component."""
    if name in ("I", "identity"):
        return mould_make("V", spec, R, 1, lambda r, s: ZERO)
    if name not in NAMED:
        raise ValueError("unknown named mould %r" % name)
    convention, empty = NAMED[name]
    cache: dict = {}

    def gen(r, sig):
        if r not in cache:
            cache[r] = _named_component(name, r)
        return cache[r]

    return mould_make(convention, spec, R, empty, gen)


# ----------------------------------------------------------- decompositions


def enumerate_decompositions(w: Word, t: int, variant: str = "D", head_len_filter: str = "any") -> list:
    """All (c_1;...;c_t) with concatenation w.

    D_t: c_1..c_{t-1} nonempty.  E_t: c_2..c_{t-1} nonempty.
    head_len_filter restricts len(c_1): 'any', '>=2' or '=1'.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    w = tuple(w)
    n = len(w)

    def must_be_nonempty(i):  # i is 0-based block index
        if i == t - 1:
            return False
        if variant == "D":
            return True
        if variant == "E":
            return i >= 1
        raise ValueError("variant must be D or E")

    out = []

    def rec(i, start, acc):
        if i == t - 1:
            out.append(tuple(acc) + (w[start:],))
            return
        lo = start + 1 if must_be_nonempty(i) else start
        for end in range(lo, n + 1):
            acc.append(w[start:end])
            rec(i + 1, end, acc)
            acc.pop()

    rec(0, 0, [])
    if head_len_filter == ">=2":
        out = [d for d in out if len(d[0]) >= 2]
    elif head_len_filter == "=1":
        out = [d for d in out if len(d[0]) == 1]
    elif head_len_filter != "any":
        raise ValueError("unknown head filter %r" % head_len_filter)
    return out


def bijection_dge2(d):
    """D_t^{>=2}(w) -> D_t(w'): drop the first letter of c_1."""
    return (d[0][1:],) + d[1:]


def bijection_d1(d):
    """D_t^1(w) -> D_{t-1}(w'): drop c_1."""
    return d[1:]


def bijection_e_to_d(first: Letter, e):
    """E_t(w') -> D_t(w): prepend the first letter of w to c_1."""
    return ((first,) + e[0],) + e[1:]


def ganit_schemes(w: Word) -> list:
    """All (a_1;b_1;...;a_s;b_s), s >= 1, i.e. the union of D_{2s}(w)."""
    out = []
    for s in range(1, len(w) + 1):
        out.extend(enumerate_decompositions(w, 2 * s, "D"))
    return out


# -------------------------------------------------------------------- ganit


def _require_gari_v(b: Mould) -> None:
    if b.convention != "V":
        raise ConventionMismatch("ganit works in the V convention")
    if b.empty != 1:
        raise NotInGARI("ganit needs B with empty component 1")


def _scheme_weight(b: Mould, parts) -> RatFun:
    c = ONE
    for k in range(0, len(parts), 2):
        bk = parts[k + 1]
        if bk:
            c = c * b.evaluate(lrflex(parts[k], bk))
            if c.is_zero():
                return c
    return c


def _scheme_word(parts) -> Word:
    out: tuple = ()
    for k in range(0, len(parts), 2):
        out = out + ulflex(parts[k], parts[k + 1])
    return out


def ganit_apply(b: Mould, a: Mould) -> Mould:
    _require_gari_v(b)
    b.same_shape(a)
    from .words import generic_word

    tables = []
    for r in range(1, a.R + 1):
        t = {}
        for sig in a.spec.vectors(r):
            w = generic_word(sig)
            total = ZERO
            for parts in ganit_schemes(w):
                c = _scheme_weight(b, parts)
                if c.is_zero():
                    continue
                v = a.evaluate(_scheme_word(parts))
                if not v.is_zero():
                    total = total + c * v
            t[sig] = total
        tables.append(t)
    return like(a, a.empty, tables)


def g_expand(b: Mould, w: Word) -> FormalWordSum:
    """g_B(w) = sum over D_{2s}(w) of W_B, as a formal word sum."""
    _require_gari_v(b)
    w = tuple(w)
    if not w:
        return FormalWordSum.word(())
    out = FormalWordSum()
    for parts in ganit_schemes(w):
        out.add_term(_scheme_word(parts), _scheme_weight(b, parts))
    return out


def g_expand_sum(b: Mould, x: FormalWordSum) -> FormalWordSum:
    return x.map_words(lambda w: g_expand(b, w))


def w_term(b: Mould, parts) -> FormalWordSum:
    """W_B(a_1;b_1;...;a_s;b_s); the empty scheme gives the empty word."""
    if not parts:
        return FormalWordSum.word(())
    return FormalWordSum.word(_scheme_word(parts), _scheme_weight(b, parts))


def g_expand_via_e(b: Mould, w: Word) -> FormalWordSum:
    """The E_{2s+1}(w')-indexed form of g_B(w): head letter absorbs b_0."""
    _require_gari_v(b)
    w = tuple(w)
    if not w:
        return FormalWordSum.word(())
    head, rest = w[:1], w[1:]
    out = FormalWordSum()
    for s in range(0, len(rest) + 1):
        for e in enumerate_decompositions(rest, 2 * s + 1, "E"):
            b0, u = e[0], e[1:]
            c = b.evaluate(lrflex(head, b0)) if b0 else ONE
            tail = w_term(b, u)
            prefix = ulflex(head, b0)
            for tw, tc in tail.terms.items():
                out.add_term(prefix + tw, c * tc)
    return out


# -------------------------------------------------------------- recurrences


def g_recurrence_rhs(b: Mould, w: Word) -> FormalWordSum:
    """(w1) g(w') + B(lr(w1;w2)) g(ul(w1;w2), w'')."""
    w = tuple(w)
    if len(w) < 2:
        raise ValueError("recurrence needs a word of length >= 2")
    first = g_expand(b, w[1:]).prepend(w[:1])
    k = b.evaluate(lrflex(w[:1], w[1:2]))
    second = g_expand(b, ulflex(w[:1], w[1:2]) + w[2:]).scale(k)
    return first + second


def verify_g_recurrence(w: Word, b: Mould) -> bool:
    return g_expand(b, w) == g_recurrence_rhs(b, w)


def gpoc_recurrence_rhs(b: Mould, w: Word) -> FormalWordSum:
    """g(w_{<r}) (w_r) + B(lr(w_{r-1};w_r)) g(w_{<r-1}, ul(w_{r-1};w_r))."""
    w = tuple(w)
    if len(w) < 2:
        raise ValueError("recurrence needs a word of length >= 2")
    first = g_expand(b, w[:-1]).append(w[-1:])
    k = b.evaluate(lrflex(w[-2:-1], w[-1:]))
    second = g_expand(b, w[:-2] + ulflex(w[-2:-1], w[-1:])).scale(k)
    return first + second


def verify_gpoc_recurrence(w: Word, b: Mould) -> bool:
    return g_expand(b, w) == gpoc_recurrence_rhs(b, w)


# ------------------------------------------------------------ intertwinings


def g_of_star_shuffle(b: Mould, alpha: Word, beta: Word):
    """(g(alpha sh* beta), g(alpha) sh g(beta))."""
    lhs = g_expand_sum(b, shuffle_star(alpha, beta))
    rhs = shuffle_sums(g_expand(b, alpha), g_expand(b, beta))
    return lhs, rhs


def g_of_shuffle(b: Mould, alpha: Word, beta: Word):
    """(g(alpha sh beta), g(alpha) sh* g(beta))."""
    sh = FormalWordSum({w: k for w, k in shuffle_counts(tuple(alpha), tuple(beta)).items()})
    lhs = g_expand_sum(b, sh)
    rhs = shuffle_star_sums(g_expand(b, alpha), g_expand(b, beta))
    return lhs, rhs


def _sh_value(m: Mould, om: Word, et: Word, star: bool) -> RatFun:
    total = ZERO
    if star:
        for w, k in shstar_terms(om, et).items():
            total = total + k * m.evaluate(w)
    else:
        for w, k in shuffle_counts(om, et).items():
            total = total + m.evaluate(w).scale(k)
    return total


def transfer_sum(b: Mould, m: Mould, alpha: Word, beta: Word, star_inside: bool) -> RatFun:
    """Double decomposition sum over D_{2p}(alpha) x D_{2q}(beta) of B-weights
    times Sh(M) (star_inside=False) or Sh*(M) (star_inside=True) at the flexed words."""
    total = ZERO
    left = [(p, _scheme_weight(b, p)) for p in ganit_schemes(alpha)]
    right = [(q, _scheme_weight(b, q)) for q in ganit_schemes(beta)]
    for pa, ca in left:
        if ca.is_zero():
            continue
        wa = _scheme_word(pa)
        for pb, cb in right:
            if cb.is_zero():
                continue
            total = total + ca * cb * _sh_value(m, wa, _scheme_word(pb), star_inside)
    return total


def transfer_direct(transformed: Mould, alpha: Word, beta: Word, star_outside: bool) -> RatFun:
    """Sh*(N) (star_outside=True) or Sh(N) at (alpha; beta), N = ganit(B)(M) precomputed."""
    return _sh_value(transformed, tuple(alpha), tuple(beta), star_outside)


# --------------------------------------------------------- pic identities


def pic_identity_residuals(w1: Letter, w2: Letter, w3: Letter, omega: Word, eta: Word, pic: Mould) -> dict:
    """Residuals of the four pic identities; all should be zero."""
    a, b, c = (w1,), (w2,), (w3,)
    return {
        "upper": pic.evaluate(ulflex(a, b)) - pic.evaluate(a),
        "lower": pic.evaluate(lrflex(a, b)) + pic.evaluate(lrflex(b, a)),
        "fay": pic.evaluate(lrflex(a, b + c)) + pic.evaluate(lrflex(b, c + a)) + pic.evaluate(lrflex(c, a + b)),
        "decomposition": pic.evaluate(tuple(omega)) * pic.evaluate(tuple(eta)) - pic.evaluate(tuple(omega) + tuple(eta)),
    }


__all__ = [
    "NAMED",
    "anti",
    "bijection_d1",
    "bijection_dge2",
    "bijection_e_to_d",
    "enumerate_decompositions",
    "flex",
    "g_expand",
    "g_expand_sum",
    "g_expand_via_e",
    "g_of_shuffle",
    "g_of_star_shuffle",
    "g_recurrence_rhs",
    "ganit_apply",
    "ganit_schemes",
    "gpoc_recurrence_rhs",
    "lrflex",
    "named_mould",
    "pari",
    "pari_anti",
    "pic_identity_residuals",
    "transfer_direct",
    "transfer_sum",
    "u_lower",
    "u_upper_first",
    "u_upper_last",
    "ulflex",
    "verify_g_recurrence",
    "verify_gpoc_recurrence",
    "w_term",
]
