"""Decorated letters and words, formal word sums, shuffle and contracting shuffle."""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .exactalg import LinForm, RatFun
from .exactalg.ratfun import ONE, ZERO
from .gamma import GammaElem


class Letter(NamedTuple):
    sigma: GammaElem
    form: LinForm

    def render(self, family: str = "v") -> str:
        return "(%s|%s)" % (self.sigma.render(), self.form.render(family))


Word = tuple  # tuple[Letter, ...]

EMPTY: Word = ()


def word_key(w: Word):
    return (len(w), tuple((l.sigma.index, l.form.terms) for l in w))


def render_word(w: Word, family: str = "v") -> str:
    return "[" + ",".join(l.render(family) for l in w) + "]"


def generic_word(sigmas, start: int = 1) -> Word:
    """Letters (sigma_i, x_{start+i}) with fresh distinct variables."""
    return tuple(Letter(s, LinForm.var(start + i)) for i, s in enumerate(sigmas))


class FormalWordSum:
    """Finite sum of words with nonzero RatFun coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict = {}
        if terms:
            for w, c in terms.items():
                if not isinstance(c, RatFun):
                    c = RatFun(c)
                if not c.is_zero():
                    self.terms[tuple(w)] = c

    @classmethod
    def word(cls, w: Word, coef=ONE) -> "FormalWordSum":
        return cls({w: coef})

    def add_term(self, w: Word, c: RatFun) -> None:
        """In-place accumulation; only for sums under construction."""
        if c.is_zero():
            return
        old = self.terms.get(w)
        if old is None:
            self.terms[w] = c
        else:
            s = old + c
            if s.is_zero():
                del self.terms[w]
            else:
                self.terms[w] = s

    def __add__(self, other: "FormalWordSum") -> "FormalWordSum":
        out = FormalWordSum()
        out.terms = dict(self.terms)
        for w, c in other.terms.items():
            out.add_term(w, c)
        return out

    def __neg__(self) -> "FormalWordSum":
        out = FormalWordSum()
        out.terms = {w: -c for w, c in self.terms.items()}
        return out

    def __sub__(self, other: "FormalWordSum") -> "FormalWordSum":
        return self + (-other)

    def scale(self, c) -> "FormalWordSum":
        if not isinstance(c, RatFun):
            c = RatFun(c)
        out = FormalWordSum()
        if c.is_zero():
            return out
        out.terms = {w: v * c for w, v in self.terms.items()}
        out.terms = {w: v for w, v in out.terms.items() if not v.is_zero()}
        return out

    def prepend(self, prefix: Word) -> "FormalWordSum":
        out = FormalWordSum()
        out.terms = {tuple(prefix) + w: c for w, c in self.terms.items()}
        return out

    def append(self, suffix: Word) -> "FormalWordSum":
        out = FormalWordSum()
        out.terms = {w + tuple(suffix): c for w, c in self.terms.items()}
        return out

    def map_words(self, fn) -> "FormalWordSum":
        """Linear extension of fn: Word -> FormalWordSum."""
        out = FormalWordSum()
        for w, c in self.terms.items():
            for w2, c2 in fn(w).terms.items():
                out.add_term(w2, c * c2)
        return out

    def pair(self, evaluate) -> RatFun:
        """sum_w c_w * evaluate(w)."""
        total = ZERO
        for w, c in self.terms.items():
            total = total + c * evaluate(w)
        return total

    def coefficient(self, w: Word) -> RatFun:
        return self.terms.get(tuple(w), ZERO)

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_items(self):
        return sorted(self.terms.items(), key=lambda wc: word_key(wc[0]))

    def __eq__(self, other):
        if not isinstance(other, FormalWordSum):
            return NotImplemented
        return self.terms.keys() == other.terms.keys() and all(self.terms[w] == other.terms[w] for w in self.terms)

    def __len__(self):
        return len(self.terms)

    def render(self, family: str = "v") -> str:
        if not self.terms:
            return "0"
        return "\n".join("%s : %s" % (c.render(family), render_word(w, family)) for w, c in self.sorted_items())

    def __repr__(self):
        return "FormalWordSum(%d terms)" % len(self.terms)


# ------------------------------------------------------------------ shuffle


@lru_cache(maxsize=None)
def shuffle_patterns(p: int, q: int) -> tuple:
    """All interleavings of positions 0..p-1 with p..p+q-1, each as an index tuple."""
    if p == 0 or q == 0:
        return (tuple(range(p + q)),)
    out = []
    for rest in shuffle_patterns(p - 1, q):
        out.append((0,) + tuple(i + 1 for i in rest))
    for rest in shuffle_patterns(p, q - 1):
        out.append((p,) + tuple(i if i < p else i + 1 for i in rest))
    return tuple(out)


@lru_cache(maxsize=1 << 16)
def shuffle_counts(w1: Word, w2: Word) -> dict:
    """{word: multiplicity} for the shuffle product."""
    letters = tuple(w1) + tuple(w2)
    out: dict = {}
    for pat in shuffle_patterns(len(w1), len(w2)):
        w = tuple(letters[i] for i in pat)
        out[w] = out.get(w, 0) + 1
    return out


def shuffle(w1: Word, w2: Word) -> FormalWordSum:
    out = FormalWordSum()
    out.terms = {w: RatFun(c) for w, c in shuffle_counts(tuple(w1), tuple(w2)).items()}
    return out


def sh_coeff(w1: Word, w2: Word, target: Word) -> int:
    return shuffle_counts(tuple(w1), tuple(w2)).get(tuple(target), 0)


def shuffle_sums(a: FormalWordSum, b: FormalWordSum) -> FormalWordSum:
    out = FormalWordSum()
    for w1, c1 in a.terms.items():
        for w2, c2 in b.terms.items():
            c = c1 * c2
            for w, k in shuffle_counts(w1, w2).items():
                out.add_term(w, c.scale(k))
    return out


# ----------------------------------------------------------- contracting


@lru_cache(maxsize=1 << 16)
def _inv_diff(f1: LinForm, f2: LinForm) -> RatFun:
    return RatFun.linear_product_inverse([f1 - f2])


@lru_cache(maxsize=1 << 16)
def shstar_terms(w1: Word, w2: Word) -> dict:
    """{word: RatFun} for the contracting shuffle product of two words."""
    if not w1:
        return {w2: ONE}
    if not w2:
        return {w1: ONE}
    a, b = w1[0], w2[0]
    if a.form == b.form:
        return {}
    out: dict = {}

    def acc(w, c):
        old = out.get(w)
        if old is None:
            out[w] = c
        else:
            s = old + c
            if s.is_zero():
                del out[w]
            else:
                out[w] = s

    for w, c in shstar_terms(w1[1:], w2).items():
        acc((a,) + w, c)
    for w, c in shstar_terms(w1, w2[1:]).items():
        acc((b,) + w, c)
    inner = shstar_terms(w1[1:], w2[1:])
    if inner:
        k = _inv_diff(a.form, b.form)
        ab = a.sigma * b.sigma
        la = Letter(ab, a.form)
        lb = Letter(ab, b.form)
        for w, c in inner.items():
            ck = c * k
            acc((la,) + w, ck)
            acc((lb,) + w, -ck)
    return out


def shuffle_star(w1: Word, w2: Word) -> FormalWordSum:
    out = FormalWordSum()
    out.terms = dict(shstar_terms(tuple(w1), tuple(w2)))
    return out


def shstar_coeff(w1: Word, w2: Word, target: Word) -> RatFun:
    return shstar_terms(tuple(w1), tuple(w2)).get(tuple(target), ZERO)


def shuffle_star_sums(a: FormalWordSum, b: FormalWordSum) -> FormalWordSum:
    out = FormalWordSum()
    for w1, c1 in a.terms.items():
        for w2, c2 in b.terms.items():
            c = c1 * c2
            for w, k in shstar_terms(w1, w2).items():
                out.add_term(w, c * k)
    return out


def deconcatenations(w: Word):
    """All (prefix, suffix) splittings, prefix lengths 0..len(w)."""
    return [(w[:i], w[i:]) for i in range(len(w) + 1)]


def compositions_of_word(w: Word, r: int):
    """All ways to cut w into r consecutive (possibly empty) pieces."""
    n = len(w)
    if r == 1:
        yield (w,)
        return
    for i in range(n + 1):
        for rest in compositions_of_word(w[i:], r - 1):
            yield (w[:i],) + rest
