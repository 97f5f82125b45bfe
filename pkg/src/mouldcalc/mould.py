"""Depth-truncated moulds: tables Gamma^r -> RatFun(x_1..x_r) for r <= R."""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .errors import ConventionMismatch, DepthExceeded, NotInARI, NotInGARI, SpecMismatch, VariableEscape
from .exactalg import LinForm, RatFun
from .exactalg.ratfun import ONE, ZERO, shift_vars, subst_forms
from .gamma import GammaSpec
from .words import Word

CONVENTIONS = ("U", "V")


class Mould:
    __slots__ = ("convention", "spec", "R", "empty", "tables", "_eval_cache", "_shift_cache")

    def __init__(self, convention: str, spec: GammaSpec, R: int, empty, tables):
        if convention not in CONVENTIONS:
            raise ValueError("convention must be U or V")
        if R < 0:
            raise ValueError("R must be >= 0")
        self.convention = convention
        self.spec = spec
        self.R = R
        self.empty = Fraction(empty)
        self.tables = tuple(tables)
        if len(self.tables) != R:
            raise ValueError("expected %d depth tables" % R)
        self._eval_cache: dict = {}
        self._shift_cache: dict = {}

    def __reduce__(self):
        return (Mould, (self.convention, self.spec, self.R, self.empty, self.tables))

    # ------------------------------------------------------------ access

    def component(self, sigmas) -> RatFun:
        r = len(sigmas)
        if r == 0:
            return RatFun(self.empty)
        if r > self.R:
            raise DepthExceeded("depth %d exceeds R=%d" % (r, self.R))
        return self.tables[r - 1][tuple(sigmas)]

    def items(self):
        """(depth, sigma-vector, RatFun) in depth then mixed-radix order, depth >= 1."""
        for r in range(1, self.R + 1):
            for sig in self.spec.vectors(r):
                yield r, sig, self.tables[r - 1][sig]

    def shifted(self, sigmas, offset: int) -> RatFun:
        """Component at sigmas with x_i renamed to x_{i+offset}."""
        key = (sigmas, offset)
        f = self._shift_cache.get(key)
        if f is None:
            f = shift_vars(self.component(sigmas), offset)
            self._shift_cache[key] = f
        return f

    def evaluate(self, w: Word) -> RatFun:
        r = len(w)
        if r == 0:
            return RatFun(self.empty)
        if r > self.R:
            raise DepthExceeded("word of length %d exceeds R=%d" % (r, self.R))
        cached = self._eval_cache.get(w)
        if cached is not None:
            return cached
        sig = tuple(l.sigma for l in w)
        f = self.tables[r - 1][sig]
        forms = tuple(l.form for l in w)
        out = subst_forms(f, forms)
        self._eval_cache[w] = out
        return out

    __call__ = evaluate

    def in_ari(self) -> bool:
        return self.empty == 0

    def in_gari(self) -> bool:
        return self.empty == 1

    # ------------------------------------------------------------ compare

    def same_shape(self, other: "Mould") -> None:
        if self.spec is not other.spec or self.R != other.R:
            raise SpecMismatch("moulds over %s/R=%d and %s/R=%d" % (self.spec.render(), self.R, other.spec.render(), other.R))
        if self.convention != other.convention:
            raise ConventionMismatch("mixing %s and %s conventions" % (self.convention, other.convention))

    def first_difference(self, other: "Mould"):
        """None if equal, else (depth, sigma-vector, self - other at that entry)."""
        self.same_shape(other)
        if self.empty != other.empty:
            return (0, (), RatFun(self.empty - other.empty))
        for r in range(1, self.R + 1):
            ta, tb = self.tables[r - 1], other.tables[r - 1]
            for sig in self.spec.vectors(r):
                if ta[sig] != tb[sig]:
                    return (r, sig, ta[sig] - tb[sig])
        return None

    def __eq__(self, other):
        if not isinstance(other, Mould):
            return NotImplemented
        try:
            return self.first_difference(other) is None
        except (SpecMismatch, ConventionMismatch):
            return False

    __hash__ = None  # type: ignore[assignment]

    def is_zero(self) -> bool:
        return self.empty == 0 and all(f.is_zero() for _, _, f in self.items())

    def valuation(self) -> int:
        """Smallest depth with a nonzero component (R+1 for the zero mould)."""
        if self.empty:
            return 0
        for r in range(1, self.R + 1):
            if any(not f.is_zero() for f in self.tables[r - 1].values()):
                return r
        return self.R + 1

    # ---------------------------------------------------------- linear ops

    def map_entries(self, fn, empty=None) -> "Mould":
        tables = [{sig: fn(r, sig, f) for sig, f in self.tables[r - 1].items()} for r in range(1, self.R + 1)]
        return Mould(self.convention, self.spec, self.R, self.empty if empty is None else empty, tables)

    def __add__(self, other: "Mould") -> "Mould":
        self.same_shape(other)
        tables = [{sig: f + other.tables[r][sig] for sig, f in self.tables[r].items()} for r in range(self.R)]
        return Mould(self.convention, self.spec, self.R, self.empty + other.empty, tables)

    def __neg__(self) -> "Mould":
        return self.map_entries(lambda r, s, f: -f, -self.empty)

    def __sub__(self, other: "Mould") -> "Mould":
        return self + (-other)

    def scale(self, c) -> "Mould":
        c = Fraction(c)
        return self.map_entries(lambda r, s, f: f.scale(c), self.empty * c)

    def __mul__(self, other: "Mould") -> "Mould":
        return mu(self, other)

    def __repr__(self):
        return "Mould(%s, %s, R=%d, empty=%s)" % (self.convention, self.spec.render(), self.R, self.empty)


# ------------------------------------------------------------ construction


def mould_make(convention: str, spec: GammaSpec, R: int, empty, generator) -> Mould:
    tables = []
    for r in range(1, R + 1):
        t = {}
        for sig in spec.vectors(r):
            f = generator(r, sig)
            if not isinstance(f, RatFun):
                f = RatFun(f)
            if f.max_var() > r:
                raise VariableEscape("component at depth %d uses x%d" % (r, f.max_var()))
            t[sig] = f
        tables.append(t)
    return Mould(convention, spec, R, empty, tables)


def zero_mould(convention: str, spec: GammaSpec, R: int) -> Mould:
    return mould_make(convention, spec, R, 0, lambda r, s: ZERO)


def identity_mould(convention: str, spec: GammaSpec, R: int) -> Mould:
    return mould_make(convention, spec, R, 1, lambda r, s: ZERO)


def like(m: Mould, empty, tables) -> Mould:
    return Mould(m.convention, m.spec, m.R, empty, tables)


# ------------------------------------------------------------------ products


def mu(a: Mould, b: Mould) -> Mould:
    a.same_shape(b)
    R = a.R
    tables = []
    ea, eb = a.empty, b.empty
    for m in range(1, R + 1):
        t = {}
        for sig in a.spec.vectors(m):
            total = ZERO
            for i in range(m + 1):
                if i == 0:
                    if not ea:
                        continue
                    fb = b.tables[m - 1][sig]
                    term = fb.scale(ea) if ea != 1 else fb
                elif i == m:
                    if not eb:
                        continue
                    fa = a.tables[m - 1][sig]
                    term = fa.scale(eb) if eb != 1 else fa
                else:
                    fa = a.tables[i - 1][sig[:i]]
                    if fa.is_zero():
                        continue
                    fb = b.shifted(sig[i:], i)
                    if fb.is_zero():
                        continue
                    term = fa * fb
                total = total + term
            t[sig] = total
        tables.append(t)
    return like(a, ea * eb, tables)


def lu_bracket(a: Mould, b: Mould) -> Mould:
    return mu(a, b) - mu(b, a)


def exp_times(a: Mould) -> Mould:
    if a.empty != 0:
        raise NotInARI("exp_times needs an ARI mould (empty component 0)")
    out = identity_mould(a.convention, a.spec, a.R)
    power = None
    for k in range(1, a.R + 1):
        power = a if power is None else mu(power, a)
        if power.valuation() > a.R:
            break
        out = out + power.scale(Fraction(1, factorial(k)))
    return out


def log_times(s: Mould) -> Mould:
    if s.empty != 1:
        raise NotInGARI("log_times needs a GARI mould (empty component 1)")
    d = s - identity_mould(s.convention, s.spec, s.R)
    out = zero_mould(s.convention, s.spec, s.R)
    power = None
    for k in range(1, s.R + 1):
        power = d if power is None else mu(power, d)
        if power.valuation() > s.R:
            break
        out = out + power.scale(Fraction((-1) ** (k - 1), k))
    return out


def inverse(m: Mould) -> Mould:
    """Two-sided inverse for the mu product, solved depth by depth."""
    if m.empty == 0:
        raise NotInGARI("mould with zero empty component is not invertible")
    inv0 = 1 / m.empty
    tables: list = []
    for r in range(1, m.R + 1):
        t = {}
        for sig in m.spec.vectors(r):
            total = ZERO
            for i in range(1, r + 1):
                fa = m.tables[i - 1][sig[:i]]
                if fa.is_zero():
                    continue
                if i == r:
                    fb = RatFun(inv0)
                else:
                    fb = shift_vars(tables[r - i - 1][sig[i:]], i)
                total = total + fa * fb
            t[sig] = total.scale(-inv0)
        tables.append(t)
    return like(m, inv0, tables)


# ------------------------------------------------------------ pari / anti


def pari(m: Mould) -> Mould:
    return m.map_entries(lambda r, s, f: -f if r % 2 else f)


def anti(m: Mould) -> Mould:
    def gen(r, sig):
        f = m.tables[r - 1][tuple(reversed(sig))]
        return subst_forms(f, tuple(LinForm.var(r + 1 - i) for i in range(1, r + 1)))

    return like(m, m.empty, [{sig: gen(r, sig) for sig in m.spec.vectors(r)} for r in range(1, m.R + 1)])


def pari_anti(m: Mould, which: str) -> Mould:
    if which == "pari":
        return pari(m)
    if which == "anti":
        return anti(m)
    if which == "compose":
        return pari(anti(m))
    raise ValueError("unknown operation %r" % which)


def truncate(m: Mould, R: int) -> Mould:
    """Same mould with fewer depths."""
    if R > m.R:
        raise DepthExceeded("cannot extend a mould past its depth")
    return Mould(m.convention, m.spec, R, m.empty, m.tables[:R])


def with_convention(m: Mould, convention: str) -> Mould:
    return Mould(convention, m.spec, m.R, m.empty, m.tables)


def random_component(rng, r: int, terms: int = 1, max_factors: int = 2, differences: bool = False) -> RatFun:
    """Sum of `terms` random c/(l_1...l_k), k <= max_factors, l among x_i and x_i+x_j
    (and x_i-x_j when differences=True).

    Sums stay sums under the permutations used by the structured generators,
    which keeps common denominators small.
    """
    total = ZERO
    kinds = 3 if differences else 2
    for _ in range(terms):
        forms = []
        for _ in range(rng.randint(1, min(r, max_factors))):
            i = rng.randint(1, r)
            j = rng.randint(1, r)
            kind = rng.randrange(kinds) if j != i else 0
            f = LinForm.var(i)
            if kind == 1:
                f = f + LinForm.var(j)
            elif kind == 2:
                f = f - LinForm.var(j)
            forms.append(f)
        c = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 1, 2, 3]))
        total = total + RatFun.linear_product_inverse(forms).scale(c)
    return total


def random_mould(convention: str, spec: GammaSpec, R: int, rng, empty=0, terms: int = 1, min_depth: int = 1) -> Mould:
    """Unstructured random mould; rng is a random.Random."""

    def gen(r, sig):
        if r < min_depth:
            return ZERO
        return random_component(rng, r, terms)

    return mould_make(convention, spec, R, empty, gen)
