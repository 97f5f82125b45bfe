"""arit, preari, expari and the Ex / C coefficient families (U convention)."""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import ConventionMismatch, NotInARI, NotInGARI, PoleAtSubstitution
from .exactalg.ratfun import ZERO
from .flexion import u_lower, u_upper_first, u_upper_last
from .mould import Mould, identity_mould, like, mu, zero_mould
from .words import generic_word, shuffle_counts

# ---------------------------------------------------------------------- arit


def arit_apply(b: Mould, a: Mould, flipped: bool = False) -> Mould:
    """arit(B)(A)(w) = sum_{w=abc, b,c nonempty} A(a.(b)c) B(b measured from c_1)
                     - sum_{w=abc, a,b nonempty} A(a(b).c) B(b measured from a_last).

    (b)c: the first letter of c absorbs the u-sum of b; a(b): the last letter
    of a absorbs it.  flipped=True turns the minus into a plus; it exists only
    as a negative control and must break alternality preservation.
    """
    if a.convention != "U" or b.convention != "U":
        raise ConventionMismatch("arit works in the U convention")
    b.same_shape(a)
    if b.empty != 0:
        raise NotInARI("arit needs B with empty component 0")
    sign = 1 if flipped else -1
    tables = []
    for r in range(1, a.R + 1):
        t = {}
        for sig in a.spec.vectors(r):
            w = generic_word(sig)
            total = ZERO
            for i in range(r + 1):
                for j in range(i + 1, r + 1):
                    pa, pb, pc = w[:i], w[i:j], w[j:]
                    if pc:
                        vb = b.evaluate(u_lower(pb, pc[0]))
                        if not vb.is_zero():
                            va = a.evaluate(pa + u_upper_first(pb, pc))
                            if not va.is_zero():
                                total = total + va * vb
                    if pa:
                        vb = b.evaluate(u_lower(pb, pa[-1]))
                        if not vb.is_zero():
                            va = a.evaluate(u_upper_last(pa, pb) + pc)
                            if not va.is_zero():
                                total = total + (va * vb).scale(sign)
            t[sig] = total
        tables.append(t)
    return like(a, 0, tables)


def arit_power(b: Mould, a: Mould, k: int, flipped: bool = False) -> Mould:
    out = a
    for _ in range(k):
        out = arit_apply(b, out, flipped)
    return out


# -------------------------------------------------------------------- preari


def preari(a: Mould, b: Mould, flipped: bool = False) -> Mould:
    """arit(B)(A) + A x B."""
    return arit_apply(b, a, flipped) + mu(a, b)


def preari_k(m: Mould, k: int, flipped: bool = False) -> Mould:
    out = identity_mould(m.convention, m.spec, m.R)
    for _ in range(k):
        out = preari(out, m, flipped)
    return out


def expari(m: Mould, flipped: bool = False) -> Mould:
    if m.empty != 0:
        raise NotInARI("expari needs an ARI mould (empty component 0)")
    out = identity_mould(m.convention, m.spec, m.R)
    p = out
    for k in range(1, m.R + 1):
        p = preari(p, m, flipped)
        out = out + p.scale(Fraction(1, factorial(k)))
    return out


def logari(s: Mould, flipped: bool = False) -> Mould:
    """The ARI mould A with expari(A) = S, solved depth by depth.

    expari(A) at depth r is A at depth r plus terms built from lower depths
    of A only, so each depth is one subtraction.
    """
    if s.empty != 1:
        raise NotInGARI("logari needs a GARI mould (empty component 1)")
    tables = [{sig: ZERO for sig in t} for t in s.tables]
    for r in range(1, s.R + 1):
        guess = like(s, 0, tables)
        e = expari(guess, flipped)
        tables[r - 1] = {sig: f - e.tables[r - 1][sig] for sig, f in s.tables[r - 1].items()}
    return like(s, 0, tables)


# --------------------------------------------------------- coefficient maps


def compositions(k: int):
    """All compositions of k in lexicographic order."""
    if k == 0:
        yield ()
        return
    for first in range(1, k + 1):
        for rest in compositions(k - first):
            yield (first,) + rest


def compositions_upto(n: int):
    for k in range(1, n + 1):
        yield from compositions(k)


def ex_coeff(c) -> Fraction:
    """1/((n_1-1)!...(n_r-1)!) * 1/((n_1+...+n_r)(n_2+...+n_r)...n_r)."""
    c = tuple(int(x) for x in c)
    if any(x < 1 for x in c):
        raise ValueError("composition parts must be positive")
    den = 1
    tail = 0
    for x in reversed(c):
        tail += x
        den *= factorial(x - 1) * tail
    return Fraction(1, den)


@lru_cache(maxsize=None)
def c_coeff(c: tuple) -> Fraction:
    """C by its recurrence, C(1) = 1; parts equal to 0 give 0."""
    c = tuple(c)
    if not c or any(x < 0 for x in c):
        raise ValueError("bad composition %r" % (c,))
    if any(x == 0 for x in c):
        return Fraction(0)
    if c == (1,):
        return Fraction(1)
    if len(c) == 1:
        return c_coeff((c[0] - 1,)) if c[0] > 1 else Fraction(0)
    total = Fraction(0)
    for i in range(len(c)):
        total += c_coeff(c[:i] + (c[i] - 1,) + c[i + 1:])
    if c[-1] == 1:
        total += c_coeff(c[:-1])
    return total


def is_symmetral_family(f, max_weight: int):
    """(True, None) or (False, (m, n, lhs, rhs)) for the first failing pair."""
    if max_weight < 2:
        raise ValueError("max_weight must be >= 2")
    comps = list(compositions_upto(max_weight - 1))
    for m in comps:
        for n in comps:
            if sum(m) + sum(n) > max_weight:
                continue
            lhs = sum((k * f(w) for w, k in shuffle_counts(m, n).items()), Fraction(0))
            rhs = f(m) * f(n)
            if lhs != rhs:
                return False, (m, n, lhs, rhs)
    return True, None


# ----------------------------------------------------------------- expansion


def arit_family(a: Mould, flipped: bool = False) -> list:
    """[A_1, ..., A_R] with A_m = arit(A)^{m-1}(A)."""
    out = [a]
    for _ in range(1, a.R):
        out.append(arit_apply(a, out[-1], flipped))
    return out


def product_basis(a: Mould, flipped: bool = False) -> dict:
    """{composition: A_{m_1} x ... x A_{m_r}} for total weight <= R."""
    fam = arit_family(a, flipped)
    basis: dict = {}
    for m in compositions_upto(a.R):
        if len(m) == 1:
            basis[m] = fam[m[0] - 1]
        else:
            basis[m] = mu(basis[m[:-1]], fam[m[-1] - 1])
    return basis


def expari_expansion(m: Mould, flipped: bool = False) -> Mould:
    if m.empty != 0:
        raise NotInARI("expari needs an ARI mould (empty component 0)")
    out = identity_mould(m.convention, m.spec, m.R)
    for comp, prod in product_basis(m, flipped).items():
        out = out + prod.scale(ex_coeff(comp))
    return out


# ------------------------------------------------- mould-independence of C


def _solve(rows, rhs):
    """Least-structure exact solve; returns None when the system is rank deficient."""
    n = len(rows[0]) if rows else 0
    aug = [list(r) + [v] for r, v in zip(rows, rhs)]
    piv_rows = []
    row = 0
    for col in range(n):
        p = next((i for i in range(row, len(aug)) if aug[i][col] != 0), None)
        if p is None:
            return None
        aug[row], aug[p] = aug[p], aug[row]
        pv = aug[row][col]
        aug[row] = [x / pv for x in aug[row]]
        for i in range(len(aug)):
            if i != row and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[row])]
        piv_rows.append(row)
        row += 1
    # leftover rows must be consistent
    for i in range(row, len(aug)):
        if aug[i][-1] != 0:
            return None
    return [aug[i][-1] for i in piv_rows]


def solve_preari_coefficients(m: Mould, k: int, seed: int = 0, flipped: bool = False):
    """Fit preari_k(M) = sum_{|c|=k} x_c A_{c_1} x ... x A_{c_r}.

    Linear equations come from evaluating every component at random rational
    points; the fitted x_c are then confirmed by an exact symbolic comparison.
    Returns ({composition: Fraction}, exact_ok) or (None, False) if the basis
    is degenerate for this mould.
    """
    rng = random.Random(seed)
    comps = list(compositions(k))
    basis = product_basis(m, flipped)
    target = preari_k(m, k, flipped)
    rows, rhs = [], []
    for r in range(1, m.R + 1):
        for sig in m.spec.vectors(r):
            for _ in range(len(comps) + 2):
                while True:
                    pt = {i: Fraction(rng.randint(-50, 50), rng.randint(1, 30)) for i in range(1, r + 1)}
                    try:
                        row = [basis[c].tables[r - 1][sig].eval_at(pt) for c in comps]
                        val = target.tables[r - 1][sig].eval_at(pt)
                    except (PoleAtSubstitution, ZeroDivisionError):
                        continue
                    break
                rows.append(row)
                rhs.append(val)
    sol = _solve(rows, rhs)
    if sol is None:
        return None, False
    coeffs = dict(zip(comps, sol))
    recon = zero_mould(m.convention, m.spec, m.R)
    for c, x in coeffs.items():
        recon = recon + basis[c].scale(x)
    return coeffs, recon == target


__all__ = [
    "arit_apply",
    "arit_family",
    "arit_power",
    "c_coeff",
    "compositions",
    "compositions_upto",
    "ex_coeff",
    "expari",
    "expari_expansion",
    "is_symmetral_family",
    "logari",
    "preari",
    "preari_k",
    "product_basis",
    "solve_preari_coefficients",
]
