import itertools
import random
from math import comb

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from mouldcalc.exactalg import LinForm, RatFun, parse_ratfun
from mouldcalc.gamma import GammaSpec
from mouldcalc.words import (
    FormalWordSum,
    Letter,
    compositions_of_word,
    sh_coeff,
    shstar_coeff,
    shuffle,
    shuffle_counts,
    shuffle_star,
    shuffle_star_sums,
    shuffle_sums,
)

Z2 = GammaSpec([2])
Z3 = GammaSpec([3])


def L(s, i, spec=Z2):
    return Letter(spec.elem(s), LinForm.var(i))


a, b, c = L(0, 1), L(1, 2), L(0, 3)


def test_shuffle_examples():
    assert shuffle((a,), (b,)) == FormalWordSum({(a, b): 1, (b, a): 1})
    assert shuffle((a,), (a,)) == FormalWordSum({(a, a): 2})
    assert shuffle((), (a, b)) == FormalWordSum({(a, b): 1})
    assert sh_coeff((a,), (b,), (a, b)) == 1
    assert sh_coeff((a,), (a,), (a, a)) == 2
    assert sh_coeff((a, b), (c,), (a, c, b)) == 1
    assert sh_coeff((a, b), (c,), (b, a, c)) == 0


def test_shuffle_star_examples():
    s, t = Z3.elem(1), Z3.elem(2)
    x = Letter(s, LinForm.var(1))
    y = Letter(t, LinForm.var(2))
    st_ = s * t
    k = parse_ratfun("1/(v1-v2)")
    expected = FormalWordSum(
        {(x, y): 1, (y, x): 1, (Letter(st_, LinForm.var(1)),): k, (Letter(st_, LinForm.var(2)),): -k}
    )
    assert shuffle_star((x,), (y,)) == expected
    assert shstar_coeff((x,), (y,), (Letter(st_, LinForm.var(1)),)) == k
    assert shstar_coeff((x,), (y,), (y, x)) == RatFun(1)
    assert shstar_coeff((x,), (y,), (Letter(s, LinForm.var(2)),)).is_zero()
    # equal head forms: the product is zero
    assert shuffle_star((x,), (Letter(t, LinForm.var(1)),)).is_zero()
    assert shuffle_star((), (x, y)) == FormalWordSum({(x, y): 1})


def random_word(rng, n, nvars=4, spec=Z2):
    return tuple(Letter(rng.choice(spec.elements), LinForm.var(rng.randint(1, nvars))) for _ in range(n))


def distinct_words(rng, lens, spec=Z2):
    vs = list(range(1, sum(lens) + 1))
    rng.shuffle(vs)
    out = []
    k = 0
    for n in lens:
        out.append(tuple(Letter(rng.choice(spec.elements), LinForm.var(vs[k + i])) for i in range(n)))
        k += n
    return out


@pytest.mark.parametrize("seed", range(12))
def test_shuffle_commutative_associative_mass(seed):
    rng = random.Random(seed)
    u, v, w = (random_word(rng, rng.randint(0, 3), nvars=2) for _ in range(3))
    assert shuffle(u, v) == shuffle(v, u)
    fu, fw = FormalWordSum.word(u), FormalWordSum.word(w)
    assert shuffle_sums(shuffle(u, v), fw) == shuffle_sums(fu, shuffle(v, w))
    assert sum(shuffle_counts(u, v).values()) == comb(len(u) + len(v), len(u))


@pytest.mark.parametrize("seed", range(12))
def test_shuffle_star_commutative(seed):
    rng = random.Random(seed)
    u, v = distinct_words(rng, [rng.randint(0, 3), rng.randint(0, 3)], spec=Z3)
    assert shuffle_star(u, v) == shuffle_star(v, u)


def test_shuffle_star_not_associative():
    # repeated forms downstream break associativity through the equal-form rule
    x, y = L(0, 1), L(1, 2)
    witness = None
    for u, v, w in itertools.product([(x,), (y,), (L(1, 1),)], repeat=3):
        left = shuffle_star_sums(shuffle_star(u, v), FormalWordSum.word(w))
        right = shuffle_star_sums(FormalWordSum.word(u), shuffle_star(v, w))
        if left != right:
            witness = (u, v, w)
            break
    assert witness is not None


def _factorization_rhs(coeff, w1, w2, alpha_parts):
    r = len(alpha_parts)
    total = None
    for p1 in compositions_of_word(w1, r):
        for p2 in compositions_of_word(w2, r):
            term = None
            for o, e, al in zip(p1, p2, alpha_parts):
                k = coeff(o, e, al)
                term = k if term is None else term * k
            total = term if total is None else total + term
    return total


@pytest.mark.parametrize("seed", range(10))
def test_sh_coefficient_factorization(seed):
    rng = random.Random(seed)
    p, q = rng.randint(0, 2), rng.randint(0, 2)
    w1, w2 = random_word(rng, p, 2), random_word(rng, q, 2)
    n = p + q
    for alpha in set(shuffle_counts(w1, w2)) | {random_word(rng, n, 2)}:
        for r in range(1, min(n, 3) + 1):
            cut = sorted(rng.sample(range(1, n), r - 1)) if n > 1 and r > 1 else []
            bounds = [0] + cut + [n]
            parts = [alpha[bounds[i]:bounds[i + 1]] for i in range(len(bounds) - 1)]
            rhs = _factorization_rhs(sh_coeff, w1, w2, parts)
            assert sh_coeff(w1, w2, alpha) == rhs


@pytest.mark.parametrize("seed", range(10))
def test_shstar_coefficient_factorization_disjoint_letters(seed):
    rng = random.Random(100 + seed)
    p, q = rng.randint(1, 2), rng.randint(1, 2)
    w1, w2 = distinct_words(rng, [p, q])
    targets = list(shuffle_star(w1, w2).terms)
    for alpha in targets:
        n = len(alpha)
        for r in range(1, min(n, 3) + 1):
            for cut in itertools.combinations(range(1, n), r - 1):
                bounds = [0] + list(cut) + [n]
                parts = [alpha[bounds[i]:bounds[i + 1]] for i in range(len(bounds) - 1)]
                rhs = _factorization_rhs(shstar_coeff, w1, w2, parts)
                assert shstar_coeff(w1, w2, alpha) == rhs


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 3), st.integers(0, 3), st.randoms(use_true_random=False))
def test_shuffle_star_total_shuffle_part(p, q, rnd):
    w1, w2 = distinct_words(rnd, [p, q])
    # words of full length carry coefficient 1 and are exactly the shuffles
    full = {w: c for w, c in shuffle_star(w1, w2).terms.items() if len(w) == p + q}
    assert full == {w: RatFun(k) for w, k in shuffle_counts(w1, w2).items()}
