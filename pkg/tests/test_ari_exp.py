import random
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from mouldcalc.ari_exp import (
    arit_apply,
    c_coeff,
    compositions,
    compositions_upto,
    ex_coeff,
    expari,
    expari_expansion,
    is_symmetral_family,
    logari,
    preari_k,
    solve_preari_coefficients,
)
from mouldcalc.errors import ConventionMismatch, NotInARI, NotInGARI
from mouldcalc.gamma import GammaSpec
from mouldcalc.mould import identity_mould, mu, random_mould, zero_mould
from mouldcalc.symmetry import check_symmetry, random_structured
from mouldcalc.words import shuffle_counts

Z1 = GammaSpec([1])
Z2 = GammaSpec([2])


def rand(seed, R=3, empty=0, spec=Z2):
    return random_mould("U", spec, R, random.Random(seed), empty=empty)


def alternal(seed, R=3):
    return random_structured("alternal", Z2, R, seed, "U")


def test_arit_kills_the_unit():
    b = rand(1)
    assert arit_apply(b, identity_mould("U", Z2, 3)).is_zero()


def test_arit_requirements():
    with pytest.raises(NotInARI):
        arit_apply(rand(2, empty=1), rand(3))
    with pytest.raises(ConventionMismatch):
        arit_apply(rand(2), random_mould("V", Z2, 3, random.Random(0)))


def test_arit_derivation_law():
    b = rand(4)
    a1, a2 = rand(5, empty=1), rand(6, empty=2)
    lhs = arit_apply(b, mu(a1, a2))
    rhs = mu(arit_apply(b, a1), a2) + mu(a1, arit_apply(b, a2))
    assert lhs == rhs


def test_arit_preserves_alternality():
    out = arit_apply(alternal(1), alternal(2))
    assert out.empty == 0
    assert check_symmetry(out, "alternal").holds


def test_flipped_arit_breaks_alternality():
    out = arit_apply(alternal(1), alternal(2), flipped=True)
    assert not check_symmetry(out, "alternal").holds


def test_preari_low_powers():
    m = rand(7)
    assert preari_k(m, 0) == identity_mould("U", Z2, 3)
    assert preari_k(m, 1) == m
    p2 = preari_k(m, 2)
    assert all(f.is_zero() for f in p2.tables[0].values())
    assert p2.empty == 0


def test_expari_examples():
    assert expari(zero_mould("U", Z2, 3)) == identity_mould("U", Z2, 3)
    a = rand(8)
    assert expari(a).tables[0] == a.tables[0]
    with pytest.raises(NotInARI):
        expari(rand(9, empty=1))


def test_expari_expansion_examples():
    assert expari_expansion(zero_mould("U", Z2, 3)) == identity_mould("U", Z2, 3)
    a = rand(10, R=2, spec=Z1)
    a2 = arit_apply(a, a)
    depth_two = a + a2.scale(ex_coeff((2,))) + mu(a, a).scale(ex_coeff((1, 1)))
    assert expari_expansion(a).tables[1] == depth_two.tables[1]
    b = alternal(3)
    assert expari_expansion(b) == expari(b)


def test_expari_of_alternal_is_symmetral_and_logari_inverts():
    a = alternal(4)
    s = expari(a)
    assert check_symmetry(s, "symmetral").holds
    back = logari(s)
    assert back == a
    assert check_symmetry(back, "alternal").holds
    with pytest.raises(NotInGARI):
        logari(a)


def test_ex_coefficients():
    for m in range(1, 7):
        assert ex_coeff((m,)) == Fraction(1, factorial(m))
    assert ex_coeff((1, 1)) == Fraction(1, 2)
    assert ex_coeff((2, 1)) == Fraction(1, 3)
    with pytest.raises(ValueError):
        ex_coeff((0, 1))


def test_c_coefficients():
    for m in range(1, 7):
        assert c_coeff((m,)) == 1
    assert c_coeff((1, 1)) == 1
    assert c_coeff((2, 1)) == 2
    for c in compositions_upto(6):
        assert c_coeff(c) == factorial(sum(c)) * ex_coeff(c)


def test_compositions():
    assert list(compositions(3)) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert len(list(compositions_upto(6))) == 2**6 - 1


def test_symmetral_families():
    ok, _ = is_symmetral_family(ex_coeff, 6)
    assert ok
    assert 2 * ex_coeff((1, 1)) == ex_coeff((1,)) ** 2
    ok, witness = is_symmetral_family(lambda c: Fraction(1), 4)
    assert not ok
    m, n, lhs, rhs = witness
    assert (m, n, lhs, rhs) == ((1,), (1,), 2, 1)


def test_c_coefficients_do_not_depend_on_the_mould():
    fits = []
    for seed in (1, 2):
        coeffs, exact = solve_preari_coefficients(alternal(seed), 3, seed=seed)
        assert exact
        fits.append(coeffs)
    assert fits[0] == fits[1] == {c: c_coeff(c) for c in compositions(3)}


@settings(max_examples=30, deadline=None)
@given(
    st.lists(st.integers(1, 3), min_size=1, max_size=3),
    st.lists(st.integers(1, 3), min_size=1, max_size=3),
)
def test_ex_shuffle_multiplicative(m, n):
    lhs = sum((k * ex_coeff(w) for w, k in shuffle_counts(tuple(m), tuple(n)).items()), Fraction(0))
    assert lhs == ex_coeff(tuple(m)) * ex_coeff(tuple(n))
