import itertools
import random

import pytest
from hypothesis import assume, given, settings
import hypothesis.strategies as st

from mouldcalc.errors import EmptyAbsorber, NotInGARI, PoleAtSubstitution
from mouldcalc.exactalg import LinForm, RatFun, parse_ratfun
from mouldcalc.flexion import (
    bijection_d1,
    bijection_dge2,
    bijection_e_to_d,
    enumerate_decompositions,
    flex,
    g_expand,
    g_expand_via_e,
    g_of_shuffle,
    g_of_star_shuffle,
    ganit_apply,
    lrflex,
    named_mould,
    pari_anti,
    pic_identity_residuals,
    transfer_direct,
    transfer_sum,
    ulflex,
    verify_g_recurrence,
    verify_gpoc_recurrence,
)
from mouldcalc.gamma import GammaSpec
from mouldcalc.mould import exp_times, identity_mould, mu, random_mould
from mouldcalc.symmetry import random_structured
from mouldcalc.words import FormalWordSum, Letter, generic_word

Z2 = GammaSpec([2])
Z3 = GammaSpec([3])
g0, g1 = Z2.elem(0), Z2.elem(1)


def L(s, i, spec=Z2):
    return Letter(spec.elem(s), LinForm.var(i))


def rand(seed, R=3, empty=0):
    return random_mould("V", Z2, R, random.Random(seed), empty=empty)


def test_flex_examples():
    w1, w2 = (L(1, 1, Z3),), (L(2, 2, Z3),)
    assert flex(w1, w2, "upper_ul") == (Letter(Z3.elem(0), LinForm.var(1)),)
    low = flex(w1, w2, "lower_lr")
    assert low == (Letter(Z3.elem(2), LinForm.var(2) - LinForm.var(1)),)
    pic = named_mould("pic", Z3, 2)
    assert pic.evaluate(low) == parse_ratfun("1/(v2-v1)")
    with pytest.raises(EmptyAbsorber):
        flex((), w2, "upper_ul")
    with pytest.raises(EmptyAbsorber):
        flex((), w2, "lower_lr")


def test_pic_fay_identity():
    pic = named_mould("pic", Z2, 2)
    a, b, c = (L(0, 1),), (L(1, 2),), (L(1, 3),)
    total = pic.evaluate(lrflex(a, b + c)) + pic.evaluate(lrflex(b, c + a)) + pic.evaluate(lrflex(c, a + b))
    assert total.is_zero()


letters = st.builds(
    lambda s, coefs: Letter(Z2.elem(s), LinForm({i + 1: c for i, c in enumerate(coefs)})),
    st.integers(0, 1),
    st.lists(st.integers(-3, 3), min_size=4, max_size=4).filter(any),
)


@settings(max_examples=40, deadline=None)
@given(letters, letters, letters, st.lists(letters, min_size=1, max_size=2), st.lists(letters, min_size=1, max_size=2))
def test_pic_identities(w1, w2, w3, omega, eta):
    forms = [w1.form, w2.form, w3.form]
    assume(len(set(forms)) == 3)
    pic = named_mould("pic", Z2, 4)
    try:
        res = pic_identity_residuals(w1, w2, w3, tuple(omega), tuple(eta), pic)
    except (ZeroDivisionError, PoleAtSubstitution):
        assume(False)  # a flexed letter landed on the zero form
    assert all(f.is_zero() for f in res.values())


def test_named_mould_examples():
    pic = named_mould("pic", Z2, 3)
    assert pic.tables[1][(g0, g1)] == parse_ratfun("1/(v1*v2)")
    poc = named_mould("poc", Z2, 3)
    assert poc.tables[0][(g1,)] == parse_ratfun("-1/v1")
    pij = named_mould("pij", Z2, 3)
    assert pij.tables[1][(g1, g1)] == parse_ratfun("1/((v1-v2)*v2)")


def test_pari_anti():
    pij, poc = named_mould("pij", Z2, 3), named_mould("poc", Z2, 3)
    assert pari_anti(pij, "compose") == poc
    m = rand(1)
    assert pari_anti(pari_anti(m, "anti"), "anti") == m
    assert pari_anti(pari_anti(m, "pari"), "pari") == m


def test_ganit_depth_two():
    b, a = rand(2, empty=1), rand(3)
    out = ganit_apply(b, a)
    for sig in Z2.vectors(2):
        w = generic_word(sig)
        w1, w2 = w[:1], w[1:]
        expected = a.evaluate(w) + b.evaluate(lrflex(w1, w2)) * a.evaluate(ulflex(w1, w2))
        assert out.tables[1][sig] == expected
    assert out.tables[0] == a.tables[0]


def test_ganit_identity_and_inverse():
    pic, poc = named_mould("pic", Z2, 3), named_mould("poc", Z2, 3)
    i = identity_mould("V", Z2, 3)
    assert ganit_apply(pic, i) == i
    m = rand(4, empty=1)
    assert ganit_apply(poc, ganit_apply(pic, m)) == m
    assert ganit_apply(pic, ganit_apply(poc, m)) == m
    with pytest.raises(NotInGARI):
        ganit_apply(rand(5), m)


def test_ganit_is_a_morphism():
    b = rand(6, empty=1)
    m, n = rand(7, empty=1), rand(8)
    assert ganit_apply(b, mu(m, n)) == mu(ganit_apply(b, m), ganit_apply(b, n))


def test_ganit_commutes_with_exp():
    pic = named_mould("pic", Z2, 3)
    a = random_structured("alternal", Z2, 3, seed=1)
    assert exp_times(ganit_apply(pic, a)) == ganit_apply(pic, exp_times(a))


def test_g_expand_low_depths():
    pic = named_mould("pic", Z2, 3)
    w = generic_word((g0, g1, g1))
    w1, w2, w3 = w[:1], w[1:2], w[2:]
    assert g_expand(pic, w1) == FormalWordSum.word(w1)
    two = FormalWordSum({w1 + w2: 1, ulflex(w1, w2): pic.evaluate(lrflex(w1, w2))})
    assert g_expand(pic, w1 + w2) == two
    three = FormalWordSum()
    three.add_term(w, RatFun(1))
    three.add_term(ulflex(w1, w2 + w3), pic.evaluate(lrflex(w1, w2 + w3)))
    three.add_term(ulflex(w1 + w2, w3), pic.evaluate(lrflex(w1 + w2, w3)))
    three.add_term(ulflex(w1, w2) + w3, pic.evaluate(lrflex(w1, w2)))
    assert g_expand(pic, w) == three
    assert len(three.terms) == 4


def test_decomposition_examples():
    a, b = L(0, 1), L(1, 2)
    assert enumerate_decompositions((a, b), 2, "D") == [((a,), (b,)), ((a, b), ())]
    assert enumerate_decompositions((), 1, "E") == [((),)]
    # E_2 of the empty word under the literal definition: only c_2..c_{t-1} must be nonempty
    assert enumerate_decompositions((), 2, "E") == [((), ())]
    assert enumerate_decompositions((), 3, "E") == []
    assert enumerate_decompositions((), 5, "E") == []


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
@pytest.mark.parametrize("t", [2, 3, 4])
def test_decomposition_partitions(n, t):
    w = tuple(L(i % 2, i + 1) for i in range(n))
    d = enumerate_decompositions(w, t, "D")
    ge2 = enumerate_decompositions(w, t, "D", ">=2")
    one = enumerate_decompositions(w, t, "D", "=1")
    assert sorted(ge2 + one) == sorted(d) and not set(ge2) & set(one)
    e = enumerate_decompositions(w, t, "E")
    with_empty_head = [x for x in e if not x[0]]
    assert sorted(x[1:] for x in with_empty_head) == sorted(enumerate_decompositions(w, t - 1, "D"))
    assert len(e) == len(with_empty_head) + len(d)
    if n >= 1:
        rest = w[1:]
        assert sorted(map(bijection_dge2, ge2)) == sorted(enumerate_decompositions(rest, t, "D"))
        assert sorted(map(bijection_d1, one)) == sorted(enumerate_decompositions(rest, t - 1, "D"))
        assert sorted(bijection_e_to_d(w[0], x) for x in enumerate_decompositions(rest, t, "E")) == sorted(d)


@pytest.mark.parametrize("sig", list(itertools.product((0, 1), repeat=3)))
def test_g_recurrences(sig):
    pic, poc = named_mould("pic", Z2, 3), named_mould("poc", Z2, 3)
    for r in (2, 3):
        w = generic_word(tuple(Z2.elem(s) for s in sig[:r]))
        assert verify_g_recurrence(w, pic)
        assert verify_gpoc_recurrence(w, poc)
        assert g_expand_via_e(pic, w) == g_expand(pic, w)


def test_intertwining_small():
    pic, poc = named_mould("pic", Z2, 3), named_mould("poc", Z2, 3)
    alpha, beta = (L(0, 1), L(1, 2)), (L(1, 3),)
    lhs, rhs = g_of_star_shuffle(pic, alpha, beta)
    assert lhs == rhs
    lhs, rhs = g_of_shuffle(poc, alpha, beta)
    assert lhs == rhs


def test_transfer_formula_small():
    pic = named_mould("pic", Z2, 3)
    m = random_structured("alternal", Z2, 3, seed=2)
    transformed = ganit_apply(pic, m)
    alpha, beta = (L(0, 1),), (L(1, 2), L(0, 3))
    assert transfer_sum(pic, m, alpha, beta, star_inside=False) == transfer_direct(transformed, alpha, beta, star_outside=True)
