import random

import pytest

from mouldcalc.errors import ConventionMismatch, DepthExceeded
from mouldcalc.exactalg import LinForm, parse_ratfun
from mouldcalc.exactalg.ratfun import shift_vars, subst_forms
from mouldcalc.flexion import named_mould
from mouldcalc.gamma import GammaSpec
from mouldcalc.mould import exp_times, identity_mould, log_times, lu_bracket, mu, random_mould
from mouldcalc.symmetry import (
    check_symmetry,
    depth_one_mould,
    dimould_mu,
    dimould_unit,
    random_structured,
    sh_map,
    shstar_map,
    tensor,
)

Z2 = GammaSpec([2])
g0, g1 = Z2.elem(0), Z2.elem(1)


def rand(seed, R=3, empty=0):
    return random_mould("V", Z2, R, random.Random(seed), empty=empty)


def test_sh_and_shstar_of_identity():
    i = identity_mould("V", Z2, 3)
    assert sh_map(i) == dimould_unit("V", Z2, 3)
    assert shstar_map(i) == dimould_unit("V", Z2, 3)
    assert tensor(i, i) == dimould_unit("V", Z2, 3)


def test_sh_entries():
    m = rand(1)
    d = sh_map(m)
    assert d.entry(2, 0, (g0, g1)) == m.component((g0, g1))
    # (w1; w2) with w1 = (g0|x1), w2 = (g1|x2): both orders of the two letters
    expected = m.component((g0, g1)) + _swap(m.component((g1, g0)))
    assert d.entry(1, 1, (g0, g1)) == expected


def _swap(f):
    return subst_forms(f, (LinForm.var(2), LinForm.var(1)))


def test_shstar_entries_of_pic():
    pic = named_mould("pic", Z2, 3)
    d = shstar_map(pic)
    assert d.entry(1, 1, (g0, g1)) == parse_ratfun("1/(x1*x2)")
    assert d.entry(2, 0, (g1, g1)) == pic.component((g1, g1))
    with pytest.raises(ConventionMismatch):
        shstar_map(named_mould("paj", Z2, 2))


def test_tensor_entries():
    m, n = rand(2), rand(3)
    i = identity_mould("V", Z2, 3)
    assert tensor(m, i).entry(2, 0, (g1, g0)) == m.component((g1, g0))
    assert tensor(m, n).entry(1, 2, (g0, g1, g1)) == m.component((g0,)) * shift_vars(n.component((g1, g1)), 1)


def test_dimould_unit_and_tensor_law():
    m1, n1, m2, n2 = rand(4, empty=1), rand(5), rand(6, empty=2), rand(7, empty=1)
    u = dimould_unit("V", Z2, 3)
    t = tensor(m1, n1)
    assert dimould_mu(u, t) == t and dimould_mu(t, u) == t
    assert dimould_mu(tensor(m1, n1), tensor(m2, n2)) == tensor(mu(m1, m2), mu(n1, n2))


def test_sh_maps_are_homomorphisms():
    m, n = rand(8, empty=1), rand(9)
    assert sh_map(mu(m, n)) == dimould_mu(sh_map(m), sh_map(n))
    assert shstar_map(mu(m, n)) == dimould_mu(shstar_map(m), shstar_map(n))


@pytest.mark.parametrize(
    "name,kind",
    [("A", "alternal"), ("paj", "symmetral"), ("C", "alternil"), ("pic", "symmetril"), ("pij", "symmetral")],
)
@pytest.mark.parametrize("route", ["direct", "characterization"])
def test_example_moulds(name, kind, route):
    assert check_symmetry(named_mould(name, Z2, 4), kind, route=route).holds


def test_pic_is_not_symmetral():
    res = check_symmetry(named_mould("pic", Z2, 4), "symmetral")
    assert not res.holds
    w = res.witness
    assert (w.p, w.q) == (1, 1)
    # Sh gives pic(x1,x2) + pic(x2,x1) = 2/(x1 x2) against pic(x1) pic(x2)
    assert w.residual == parse_ratfun("1/(x1*x2)")
    assert not check_symmetry(named_mould("pic", Z2, 4), "symmetral", route="characterization").holds


def test_membership_is_part_of_the_check():
    a = named_mould("A", Z2, 3)
    assert not check_symmetry(a.map_entries(lambda r, s, f: f, empty=1), "alternal").holds
    with pytest.raises(DepthExceeded):
        check_symmetry(a, "alternal", max_depth=5)


@pytest.mark.parametrize("kind", ["alternal", "symmetral", "alternil", "symmetril"])
def test_random_structured_self_check(kind):
    m = random_structured(kind, Z2, 3, seed=11)
    assert check_symmetry(m, kind).holds
    assert check_symmetry(m, kind, route="characterization").holds
    assert m == random_structured(kind, Z2, 3, seed=11)


def test_exp_log_correspondence():
    a = random_structured("alternal", Z2, 3, seed=3)
    assert check_symmetry(exp_times(a), "symmetral").holds
    il = random_structured("alternil", Z2, 3, seed=3)
    assert check_symmetry(exp_times(il), "symmetril").holds
    assert log_times(exp_times(il)) == il


def test_depth_one_supported_is_alternal():
    m = depth_one_mould("V", Z2, 3, random.Random(0))
    assert check_symmetry(m, "alternal").holds


def test_closure_small():
    a, b = (random_structured("alternal", Z2, 3, seed=s) for s in (1, 2))
    assert check_symmetry(lu_bracket(a, b), "alternal").holds
    s, t = (random_structured("symmetral", Z2, 3, seed=s) for s in (1, 2))
    assert check_symmetry(mu(s, t), "symmetral").holds


def test_random_mould_is_not_alternal():
    res = check_symmetry(rand(12), "alternal")
    assert not res.holds and res.witness.p >= 1 and res.witness.q >= 1
