import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from mouldcalc.errors import ParseError, VariableEscape
from mouldcalc.exactalg import LinForm
from mouldcalc.flexion import named_mould
from mouldcalc.gamma import GammaSpec
from mouldcalc.mould import random_mould
from mouldcalc.mouldio import (
    parse_linform,
    parse_mould,
    parse_word,
    read_mould,
    render_mould,
    render_sigmas,
    render_word_literal,
    write_mould,
)
from mouldcalc.symmetry import random_structured
from mouldcalc.words import Letter

Z2 = GammaSpec([2])
Z2Z3 = GammaSpec([2, 3])

PIC2 = """mould convention=V group=z2 depth=2 empty=1
1 (0) : 1/x1
1 (1) : 1/x1
2 (0,0) : 1/(x1*x2)
2 (0,1) : 1/(x1*x2)
2 (1,0) : 1/(x1*x2)
2 (1,1) : 1/(x1*x2)
"""


def test_render_pic_golden():
    assert render_mould(named_mould("pic", Z2, 2)) == PIC2


def test_parse_ignores_comments_and_blank_lines():
    text = "# pic at depth 2\n\n" + PIC2.replace("1 (1) :", "\n1 (1) :")
    assert parse_mould(text) == named_mould("pic", Z2, 2)


@pytest.mark.parametrize("name", ["A", "paj", "C", "pic", "pij", "poc"])
def test_named_round_trip(name):
    m = named_mould(name, Z2Z3, 3)
    text = render_mould(m)
    back = parse_mould(text)
    assert back == m
    assert render_mould(back) == text


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from(["U", "V"]), st.fractions(max_denominator=5))
def test_random_round_trip(seed, conv, empty):
    m = random_mould(conv, Z2, 3, random.Random(seed), empty=empty, terms=2)
    text = render_mould(m)
    assert render_mould(parse_mould(text)) == text
    assert parse_mould(text) == m


def test_structured_round_trip(tmp_path):
    m = random_structured("symmetril", Z2, 3, seed=5)
    path = tmp_path / "m.mould"
    write_mould(m, str(path))
    assert read_mould(str(path)) == m
    assert path.read_bytes() == render_mould(m).encode()


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("", "empty mould file"),
        ("mould group=z2 depth=1 empty=0\n1 (0) : 1\n1 (1) : 1\n", "missing convention"),
        ("mould convention=W group=z2 depth=1 empty=0\n", "convention must be"),
        (PIC2 + "2 (1,1) : 1\n", "line 8: duplicate entry"),
        (PIC2.replace("2 (1,1) : 1/(x1*x2)\n", ""), "missing entry 2 (1,1)"),
        (PIC2.replace("2 (0,1) :", "3 (0,1) :"), "line 5: depth 3 out of range"),
        (PIC2.replace("2 (0,1) :", "2 (0) :"), "line 5: sigma vector has length 1"),
        (PIC2.replace("2 (0,1) :", "2 (0,2) :"), "out of range"),
        (PIC2.replace("1 (0) : 1/x1", "1 (0) : 1/(x1+)"), "line 2"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError) as exc:
        parse_mould(text, source="m.mould")
    assert fragment in str(exc.value)


def test_ratfun_error_has_column():
    with pytest.raises(ParseError) as exc:
        parse_mould(PIC2.replace("1 (0) : 1/x1", "1 (0) : 1/(x1+)"))
    assert exc.value.line == 2 and exc.value.column is not None


def test_variable_escape():
    with pytest.raises(VariableEscape):
        parse_mould(PIC2.replace("1 (0) : 1/x1", "1 (0) : 1/x2"))


def test_word_literals():
    w = parse_word("[(0|v1),(1|v2)]", Z2)
    assert w == (Letter(Z2.elem(0), LinForm.var(1)), Letter(Z2.elem(1), LinForm.var(2)))
    assert render_word_literal(w) == "[(0|v1),(1|v2)]"
    assert parse_word("[]", Z2) == ()
    w = parse_word("[((1,2)|v1-v2)]", Z2Z3)
    assert w == (Letter(Z2Z3.elem(1, 2), LinForm.var(1) - LinForm.var(2)),)
    assert parse_word(render_word_literal(w), Z2Z3) == w
    for bad in ("(0|v1)", "[(0,v1)]", "[(2|v1)]", "[(0|v0)]"):
        with pytest.raises(ParseError):
            parse_word(bad, Z2)


def test_linforms():
    assert parse_linform("v1-2*v2+3v3") == LinForm({1: 1, 2: -2, 3: 3})
    assert parse_linform("0") == LinForm({})
    assert parse_linform("-x2") == LinForm({2: -1})
    for bad in ("", "v1 v2", "2", "v1+"):
        with pytest.raises(ParseError):
            parse_linform(bad)


def test_render_sigmas():
    assert render_sigmas((Z2.elem(1), Z2.elem(0))) == "(1,0)"
    assert render_sigmas((Z2Z3.elem(1, 2),)) == "((1,2))"
