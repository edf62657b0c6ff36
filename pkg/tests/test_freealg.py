from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ncg.freealg import (
    Alphabet,
    EmptyRelation,
    HomogeneityError,
    NcPoly,
    ParseError,
    factor_positions,
    is_factor,
    parse_expression,
    parse_presentation,
    print_poly,
    substitute_linear,
)
from ncg.scalars import ParamField

AB = Alphabet(["x1", "x2"])
x1, x2 = NcPoly.gen(AB, "x1"), NcPoly.gen(AB, "x2")
F1_TEXT = "x1*x2^2 - 2*x2*x1*x2 + x2^2*x1"


def w(text):
    return AB.word(text)


# -- words ----------------------------------------------------------------------


def test_is_factor_leftmost_split():
    assert is_factor(w("x1*x2^2"), w("x1*x2*x1*x2^2")) == (w("x1*x2"), ())


def test_is_factor_absent():
    assert is_factor(w("x2*x1"), w("x1*x2")) is None


def test_empty_word_divides_everything():
    u = w("x2*x1*x1")
    assert is_factor((), u) == ((), u)


@given(st.lists(st.integers(0, 1), max_size=8), st.lists(st.integers(0, 1), max_size=3))
def test_is_factor_agrees_with_scan(u, v):
    # oracle: every cut position of u checked directly
    u, v = tuple(u), tuple(v)
    hits = [i for i in range(len(u) - len(v) + 1) if u[i : i + len(v)] == v]
    assert factor_positions(v, u) == hits
    res = is_factor(v, u)
    if hits:
        assert res == (u[: hits[0]], u[hits[0] + len(v) :])
    else:
        assert res is None


# -- arithmetic -----------------------------------------------------------------


def test_commutator_times_generator():
    assert (x1 * x2 - x2 * x1) * x2 == x1 * x2 * x2 - x2 * x1 * x2


def test_cancellation_removes_terms():
    f = x1 * x2 - x1 * x2
    assert not f and len(f) == 0


coeffs = st.integers(-3, 3).map(Fraction)
words = st.lists(st.integers(0, 1), min_size=0, max_size=3).map(tuple)
polys = st.dictionaries(words, coeffs, max_size=4).map(lambda d: NcPoly(AB, d))


@given(polys, polys, polys)
def test_multiplication_associative(f, g, h):
    assert (f * g) * h == f * (g * h)


@given(polys, polys, polys)
def test_distributive(f, g, h):
    assert f * (g + h) == f * g + f * h
    assert (g + h) * f == g * f + h * f


@given(polys)
def test_print_parse_roundtrip(f):
    assert parse_expression(print_poly(f), AB) == f


def test_linear_substitution_of_f1():
    K = ParamField(["a1", "a2", "b1", "b2"])
    a1, a2, b1, b2 = K.gens()
    f1 = parse_expression(F1_TEXT, AB, K)
    X1, X2 = NcPoly.gen(AB, "x1"), NcPoly.gen(AB, "x2")
    X1, X2 = X1.map_coeffs(K), X2.map_coeffs(K)
    img = substitute_linear(f1, {"x1": X1.scale(a1) + X2.scale(a2), "x2": X1.scale(b1) + X2.scale(b2)})
    g1 = parse_expression("x1^2*x2 - 2*x1*x2*x1 + x2*x1^2", AB, K)
    expected = g1.scale(b1 * (a2 * b1 - a1 * b2)) + f1.scale(b2 * (a1 * b2 - a2 * b1))
    assert img == expected


def test_identity_substitution():
    f = parse_expression(F1_TEXT, AB)
    assert substitute_linear(f, {"x1": x1, "x2": x2}) == f


def test_substitution_rejects_nonlinear_images():
    with pytest.raises(ValueError):
        substitute_linear(x1 * x2, {"x1": x1 * x1})


# -- parsing --------------------------------------------------------------------


def test_parse_f1():
    p = parse_presentation("gens: x1:1 x2:1\nrel: " + F1_TEXT + "\n")
    f = p.relations[0]
    assert len(f) == 3
    assert f == x1 * x2 * x2 - 2 * x2 * x1 * x2 + x2 * x2 * x1


def test_parse_inhomogeneous():
    with pytest.raises(HomogeneityError, match="relation 1"):
        parse_presentation("gens: x1:1 x2:1\nrel: x1 + x2^2\n")


def test_parse_zero_relation():
    with pytest.raises(EmptyRelation):
        parse_presentation("gens: x1:1 x2:1\nrel: 0\n")


def test_parse_error_position():
    with pytest.raises(ParseError) as exc:
        parse_presentation("gens: x1:1 x2:1\nrel: x1*x3\n")
    assert exc.value.line == 2 and exc.value.column is not None


def test_parse_unknown_key():
    with pytest.raises(ParseError):
        parse_presentation("gens: x1:1\nfoo: bar\n")


def test_parse_params_and_cyclotomic_field():
    p = parse_presentation("field: Qzeta7\nparams: d\ngens: x1:1 x2:1\nrel: x1*x2 - j*d*x2*x1\n")
    assert p.parameters == ["d"]
    spec = p.specialize({"d": Fraction(1)})
    assert spec.parameters == []


def test_weighted_generators_and_multidegrees():
    p = parse_presentation("gens: x:1 z:2\nzrdeg: x=(1,0) z=(1,1)\nrel: x*z - z*x\n")
    assert p.alphabet.degrees == (1, 2)
    assert p.relations[0].degree() == 3
    assert p.zrdeg == ((1, 0), (1, 1))


def test_to_text_roundtrip():
    text = "field: Q\nparams: u\ngens: x1:1 x2:1\nrel: x1*x2^2 - u*x2^3\n"
    p = parse_presentation(text)
    q = parse_presentation(p.to_text())
    assert q.relations == p.relations
