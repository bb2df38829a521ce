from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from altdimap.algebra import (
    BIVARS,
    PARAMS,
    Cyclotomic6,
    ParamSeq16,
    Poly,
    check_eti_conditions,
    parse_poly,
    zeta_pow,
)
from altdimap.errors import FormatError

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
cyclo = st.builds(Cyclotomic6, fractions, fractions)


@given(cyclo, cyclo, cyclo)
def test_cyclotomic_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(cyclo)
def test_cyclotomic_inverse(a):
    if a != Cyclotomic6(0):
        assert a * a.inverse() == Cyclotomic6(1)


def test_zeta_is_a_primitive_sixth_root():
    z = Cyclotomic6.zeta()
    assert z ** 6 == Cyclotomic6(1)
    assert all(z ** k != Cyclotomic6(1) for k in range(1, 6))
    assert z * z.conjugate() == Cyclotomic6(1)
    assert z + z.conjugate() == Cyclotomic6(1)
    assert zeta_pow(-1) == z.conjugate()


def test_cyclotomic_hash_agrees_with_rationals():
    assert hash(Cyclotomic6(Fraction(3, 2))) == hash(Fraction(3, 2))
    assert Cyclotomic6(2) == 2


monomials = st.dictionaries(
    st.tuples(*[st.integers(0, 3)] * 4), st.fractions(min_value=-9, max_value=9, max_denominator=4),
    max_size=5)


@given(monomials)
def test_render_parse_round_trip(terms):
    variables = ("w", "x", "y", "z")
    p = Poly(variables, terms)
    assert parse_poly(p.render(), variables) == p


@given(monomials, monomials)
def test_poly_product_degree(t1, t2):
    variables = ("w", "x", "y", "z")
    p, q = Poly(variables, t1), Poly(variables, t2)
    if not p.is_zero() and not q.is_zero():
        assert (p * q).degree() == p.degree() + q.degree()


def test_render_is_canonical():
    p = parse_poly("c*w*z + a*w^2 + b*w*y")
    assert p.render() == "a*w^2 + b*w*y + c*w*z"
    assert parse_poly("0").render() == "0"
    assert parse_poly("-x + 1/2", BIVARS).render() == parse_poly("1/2 - x", BIVARS).render()


def test_substitute():
    p = parse_poly("x^2 + x*y", BIVARS)
    assert p.substitute({"x": 2, "y": 3}) == 10


def test_paramseq_defaults_to_symbols():
    p = ParamSeq16.symbolic()
    assert all(p.is_symbolic(n) for n in PARAMS)
    assert not p.is_numeric()


def test_paramseq_rejects_foreign_symbol():
    with pytest.raises(FormatError):
        ParamSeq16({"w": "x"})


def test_eti_conditions_detect_one_break():
    good = ParamSeq16({n: 1 for n in PARAMS} | {"a": -1, "f": -1, "h": -1, "l": -1})
    assert all(check_eti_conditions(good).values())
    bad = ParamSeq16(good.as_dict() | {"a": 5})
    assert not all(check_eti_conditions(bad).values())
