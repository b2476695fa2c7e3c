from fractions import Fraction
from itertools import islice, product
from math import inf

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from perfect_complexes.errors import (
    NotAUnitError,
    ParseError,
    RingMismatchError,
    UnsupportedRingError,
)
from perfect_complexes.parsers import parse_ring
from perfect_complexes.rings import (
    Matrix,
    MaximalIdealFiltration,
    RingDescriptor,
    RingElement,
    RingKind,
    leading_form,
    matrix_rank,
)

ZZ = RingDescriptor.integers()
QQ = RingDescriptor.rationals()
GF7 = RingDescriptor.prime_field(7)
LOCAL2 = parse_ring("q-local:2")


def el(ring, text):
    return RingElement.parse(ring, text)


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50))
def test_prime_field_ring_axioms(a, b, c):
    x, y, z = (RingElement.of(GF7, v) for v in (a, b, c))
    assert x + y == y + x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == 0


@given(st.integers(-20, 20), st.integers(-20, 20), st.integers(-20, 20))
def test_localized_polynomial_ring_axioms(a, b, c):
    x = RingElement.variable(LOCAL2, 0)
    y = RingElement.variable(LOCAL2, 1)
    u = x * a + 1
    v = y * b - x
    w = x * y * c + 3
    assert (u * v) * w == u * (v * w)
    assert u * (v + w) == u * v + u * w


@given(st.integers(-40, 40).filter(bool), st.integers(-40, 40).filter(bool))
def test_p_adic_valuation_is_multiplicative(a, b):
    ring = parse_ring("int-local:3")
    x, y = RingElement.of(ring, a), RingElement.of(ring, b)
    assert (x * y).valuation() == x.valuation() + y.valuation()


def test_integer_units_and_inverse():
    assert RingElement.of(ZZ, -1).is_unit()
    assert not RingElement.of(ZZ, 2).is_unit()
    with pytest.raises(NotAUnitError):
        RingElement.of(ZZ, 2).inverse()


def test_localized_integers_accept_denominators_prime_to_p():
    ring = parse_ring("int-local:3")
    half = RingElement.of(ring, Fraction(1, 2))
    assert half.is_unit()
    assert half.inverse() == 2
    with pytest.raises(ValueError):
        RingElement.of(ring, Fraction(1, 3))


def test_localized_fraction_units_and_valuation():
    unit = el(LOCAL2, "(1+x)/(1-y)")
    assert unit.is_unit()
    assert unit * unit.inverse() == 1
    assert el(LOCAL2, "x^2*y - x*y^3").valuation() == 3
    assert RingElement.zero(LOCAL2).valuation() == inf
    assert el(LOCAL2, "3 + x").residue() == RingElement.of(QQ, 3)


def test_localized_denominator_is_normalised_to_constant_term_one():
    a = el(LOCAL2, "x/(2 - 2*y)")
    num, den = a.value
    assert den.const() == 1
    assert a == el(LOCAL2, "(x/2)/(1-y)")


def test_parse_rejects_non_units_in_denominator():
    with pytest.raises(ParseError):
        el(LOCAL2, "1/x")


def test_format_uses_human_syntax():
    assert str(el(LOCAL2, "x^2*y - 3/2")) in {"x^2*y - 3/2", "-3/2 + x^2*y"}
    assert str(el(parse_ring("gf:5[x]"), "x^2 + 6")) == "x^2 + 1"


def test_canonical_associates():
    assert RingElement.of(ZZ, -6).canonical() == 6
    poly = parse_ring("q[x]")
    assert el(poly, "2*x + 4").canonical() == el(poly, "x + 2")
    dvr = parse_ring("q-local:1")
    assert el(dvr, "x^2 + x^3").canonical() == el(dvr, "x^2")


def test_mixed_rings_are_rejected():
    with pytest.raises(RingMismatchError):
        RingElement.of(ZZ, 1) + RingElement.of(GF7, 1)


@pytest.mark.parametrize("ring_text", ["int", "q", "gf:7", "q[x]", "gf:5[x]"])
def test_valuation_requires_a_localized_ring(ring_text):
    with pytest.raises(UnsupportedRingError):
        RingElement.of(parse_ring(ring_text), 4).valuation()
    assert RingElement.of(parse_ring("int-local:2"), 4).valuation() == 2


def test_descriptor_capabilities():
    assert parse_ring("q").is_field
    assert parse_ring("int").is_pid and not parse_ring("int").is_local
    assert parse_ring("int-local:5").is_dvr
    assert parse_ring("q-local:1").supports_smith_form
    assert not parse_ring("q-local:2").supports_smith_form
    assert parse_ring("gf:3-local:2").residue_field == RingDescriptor.prime_field(3)
    assert str(parse_ring("gf:5[x]")) == "gf:5[x]"


RING_TEXTS = ["int", "q", "gf:5", "q[x]", "gf:2[x]", "q-local:2", "int-local:3"]


@pytest.mark.parametrize("text", RING_TEXTS)
def test_ring_grammar_round_trips_through_str(text):
    assert str(parse_ring(text)) == text


@pytest.mark.parametrize("text", ["gf:4", "zz", "q-local:0", "int-local:x"])
def test_ring_grammar_rejects_bad_input(text):
    with pytest.raises(ParseError):
        parse_ring(text)


def test_leading_form_reads_the_degree_s_part():
    filt = MaximalIdealFiltration.build(LOCAL2, 2)
    assert filt.dimension == 3
    form = leading_form(el(LOCAL2, "2*x*y - y^2 + x^3"), 2, filt)
    assert [str(v) for v in form] == ["0", "2", "-1"]


@given(st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5))
def test_leading_form_is_additive(a, b, c, d):
    filt = MaximalIdealFiltration.build(LOCAL2, 1)
    x = RingElement.variable(LOCAL2, 0)
    y = RingElement.variable(LOCAL2, 1)
    u = x * a + y * b + x * y
    v = x * c + y * d
    total = [p + q for p, q in zip(filt.leading_form(u), filt.leading_form(v))]
    assert list(filt.leading_form(u + v)) == total


def test_matrix_rank_over_a_field():
    m = Matrix.from_rows(QQ, [[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert matrix_rank(m) == 2


ELEMENT_RING_TEXTS = [
    "int",
    "q",
    "gf:7",
    "q[x]",
    "gf:5[x]",
    "q-local:1",
    "q-local:2",
    "gf:3-local:2",
    "int-local:3",
]
coefficient_lists = st.lists(st.integers(-6, 6), max_size=5)


def monomial_sum(ring, coefficients):
    xs = [RingElement.variable(ring, i) for i in range(ring.num_vars)]
    total = RingElement.zero(ring)
    exponents = product(range(3), repeat=len(xs))
    for c, exps in zip(coefficients, islice(exponents, len(coefficients))):
        term = RingElement.of(ring, c)
        for x, e in zip(xs, exps):
            term = term * x**e
        total = total + term
    return total


@st.composite
def elements(draw, ring):
    if ring.is_polynomial:
        value = monomial_sum(ring, draw(coefficient_lists))
        if ring.kind is RingKind.LOCALIZED_POLY:
            # no constant term beyond the leading 1, so the denominator is a unit
            den = 1 + monomial_sum(ring, [0] + draw(coefficient_lists))
            value = value * den.inverse()
        return value
    numerator = draw(st.integers(-60, 60))
    if ring.kind is RingKind.RATIONALS:
        return RingElement.of(ring, Fraction(numerator, draw(st.integers(1, 12))))
    if ring.kind is RingKind.LOCALIZED_INTEGERS:
        denominator = ring.prime * draw(st.integers(0, 6)) + 1
        return RingElement.of(ring, Fraction(numerator, denominator))
    return RingElement.of(ring, numerator)


@pytest.mark.parametrize("ring_text", ELEMENT_RING_TEXTS)
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_text_form_round_trips(ring_text, data):
    ring = parse_ring(ring_text)
    a = data.draw(elements(ring))
    assert RingElement.parse(ring, str(a)) == a
    assert RingElement.from_json(ring, a.to_json()) == a
