"""Parser and renderer tests, including the parse/render round trip."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from weylkit import (
    AlgebraElement,
    AlgebraKind,
    Generator,
    IllegalGenerator,
    IndexOutOfRange,
    ParseError,
    PBWMonomial,
    normal_form,
    parse,
    render,
)

B = AlgebraKind.B
A = AlgebraKind.A

x1, d1, z = Generator.x(1), Generator.d(1), Generator.z()


def test_parse_word_transcription():
    e = parse("d1*x1 - x1*d1 - z^2", 1, B)
    assert e.terms == (
        (Fraction(1), (d1, x1)),
        (Fraction(-1), (x1, d1)),
        (Fraction(-1), (z, z)),
    )


def test_parse_repeated_generator():
    e = parse("x1*x1", 1, B)
    assert e.terms == ((Fraction(1), (x1, x1)),)


def test_parse_rational_coefficient():
    e = parse("3/2 * z * x2", 2, B)
    assert e.terms == ((Fraction(3, 2), (z, Generator.x(2))),)


def test_parse_is_case_insensitive():
    assert parse("X1*D2*Z", 2, B).terms == parse("x1*d2*z", 2, B).terms


def test_unary_minus_binds_looser_than_star():
    e = parse("-x1*d1", 1, B)
    assert e.terms == ((Fraction(-1), (x1, d1)),)


def test_parentheses_distribute():
    e = parse("(x1 + d1)*z", 1, B)
    assert e.terms == ((Fraction(1), (x1, z)), (Fraction(1), (d1, z)))


def test_power_of_sum():
    e = parse("(x1 + d1)^2", 1, B)
    assert e.terms == (
        (Fraction(1), (x1, x1)),
        (Fraction(1), (x1, d1)),
        (Fraction(1), (d1, x1)),
        (Fraction(1), (d1, d1)),
    )


def test_zero_coefficient_kept_raw():
    e = parse("0*x1", 1, B)
    assert e.terms == ((Fraction(0), (x1,)),)
    assert normal_form(e, B).is_zero()


def test_syntax_error_carries_position_and_expected():
    with pytest.raises(ParseError) as err:
        parse("x1 + * d1", 1, B)
    assert err.value.position == 5
    assert err.value.expected


def test_unknown_character_rejected():
    with pytest.raises(ParseError):
        parse("x1 & d1", 1, B)


def test_dangling_operator_rejected():
    with pytest.raises(ParseError):
        parse("x1 *", 1, B)


def test_index_out_of_range():
    with pytest.raises(IndexOutOfRange):
        parse("x3", 2, B)
    with pytest.raises(IndexOutOfRange):
        parse("x0", 2, B)


def test_zero_denominator_rejected():
    with pytest.raises(ParseError):
        parse("1/0", 1, B)


def test_z_illegal_in_weyl_algebra():
    with pytest.raises(IllegalGenerator):
        parse("z * x1", 1, A)
    # but legal everywhere else
    parse("z", 1, B)
    parse("z", 1, AlgebraKind.C)
    parse("z", 1, AlgebraKind.B_SHRIEK)


def test_render_canonical_order():
    e = normal_form(parse("z^2 + x1*d1", 1, B), B)
    assert render(e, "text") == "x1*d1 + z^2"


def test_render_zero():
    assert render(AlgebraElement.zero(B, 1), "text") == "0"
    assert normal_form(parse("0", 1, B), B).is_zero()


def test_render_json_shape():
    e = normal_form(parse("x1*d1 + z^2", 1, B), B)
    assert render(e, "json") == (
        '{"algebra": "B", "n": 1, "terms": '
        '[{"coeff": "1/1", "z": 0, "x": [1], "d": [1]}, '
        '{"coeff": "1/1", "z": 2, "x": [0], "d": [0]}]}'
    )


def test_render_coefficient_styles():
    e = AlgebraElement(
        B,
        1,
        {
            PBWMonomial(0, (1,), (0,)): Fraction(-1),
            PBWMonomial(1, (0,), (0,)): Fraction(3, 2),
            PBWMonomial(0, (0,), (0,)): Fraction(-5),
        },
    )
    assert render(e, "text") == "-x1 + 3/2*z - 5"


@st.composite
def algebra_elements(draw, kind=B, n=2):
    nterms = draw(st.integers(min_value=0, max_value=4))
    coeffs = {}
    for _ in range(nterms):
        ze = 0 if kind is A else draw(st.integers(min_value=0, max_value=3))
        xe = tuple(draw(st.integers(min_value=0, max_value=3)) for _ in range(n))
        de = tuple(draw(st.integers(min_value=0, max_value=3)) for _ in range(n))
        num = draw(st.integers(min_value=-9, max_value=9))
        den = draw(st.integers(min_value=1, max_value=9))
        c = Fraction(num, den)
        if c:
            coeffs[PBWMonomial(ze, xe, de)] = c
    return AlgebraElement(kind, n, coeffs)


@settings(deadline=None)
@given(algebra_elements())
def test_parse_render_roundtrip(e):
    assert normal_form(parse(render(e, "text"), 2, B), B) == e


@settings(deadline=None)
@given(algebra_elements(kind=A))
def test_parse_render_roundtrip_weyl(e):
    assert normal_form(parse(render(e, "text"), 2, A), A) == e


@settings(deadline=None)
@given(algebra_elements(), algebra_elements())
def test_render_injective(e1, e2):
    if e1 != e2:
        assert render(e1, "text") != render(e2, "text")
        assert render(e1, "json") != render(e2, "json")
