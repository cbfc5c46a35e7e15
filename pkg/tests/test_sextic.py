"""Parsing of equations over P(1,1,2,3) and of plain binary forms."""

from fractions import Fraction

import pytest

from delpezzo.errors import (
    EquationError,
    NotHomogeneousError,
    UnknownVariableError,
)
from delpezzo.forms import BinaryForm
from delpezzo.sextic import parse_binary_form, parse_polynomial, parse_sextic


def form(text, degree):
    return parse_binary_form(text, degree)


def test_parse_pure_short_form():
    s = parse_sextic("w^2 + z^3 + x^5*y")
    assert s.c_w2 == 1
    assert s.c_z3 == 1
    assert s.c_0 == form("x^5*y", 6)
    assert s.c_wz.is_zero and s.c_w.is_zero and s.c_z2.is_zero and s.c_z.is_zero


def test_parse_expanded_product():
    s = parse_sextic("w^2 - z*(z+x*y)*(z+2*x*y)")
    assert s.c_w2 == 1
    assert s.c_z3 == -1
    assert s.c_z2 == form("-3*x*y", 2)
    assert s.c_z == form("-2*x^2*y^2", 4)
    assert s.c_0.is_zero


def test_parse_equation_with_equals_sign():
    left = parse_sextic("w^2 = z^3 + x^6")
    assert left.c_w2 == 1 and left.c_z3 == -1
    assert left.c_0 == form("-x^6", 6)


def test_wrong_weighted_degree_is_rejected():
    with pytest.raises(NotHomogeneousError, match="z\\^2"):
        parse_sextic("w^2 + z^2")
    with pytest.raises(NotHomogeneousError, match="weighted degree 7"):
        parse_sextic("w^2 + z^3 + x^7")


def test_unknown_variable_with_position():
    with pytest.raises(UnknownVariableError) as info:
        parse_sextic("w^2 + q^6")
    assert info.value.position == 6


def test_syntax_error_with_position():
    with pytest.raises(EquationError) as info:
        parse_sextic("w^2 + ")
    assert info.value.position == 6  # the end-of-input position
    with pytest.raises(EquationError):
        parse_sextic("w^2 + z^3 + x^5*y)")
    with pytest.raises(EquationError):
        parse_sextic("")


def test_fraction_literals_and_unary_minus():
    s = parse_sextic("-w^2 - 1/2*x^6 = 0")
    assert s.c_w2 == -1
    assert s.c_0 == form("-1/2*x^6", 6)


def test_exponent_rules():
    with pytest.raises(EquationError, match="exponent"):
        parse_polynomial("x^y")
    with pytest.raises(EquationError, match="exponent"):
        parse_polynomial("x^(2)")
    with pytest.raises(EquationError, match="chained"):
        parse_polynomial("x^2^3")


def test_no_implicit_multiplication():
    with pytest.raises(EquationError):
        parse_polynomial("2x")


def test_precedence_power_over_product_over_sum():
    # 2*x^2*y^4 - x^6 has a well-defined reading; compare against explicit forms
    p = parse_binary_form("2*x^2*y^4 - x^6", 6)
    expected = 2 * form("x^2", 2) * form("y^4", 4) - form("x^6", 6)
    assert p == expected
    assert parse_binary_form("-x^2*y", 3) == -form("x^2", 2) * form("y", 1)


def test_parse_binary_form_zero_and_degree_checks():
    zero = parse_binary_form("0", 6)
    assert zero.is_zero and zero.degree == 6
    zero2 = parse_binary_form("x^3*y - x^3*y", 4)
    assert zero2.is_zero and zero2.degree == 4
    with pytest.raises(NotHomogeneousError):
        parse_binary_form("x^2 + x^3", 3)
    with pytest.raises(UnknownVariableError):
        parse_binary_form("z^2", 4)


def test_parse_binary_form_collects_terms():
    f = parse_binary_form("x*y^3 + 3*x*y^3 - y^4", 4)
    assert f == BinaryForm.from_coefficients(4, [0, 0, 0, 4, -1])


def test_every_catalog_style_equation_shape_parses():
    # representative shapes exercised throughout: parenthesized products,
    # rational coefficients, both equation styles
    for text in [
        "w^2 + z^3 - 3*(x-y)*x*y^2*z + 2*(x-y)*x^2*y^3",
        "w^2 + z^3 - 3*(x^2-y^2)*y^2*z + 2*(x^2-y^2)*x*y^3",
        "w^2 = z*(z+x*y)*(z+1/2*x*y)",
        "w^2 + z^3 + (x*y*(x-y)*(x-2*y))*z",
    ]:
        parse_sextic(text)


def test_monomial_weighted_degree_check_is_per_monomial():
    # total degree 6 on average does not help: each monomial must be exactly 6
    with pytest.raises(NotHomogeneousError):
        parse_sextic("w^2 + x^5 + x^7")


def test_rational_scaling_of_w2():
    s = parse_sextic("3/4*w^2 + z^3 + x^6")
    assert s.c_w2 == Fraction(3, 4)
