"""Reduction to short form, discriminant, j-invariant, cube test, validation."""

import random
from fractions import Fraction

import pytest

from delpezzo.errors import (
    MissingCubeTermError,
    MissingSquareTermError,
    NonMinimalError,
    ZeroDiscriminantError,
)
from delpezzo.forms import BinaryForm
from delpezzo.kodaira import classify_fibration
from delpezzo.sextic import Poly, parse_binary_form, parse_sextic, sextic_from_polynomial
from delpezzo.weierstrass import (
    cube_test,
    discriminant,
    j_invariant,
    reduce_to_short,
    weierstrass_data,
)


def form(text, degree):
    return parse_binary_form(text, degree)


# -- reduction -----------------------------------------------------------------


def test_reduce_short_input_with_plus_convention():
    # w^2 + z^3 + z*x^3*y = 0 is the same surface as w^2 = z^3 + x^3*y z
    # (substitute z -> -z); the reduced pair keeps f4 up to that symmetry
    wd = reduce_to_short(parse_sextic("w^2 + z^3 + z*x^3*y"))
    assert wd.f4 == form("x^3*y", 4)
    assert wd.f6.is_zero
    assert wd.j.constant and wd.j.value == 1728


def test_reduce_three_root_family_a2_recorded_oracle():
    # depressing z(z+xy)(z+2xy) with z -> z - xy gives f4 = -x^2 y^2, f6 = 0
    wd = reduce_to_short(parse_sextic("w^2 = z*(z+x*y)*(z+2*x*y)"))
    assert wd.f4 == form("-x^2*y^2", 4)
    assert wd.f6.is_zero
    assert wd.j.constant and wd.j.value == 1728


def test_reduce_three_root_family_a3_recorded_oracle():
    # a = 3: f4 = -(a^2-a+1)/3 x^2y^2 = -7/3 x^2y^2,
    #        f6 = (1+a)(2a-1)(a-2)/27 x^3y^3 = 20/27 x^3y^3
    wd = reduce_to_short(parse_sextic("w^2 = z*(z+x*y)*(z+3*x*y)"))
    assert wd.f4 == Fraction(-7, 3) * form("x^2*y^2", 4)
    assert wd.f6 == Fraction(20, 27) * form("x^3*y^3", 6)
    assert wd.j.constant and wd.j.value == Fraction(21952, 9)


def test_reduce_missing_square_or_cube_term():
    with pytest.raises(MissingSquareTermError):
        reduce_to_short(parse_sextic("w*x^3 + z^3 + x^6"))
    with pytest.raises(MissingCubeTermError):
        reduce_to_short(parse_sextic("w^2 + z^2*x^2 + x^6"))


def test_reduce_handles_completing_the_square():
    # (w + z*x + y^3)^2 = z^3 + x^4 z + x^5 y  expanded has wz and w terms
    wd_direct = weierstrass_data(form("x^4", 4), form("x^5*y", 6))
    text = (
        "w^2 + 2*w*z*x + 2*w*y^3 + z^2*x^2 + 2*z*x*y^3 + y^6"
        " = z^3 + x^4*z + x^5*y"
    )
    wd = reduce_to_short(parse_sextic(text))
    a = classify_fibration(wd)
    b = classify_fibration(wd_direct)
    assert a.entries == b.entries
    assert wd.j == wd_direct.j


# -- discriminant ------------------------------------------------------------------


def test_discriminant_vs_bare_cubic_discriminant():
    # the bare cubic discriminant of z^3 - 3(x-y)x y^2 z + 2(x-y)x^2y^3 is
    # -108 (x-y)^2 x^3 y^7; our normalization carries the fixed factor 16
    f4 = form("-3*(x-y)*x*y^2", 4)
    f6 = form("2*(x-y)*x^2*y^3", 6)
    delta = discriminant(f4, f6)
    bare = form("-108*(x-y)^2*x^3*y^7", 12)
    assert delta == 16 * bare


def test_discriminant_pure_sextic():
    delta = discriminant(BinaryForm.zero(4), form("x^5*y", 6))
    assert delta == form("-432*x^10*y^2", 12)


def test_discriminant_zero_rejected():
    with pytest.raises(ZeroDiscriminantError):
        discriminant(BinaryForm.zero(4), BinaryForm.zero(6))
    # 4 f4^3 = -27 f6^2 with both nonzero: f4 = -3u^2, f6 = 2u^3
    u = form("x*y", 2)
    with pytest.raises(ZeroDiscriminantError):
        discriminant(-3 * (u * u), 2 * (u * u * u))


# -- j invariant ---------------------------------------------------------------------


def test_j_zero_and_1728():
    assert j_invariant(BinaryForm.zero(4), form("x^5*y", 6)).value == 0
    assert j_invariant(form("x^3*y", 4), BinaryForm.zero(6)).value == 1728


def test_j_constant_neither_special():
    wd = reduce_to_short(parse_sextic("w^2 = z*(z+x*y)*(z+4*x*y)"))
    assert wd.j.constant
    assert wd.j.value == Fraction(35152, 9)
    assert wd.j.value not in (0, 1728)


def test_j_nonconstant_when_cube_and_square_independent():
    j = j_invariant(form("x^4", 4), form("x^5*y", 6))
    assert not j.constant and j.value is None


def test_j_constancy_matches_linear_dependence():
    rng = random.Random(4)
    for _ in range(40):
        f4 = BinaryForm.from_coefficients(4, [rng.randint(-5, 5) for _ in range(5)])
        f6 = BinaryForm.from_coefficients(6, [rng.randint(-5, 5) for _ in range(7)])
        if (4 * f4**3 + 27 * f6**2).is_zero:
            continue
        cube, square = f4**3, f6**2
        # rank of the 2 x 13 coefficient matrix <= 1 iff all 2x2 minors vanish
        dependent = all(
            cube.coefficients[i] * square.coefficients[k]
            == cube.coefficients[k] * square.coefficients[i]
            for i in range(13)
            for k in range(i + 1, 13)
        )
        assert j_invariant(f4, f6).constant == dependent


# -- cube test --------------------------------------------------------------------------


def test_cube_test_examples():
    assert cube_test(form("x^3*y^3", 6)) is True
    assert cube_test(form("x^5*y", 6)) is False
    assert cube_test(form("x^6", 6)) is True
    assert cube_test(form("(x^2+y^2)^3", 6)) is True
    assert cube_test(form("8*x^3*y^3", 6)) is True


def test_cube_test_zero_rejected():
    with pytest.raises(Exception):
        cube_test(BinaryForm.zero(6))


# -- validation -------------------------------------------------------------------------


def test_non_minimal_surface_rejected():
    with pytest.raises(NonMinimalError, match="not du Val"):
        reduce_to_short(parse_sextic("w^2 + z^3 + x^6"))
    with pytest.raises(NonMinimalError):
        weierstrass_data(form("x^4", 4), BinaryForm.zero(6))
    with pytest.raises(NonMinimalError):
        weierstrass_data(form("x^4", 4), form("x^6", 6))


def test_minimal_surfaces_accepted():
    # v4 = 4 alone or v6 = 6 alone is fine when the other side interferes
    wd = weierstrass_data(form("x^4", 4), form("x^5*y", 6))
    assert wd.delta == form("-16*x^10*(4*x^2+27*y^2)", 12)
    weierstrass_data(form("x^2*y^2", 4), BinaryForm.zero(6))


# -- reduction invariance ------------------------------------------------------------------


def _poly_from_short(f4: BinaryForm, f6: BinaryForm) -> Poly:
    """w^2 - z^3 - f4 z - f6 as an expanded polynomial."""
    terms = {(0, 0, 0, 2): Fraction(1), (0, 0, 3, 0): Fraction(-1)}
    for i, c in enumerate(f4.coefficients):
        if c:
            terms[(4 - i, i, 1, 0)] = -c
    for i, c in enumerate(f6.coefficients):
        if c:
            terms[(6 - i, i, 0, 0)] = -c
    return Poly(terms)


def _substituted(poly: Poly, alpha, beta, q2, ell, h3, gamma) -> Poly:
    """Apply w -> beta w + ell z + h3, z -> alpha z + q2, scale by gamma."""
    z_new = Poly({(0, 0, 1, 0): alpha})
    for i, c in enumerate(q2.coefficients):
        if c:
            z_new = z_new + Poly({(2 - i, i, 0, 0): c})
    w_new = Poly({(0, 0, 0, 1): beta})
    for i, c in enumerate(ell.coefficients):
        if c:
            w_new = w_new + Poly({(1 - i, i, 1, 0): c})
    for i, c in enumerate(h3.coefficients):
        if c:
            w_new = w_new + Poly({(3 - i, i, 0, 0): c})
    out = Poly({})
    for (dx, dy, dz, dw), c in poly.terms.items():
        term = Poly({(dx, dy, 0, 0): c * gamma})
        term = term * z_new**dz
        term = term * w_new**dw
        out = out + term
    return out


def test_reduction_invariance_under_coordinate_changes():
    rng = random.Random(20260808)
    checked = 0
    while checked < 25:
        f4 = BinaryForm.from_coefficients(4, [rng.randint(-6, 6) for _ in range(5)])
        f6 = BinaryForm.from_coefficients(6, [rng.randint(-6, 6) for _ in range(7)])
        try:
            wd = weierstrass_data(f4, f6)
        except Exception:
            continue
        base = classify_fibration(wd)
        alpha = Fraction(rng.choice([1, 2, 3, -1, -2, 1]), rng.choice([1, 1, 2]))
        beta = Fraction(rng.choice([1, -1, 2, 3]), rng.choice([1, 2]))
        gamma = Fraction(rng.choice([1, -1, 5]), rng.choice([1, 3]))
        q2 = BinaryForm.from_coefficients(2, [rng.randint(-3, 3) for _ in range(3)])
        ell = BinaryForm.from_coefficients(1, [rng.randint(-3, 3) for _ in range(2)])
        h3 = BinaryForm.from_coefficients(3, [rng.randint(-3, 3) for _ in range(4)])
        scrambled = _substituted(
            _poly_from_short(f4, f6), alpha, beta, q2, ell, h3, gamma
        )
        wd2 = reduce_to_short(sextic_from_polynomial(scrambled))
        other = classify_fibration(wd2)
        assert other.entries == base.entries
        assert wd2.j == wd.j
        checked += 1
