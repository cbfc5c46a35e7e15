"""Reduction of sextics to short Weierstrass form and its basic invariants.

The internal model of a degree-1 del Pezzo surface is

    w^2 = z^3 + f4(x, y) z + f6(x, y),

with f4, f6 binary forms of degrees 4 and 6.  A general sextic with nonzero
w^2 and z^3 coefficients is brought to this shape by completing the square in
w, a z/w rescaling making both the square and the cube monic, and depressing
the cubic.  All steps are exact and the result is isomorphic to the input
surface over the rationals; valuations of (f4, f6, delta) at every place --
hence the whole classification -- do not depend on the choices made here.

The discriminant convention is delta = -16 (4 f4^3 + 27 f6^2).  Relative to
the bare cubic discriminant of z^3 + p z + q this carries a fixed factor 16
(after the sign-preserving substitution z -> -z used for inputs written as
w^2 + z^3 + ... = 0), which tests account for explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    MissingCubeTermError,
    MissingSquareTermError,
    NonMinimalError,
    ZeroDiscriminantError,
    ZeroFormError,
)
from .forms import (
    INFINITY,
    BinaryForm,
    factor_over_rationals,
    form_gcd,
    squarefree_decomposition,
    _valuation_at_irreducible,
)
from .sextic import GeneralSextic


@dataclass(frozen=True)
class JInvariant:
    """The j-invariant of the fibration as a function on the base line.

    ``constant`` is True exactly when f4^3 and f6^2 are proportional forms
    (including either being zero); ``value`` is the exact rational constant in
    that case and None otherwise.
    """

    constant: bool
    value: Fraction | None = None

    @property
    def kind(self) -> str:
        return "constant" if self.constant else "nonconstant"


@dataclass(frozen=True)
class WeierstrassData:
    """Validated short-Weierstrass pair with its discriminant and j-invariant."""

    f4: BinaryForm
    f6: BinaryForm
    delta: BinaryForm
    j: JInvariant


def discriminant(f4: BinaryForm, f6: BinaryForm) -> BinaryForm:
    """delta = -16 (4 f4^3 + 27 f6^2), a form of degree 12."""
    if f4.degree != 4 or f6.degree != 6:
        raise ValueError("discriminant needs forms of degrees 4 and 6")
    return _discriminant_from_parts(f4**3, f6**2)


def _discriminant_from_parts(cube: BinaryForm, square: BinaryForm) -> BinaryForm:
    delta = (4 * cube + 27 * square) * Fraction(-16)
    if delta.is_zero:
        raise ZeroDiscriminantError(
            "not an elliptic fibration: discriminant vanishes identically"
        )
    return delta


def j_invariant(f4: BinaryForm, f6: BinaryForm) -> JInvariant:
    """j = 1728 * 4 f4^3 / (4 f4^3 + 27 f6^2) as an exact function.

    Constant if and only if f4^3 and f6^2 are linearly dependent as forms;
    the constant value is 0 when f4 = 0 and 1728 when f6 = 0.
    """
    if f4.is_zero or f6.is_zero:
        return _j_from_parts(f4, f6, None, None)
    return _j_from_parts(f4, f6, f4**3, f6**2)


def _j_from_parts(
    f4: BinaryForm,
    f6: BinaryForm,
    cube: BinaryForm | None,
    square: BinaryForm | None,
) -> JInvariant:
    if f4.is_zero and f6.is_zero:
        raise ZeroDiscriminantError("j undefined: discriminant vanishes identically")
    if f4.is_zero:
        return JInvariant(True, Fraction(0))
    if f6.is_zero:
        return JInvariant(True, Fraction(1728))
    ratio: Fraction | None = None
    for a, b in zip(cube.coefficients, square.coefficients):
        if b == 0:
            if a != 0:
                return JInvariant(False)
            continue
        r = a / b
        if ratio is None:
            ratio = r
        elif r != ratio:
            return JInvariant(False)
    if ratio is None:  # square == 0 handled above
        return JInvariant(False)
    # f4^3 = ratio * f6^2, so j = 1728 * 4 ratio / (4 ratio + 27); the
    # denominator cannot vanish, that would make delta identically zero.
    value = Fraction(6912) * ratio / (4 * ratio + 27)
    return JInvariant(True, value)


def cube_test(f6: BinaryForm) -> bool:
    """Is f6 a perfect cube over the algebraic closure (all root
    multiplicities divisible by 3)?"""
    if f6.is_zero:
        raise ZeroFormError("cube test undefined for the zero form")
    _, parts = squarefree_decomposition(f6)
    return all(mult % 3 == 0 for _, mult in parts)


def _check_minimal(f4: BinaryForm, f6: BinaryForm) -> None:
    """Reject places with valuation(f4) >= 4 and valuation(f6) >= 6; such a
    point of the sextic is not a du Val singularity."""
    if f4.is_zero:
        candidates = factor_over_rationals(f6).factors
    elif f6.is_zero:
        candidates = factor_over_rationals(f4).factors
    else:
        common = form_gcd(f4, f6)
        if common.degree == 0:
            return
        candidates = factor_over_rationals(common).factors
    for place, _ in candidates:
        v4 = INFINITY if f4.is_zero else _valuation_at_irreducible(f4, place)
        v6 = INFINITY if f6.is_zero else _valuation_at_irreducible(f6, place)
        if v4 >= 4 and v6 >= 6:
            raise NonMinimalError(
                f"non-minimal place at {place}: not du Val", place=place
            )


def weierstrass_data(f4: BinaryForm, f6: BinaryForm) -> WeierstrassData:
    """Validate a short-Weierstrass pair and compute delta and j."""
    if f4.degree != 4 or f6.degree != 6:
        raise ValueError("a short-Weierstrass pair has degrees 4 and 6")
    cube = None if f4.is_zero else f4**3
    square = None if f6.is_zero else f6**2
    delta = _discriminant_from_parts(
        cube if cube is not None else BinaryForm.zero(12),
        square if square is not None else BinaryForm.zero(12),
    )
    _check_minimal(f4, f6)
    return WeierstrassData(f4=f4, f6=f6, delta=delta, j=_j_from_parts(f4, f6, cube, square))


def reduce_to_short(sextic: GeneralSextic) -> WeierstrassData:
    """Bring a general sextic to the short form w^2 = z^3 + f4 z + f6."""
    if sextic.c_w2 == 0:
        raise MissingSquareTermError(
            "not in del Pezzo normal form: no w^2 term"
        )
    if sextic.c_z3 == 0:
        raise MissingCubeTermError(
            "not in del Pezzo normal form: no z^3 term"
        )
    a = sextic.c_w2
    # Complete the square: w -> w - (c_wz z + c_w) / (2 c_w2) removes the
    # w z and w terms and shifts the cubic part by -(c_wz z + c_w)^2 / (4 c_w2).
    quarter = Fraction(1, 4) / a
    cz2 = sextic.c_z2 - quarter * (sextic.c_wz * sextic.c_wz)
    cz = sextic.c_z - (2 * quarter) * (sextic.c_wz * sextic.c_w)
    c0 = sextic.c_0 - quarter * (sextic.c_w * sextic.c_w)
    # Now a w^2 = b z^3 + C z^2 + D z + E; the rescaling z -> (a b) z,
    # w -> (a b^2) w makes both sides monic.
    b = -sextic.c_z3
    c2 = -cz2 * (Fraction(1) / (a * b**2))
    c4 = -cz * (Fraction(1) / (a**2 * b**3))
    c6 = -c0 * (Fraction(1) / (a**3 * b**4))
    # Depress the cubic: z -> z - c2 / 3.
    f4 = c4 - Fraction(1, 3) * (c2 * c2)
    f6 = c6 - Fraction(1, 3) * (c2 * c4) + Fraction(2, 27) * (c2 * c2 * c2)
    return weierstrass_data(f4, f6)
