"""Exact arithmetic with homogeneous binary forms over the rationals.

A :class:`BinaryForm` of degree ``d`` stores ``d + 1`` rational coefficients,
entry ``i`` being the coefficient of ``x**(d-i) * y**i``.  The identically-zero
form keeps a declared degree so homogeneous arithmetic stays well-typed (f4
may be the zero form of degree 4).

Everything here is exact: no rounding occurs anywhere.  The heavy lifting for
irreducible factorization of squarefree integer polynomials is delegated to
sympy's dense Zassenhaus routine; gcd, squarefree splitting and valuations are
implemented directly, routed through the dehomogenization ``t = x/y`` with the
pure ``y``-power ("point at infinity") factor handled separately.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd as _int_gcd

from sympy.polys.domains import ZZ
from sympy.polys.factortools import dup_zz_factor

from .errors import DegreeMismatchError, ZeroFormError

INFINITY = math.inf

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


@dataclass(frozen=True)
class BinaryForm:
    """Homogeneous polynomial in x, y with exact rational coefficients."""

    degree: int
    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("degree must be non-negative")
        if len(self.coefficients) != self.degree + 1:
            raise ValueError(
                f"degree-{self.degree} form needs {self.degree + 1} coefficients, "
                f"got {len(self.coefficients)}"
            )

    @staticmethod
    def from_coefficients(degree: int, coefficients) -> "BinaryForm":
        return BinaryForm(degree, tuple(_as_fraction(c) for c in coefficients))

    @staticmethod
    def zero(degree: int) -> "BinaryForm":
        return BinaryForm(degree, (_ZERO,) * (degree + 1))

    @staticmethod
    def constant(value) -> "BinaryForm":
        return BinaryForm(0, (_as_fraction(value),))

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients)

    def coefficient(self, x_power: int) -> Fraction:
        """Coefficient of x**x_power * y**(degree - x_power)."""
        return self.coefficients[self.degree - x_power]

    @property
    def leading_coefficient(self) -> Fraction:
        """First nonzero coefficient in x-major order (0 for the zero form)."""
        for c in self.coefficients:
            if c != 0:
                return c
        return _ZERO

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        if not isinstance(other, BinaryForm):
            return NotImplemented
        if self.degree != other.degree:
            raise DegreeMismatchError(
                f"cannot add forms of degrees {self.degree} and {other.degree}"
            )
        return BinaryForm(
            self.degree,
            tuple(a + b for a, b in zip(self.coefficients, other.coefficients)),
        )

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        if not isinstance(other, BinaryForm):
            return NotImplemented
        if self.degree != other.degree:
            raise DegreeMismatchError(
                f"cannot subtract forms of degrees {self.degree} and {other.degree}"
            )
        return BinaryForm(
            self.degree,
            tuple(a - b for a, b in zip(self.coefficients, other.coefficients)),
        )

    def __neg__(self) -> "BinaryForm":
        return BinaryForm(self.degree, tuple(-a for a in self.coefficients))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            return BinaryForm(self.degree, tuple(a * c for a in self.coefficients))
        if not isinstance(other, BinaryForm):
            return NotImplemented
        d = self.degree + other.degree
        # integer fast path: plain int convolution, wrap once at the end
        if all(a.denominator == 1 for a in self.coefficients) and all(
            b.denominator == 1 for b in other.coefficients
        ):
            av = [a.numerator for a in self.coefficients]
            bv = [b.numerator for b in other.coefficients]
            out_int = [0] * (d + 1)
            for i, a in enumerate(av):
                if a:
                    for j, b in enumerate(bv):
                        if b:
                            out_int[i + j] += a * b
            return BinaryForm(d, tuple(Fraction(v) for v in out_int))
        out = [_ZERO] * (d + 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                if b != 0:
                    out[i + j] += a * b
        return BinaryForm(d, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "BinaryForm":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = BinaryForm.constant(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def evaluate(self, x, y) -> Fraction:
        x = _as_fraction(x)
        y = _as_fraction(y)
        total = _ZERO
        for i, c in enumerate(self.coefficients):
            if c != 0:
                total += c * x ** (self.degree - i) * y**i
        return total

    # -- normal forms ---------------------------------------------------------

    def content_and_primitive(self) -> tuple[Fraction, "BinaryForm"]:
        """Write self = content * primitive with integer coefficients, gcd 1,
        positive leading coefficient (x-major).  Zero form is rejected."""
        if self.is_zero:
            raise ZeroFormError("the zero form has no primitive part")
        den = reduce(lambda a, b: a * b // _int_gcd(a, b),
                     (c.denominator for c in self.coefficients), 1)
        ints = [int(c * den) for c in self.coefficients]
        g = reduce(_int_gcd, (abs(v) for v in ints))
        lead = next(v for v in ints if v != 0)
        if lead < 0:
            g = -g
        prim = BinaryForm(self.degree, tuple(Fraction(v // g) for v in ints))
        return Fraction(g, den), prim

    def primitive_part(self) -> "BinaryForm":
        return self.content_and_primitive()[1]

    def sort_key(self):
        return (self.degree, self.coefficients)

    # -- display --------------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        pieces: list[str] = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            xp, yp = self.degree - i, i
            vars_ = []
            if xp:
                vars_.append("x" if xp == 1 else f"x^{xp}")
            if yp:
                vars_.append("y" if yp == 1 else f"y^{yp}")
            mag = abs(c)
            if not vars_:
                body = str(mag)
            elif mag == 1:
                body = "*".join(vars_)
            else:
                body = "*".join([str(mag)] + vars_)
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"BinaryForm({self})"


@dataclass(frozen=True)
class Factorization:
    """content * prod(factor**multiplicity) with irreducible primitive factors.

    Factors carry integer coefficients with gcd 1 and positive leading
    coefficient (x before y), are pairwise non-proportional, and are sorted by
    (degree, coefficients).
    """

    content: Fraction
    factors: tuple[tuple[BinaryForm, int], ...]

    def expand(self) -> BinaryForm:
        result = BinaryForm.constant(self.content)
        for factor, mult in self.factors:
            result = result * factor**mult
        return result

    def __str__(self) -> str:
        if not self.factors:
            return str(self.content)
        parts = [] if self.content == 1 else [str(self.content)]
        for factor, mult in self.factors:
            parts.append(f"({factor})" + (f"^{mult}" if mult > 1 else ""))
        return " * ".join(parts) if parts else "1"


# -- univariate helpers (dense, low-to-high, exact rationals) ------------------
#
# A nonzero form f of degree d factors as y**k * F(x, y) with y not dividing F;
# F corresponds to the univariate u(t) = f(t, 1) of degree d - k.  All gcd,
# squarefree and factorization work happens on u, the y**k part is bookkept.


def _dehomogenize(f: BinaryForm) -> tuple[int, list[Fraction]]:
    u = list(reversed(f.coefficients))
    while u and u[-1] == 0:
        u.pop()
    if not u:
        raise ZeroFormError("cannot dehomogenize the zero form")
    return f.degree - (len(u) - 1), u


def _homogenize(y_power: int, u: list[Fraction]) -> BinaryForm:
    degree = y_power + len(u) - 1
    coeffs = (_ZERO,) * y_power + tuple(reversed(u))
    return BinaryForm(degree, coeffs)


def _u_trim(u: list[Fraction]) -> list[Fraction]:
    while u and u[-1] == 0:
        u.pop()
    return u


def _u_is_zero(u: list[Fraction]) -> bool:
    return not u


def _u_monic(u: list[Fraction]) -> list[Fraction]:
    lc = u[-1]
    if lc == 1:
        return u
    return [c / lc for c in u]


def _u_derivative(u: list[Fraction]) -> list[Fraction]:
    return _u_trim([i * c for i, c in enumerate(u)][1:])


def _u_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    return _u_trim([(a[k] if k < len(a) else _ZERO) - (b[k] if k < len(b) else _ZERO)
                    for k in range(n)])


def _u_divmod(a: list[Fraction], b: list[Fraction]):
    if _u_is_zero(b):
        raise ZeroDivisionError("univariate division by zero")
    rem = _u_trim(list(a))
    quo = [_ZERO] * max(len(a) - len(b) + 1, 1)
    lb = b[-1]
    while len(rem) >= len(b) and not _u_is_zero(rem):
        shift = len(rem) - len(b)
        factor = rem[-1] / lb
        quo[shift] = factor
        for i, c in enumerate(b):
            rem[shift + i] -= factor * c
        rem = _u_trim(rem)
    return _u_trim(quo), rem


def _u_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _u_trim(list(a)), _u_trim(list(b))
    while not _u_is_zero(b):
        _, r = _u_divmod(a, b)
        a, b = b, r
    if _u_is_zero(a):
        raise ZeroDivisionError("gcd of two zero polynomials")
    return _u_monic(a)


def _u_squarefree_parts(u: list[Fraction]) -> list[tuple[list[Fraction], int]]:
    """Yun's algorithm: monic u = prod(g_i ** i), g_i squarefree and coprime."""
    parts: list[tuple[list[Fraction], int]] = []
    if len(u) <= 1:
        return parts
    du = _u_derivative(u)
    g = _u_gcd(u, du)
    c, _ = _u_divmod(u, g)
    w, _ = _u_divmod(du, g)
    i = 1
    while len(c) > 1:
        y = _u_sub(w, _u_derivative(c))
        h = _u_monic(list(c)) if _u_is_zero(y) else _u_gcd(c, y)
        if len(h) > 1:
            parts.append((h, i))
        c, _ = _u_divmod(c, h)
        w = [] if _u_is_zero(y) else _u_divmod(y, h)[0]
        i += 1
    return parts


Y_FORM = BinaryForm(1, (_ZERO, _ONE))
X_FORM = BinaryForm(1, (_ONE, _ZERO))


def form_gcd(a: BinaryForm, b: BinaryForm) -> BinaryForm:
    """Primitive greatest common divisor of two forms (positive leading
    coefficient); pure y-power common factors are handled exactly."""
    if a.is_zero and b.is_zero:
        raise ZeroFormError("gcd of two zero forms")
    if a.is_zero:
        return b.primitive_part()
    if b.is_zero:
        return a.primitive_part()
    ka, ua = _dehomogenize(a)
    kb, ub = _dehomogenize(b)
    g = _u_gcd(ua, ub)
    return _homogenize(min(ka, kb), g).primitive_part()


def squarefree_decomposition(
    f: BinaryForm,
) -> tuple[Fraction, tuple[tuple[BinaryForm, int], ...]]:
    """Split f = content * prod(g_i ** i) with each g_i squarefree, primitive,
    and the g_i pairwise coprime.  Returns (content, ((g_i, i), ...))."""
    if f.is_zero:
        raise ZeroFormError("cannot decompose the zero form")
    k, u = _dehomogenize(f)
    by_mult: dict[int, BinaryForm] = {}
    for part, mult in _u_squarefree_parts(_u_monic(u)):
        by_mult[mult] = _homogenize(0, part).primitive_part()
    if k > 0:
        by_mult[k] = by_mult[k] * Y_FORM if k in by_mult else Y_FORM
    parts = tuple(sorted(((g, m) for m, g in by_mult.items()),
                         key=lambda item: (item[1], item[0].sort_key())))
    product = BinaryForm.constant(1)
    for g, m in parts:
        product = product * g**m
    content = f.leading_coefficient / product.leading_coefficient
    return content, parts


def is_squarefree(f: BinaryForm) -> bool:
    """True when f has no repeated root on the projective line."""
    if f.is_zero:
        raise ZeroFormError("squarefreeness undefined for the zero form")
    if f.degree == 0:
        return True
    _, parts = squarefree_decomposition(f)
    return all(m == 1 for _, m in parts)


def factor_over_rationals(f: BinaryForm) -> Factorization:
    """Full irreducible factorization over the rationals."""
    if f.is_zero:
        raise ZeroFormError("cannot factor the zero form")
    content, prim = f.content_and_primitive()
    k, u = _dehomogenize(prim)
    factors: list[tuple[BinaryForm, int]] = []
    if k > 0:
        factors.append((Y_FORM, k))
    if len(u) > 1:
        ints = [int(c) for c in u]  # prim has integer coefficients
        zz = [ZZ(c) for c in reversed(ints)]
        lead_unit, raw = dup_zz_factor(zz, ZZ)
        content = content * Fraction(int(lead_unit))
        for coeffs, mult in raw:
            fac = BinaryForm(len(coeffs) - 1,
                             tuple(Fraction(int(c)) for c in coeffs))
            if fac.leading_coefficient < 0:
                fac = -fac
                if mult % 2 == 1:
                    content = -content
            factors.append((fac, mult))
    else:
        content = content * u[0]
    factors.sort(key=lambda item: item[0].sort_key())
    return Factorization(content, tuple(factors))


def divides_exactly(p: BinaryForm, f: BinaryForm) -> bool:
    """True when the nonzero form p divides f (the zero form is divisible by
    everything)."""
    if p.is_zero:
        raise ZeroFormError("division by the zero form")
    if f.is_zero:
        return True
    kp, up = _dehomogenize(p)
    kf, uf = _dehomogenize(f)
    if kp > kf:
        return False
    _, rem = _u_divmod(uf, up)
    return _u_is_zero(rem)


def valuation(f: BinaryForm, p: BinaryForm) -> int | float:
    """Largest k with p**k dividing f; infinity for the zero form f.

    p must be nonconstant and irreducible over the rationals (it is normalized
    to its primitive part internally; valuations are scale-invariant).
    """
    if p.is_zero or p.degree == 0:
        raise ValueError("valuation requires a nonconstant form")
    p = p.primitive_part()
    probe = factor_over_rationals(p)
    if len(probe.factors) != 1 or probe.factors[0][1] != 1:
        raise ValueError(f"valuation requires an irreducible form, got {p}")
    return _valuation_at_irreducible(f, p)


def _valuation_at_irreducible(f: BinaryForm, p: BinaryForm) -> int | float:
    """valuation() without the irreducibility probe; p must be primitive
    irreducible (trusted callers pass factors of a Factorization)."""
    if f.is_zero:
        return INFINITY
    kf, uf = _dehomogenize(f)
    if p == Y_FORM:
        return kf
    kp, up = _dehomogenize(p)
    if kp > 0:  # p proportional to y handled above; anything else is reducible
        raise ValueError(f"not irreducible: {p}")
    count = 0
    u = uf
    while len(u) >= len(up):
        q, r = _u_divmod(u, up)
        if not _u_is_zero(r):
            break
        count += 1
        u = q
    return count
