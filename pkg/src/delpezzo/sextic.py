"""Parsing of sextic equations in the weighted projective space P(1,1,2,3).

The input language covers expressions and equations ``LHS = RHS`` over the
variables x, y, z, w with integer and fraction literals (``p/q``), the
operators ``+ - * ^``, unary minus and parentheses.  ``^`` binds tighter than
``*``, which binds tighter than ``+``/``-``; there is no implicit
multiplication.  An expression without ``=`` is read as ``... = 0``.

The parsed polynomial is fully expanded and collected; every monomial must
have weighted degree exactly 6 under the weights (x, y, z, w) = (1, 1, 2, 3).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import EquationError, NotHomogeneousError, UnknownVariableError
from .forms import BinaryForm

WEIGHTS = {"x": 1, "y": 1, "z": 2, "w": 3}

Monomial = tuple[int, int, int, int]  # exponents of x, y, z, w


# -- tokenizer -----------------------------------------------------------------

_OPERATORS = set("+-*^()=")


@dataclass(frozen=True)
class _Token:
    kind: str  # "num", "name", or the operator character
    value: Fraction | str | None
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _OPERATORS:
            tokens.append(_Token(ch, None, i))
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            numerator = int(text[start:i])
            if i < n and text[i] == "/" and i + 1 < n and text[i + 1].isdigit():
                i += 1
                dstart = i
                while i < n and text[i].isdigit():
                    i += 1
                tokens.append(_Token("num", Fraction(numerator, int(text[dstart:i])), start))
            else:
                tokens.append(_Token("num", Fraction(numerator), start))
            continue
        if ch.isalpha():
            start = i
            while i < n and (text[i].isalnum() or text[i] == "_"):
                i += 1
            name = text[start:i]
            if name not in WEIGHTS:
                raise UnknownVariableError(f"unknown variable '{name}'", start)
            tokens.append(_Token("name", name, start))
            continue
        raise EquationError(f"unexpected character '{ch}'", i)
    tokens.append(_Token("end", None, n))
    return tokens


# -- expanded polynomials --------------------------------------------------------


class Poly:
    """Expanded polynomial in x, y, z, w as a dict monomial -> coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Monomial, Fraction] | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c != 0}

    @staticmethod
    def constant(value: Fraction) -> "Poly":
        return Poly({(0, 0, 0, 0): value} if value else {})

    @staticmethod
    def variable(name: str) -> "Poly":
        exps = [0, 0, 0, 0]
        exps["xyzw".index(name)] = 1
        return Poly({tuple(exps): Fraction(1)})

    def __add__(self, other: "Poly") -> "Poly":
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return Poly(terms)

    def __sub__(self, other: "Poly") -> "Poly":
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) - c
        return Poly(terms)

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()})

    def __mul__(self, other: "Poly") -> "Poly":
        terms: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2], m1[3] + m2[3])
                terms[m] = terms.get(m, Fraction(0)) + c1 * c2
        return Poly(terms)

    def __pow__(self, exponent: int) -> "Poly":
        result = Poly.constant(Fraction(1))
        for _ in range(exponent):
            result = result * self
        return result


# -- recursive descent parser ----------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect(self, kind: str) -> _Token:
        token = self.peek()
        if token.kind != kind:
            raise EquationError(
                f"expected '{kind}', found "
                f"{'end of input' if token.kind == 'end' else repr(token.kind)}",
                token.pos,
            )
        return self.advance()

    def parse_equation(self) -> Poly:
        lhs = self.parse_expression()
        if self.peek().kind == "=":
            self.advance()
            rhs = self.parse_expression()
            lhs = lhs - rhs
        end = self.peek()
        if end.kind != "end":
            raise EquationError(f"unexpected '{end.kind}'", end.pos)
        return lhs

    def parse_expression(self) -> Poly:
        value = self.parse_term()
        while self.peek().kind in "+-":
            op = self.advance().kind
            rhs = self.parse_term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def parse_term(self) -> Poly:
        value = self.parse_unary()
        while self.peek().kind == "*":
            self.advance()
            value = value * self.parse_unary()
        return value

    def parse_unary(self) -> Poly:
        if self.peek().kind == "-":
            self.advance()
            return -self.parse_unary()
        if self.peek().kind == "+":
            self.advance()
            return self.parse_unary()
        return self.parse_power()

    def parse_power(self) -> Poly:
        base = self.parse_atom()
        if self.peek().kind != "^":
            return base
        self.advance()
        token = self.peek()
        if token.kind != "num" or token.value.denominator != 1:
            raise EquationError("exponent must be a non-negative integer", token.pos)
        self.advance()
        if self.peek().kind == "^":
            raise EquationError("chained '^' needs parentheses", self.peek().pos)
        return base ** int(token.value)

    def parse_atom(self) -> Poly:
        token = self.peek()
        if token.kind == "num":
            self.advance()
            return Poly.constant(token.value)
        if token.kind == "name":
            self.advance()
            return Poly.variable(token.value)
        if token.kind == "(":
            self.advance()
            inner = self.parse_expression()
            self.expect(")")
            return inner
        raise EquationError(
            "expected a number, variable or '('"
            + ("" if token.kind == "end" else f", found '{token.kind}'"),
            token.pos,
        )


def parse_polynomial(text: str) -> Poly:
    """Parse to an expanded polynomial in x, y, z, w (no degree checks)."""
    if not text.strip():
        raise EquationError("empty input", 0)
    return _Parser(text).parse_equation()


# -- the general sextic ------------------------------------------------------------


@dataclass(frozen=True)
class GeneralSextic:
    """c_w2*w^2 + c_wz*w*z + c_w*w + c_z3*z^3 + c_z2*z^2 + c_z*z + c_0,
    the general form of weighted degree 6 in P(1,1,2,3)."""

    c_w2: Fraction
    c_wz: BinaryForm  # degree 1
    c_w: BinaryForm  # degree 3
    c_z3: Fraction
    c_z2: BinaryForm  # degree 2
    c_z: BinaryForm  # degree 4
    c_0: BinaryForm  # degree 6


def _monomial_str(m: Monomial) -> str:
    parts = []
    for name, e in zip("xyzw", m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


_SLOT_DEGREES = {(0, 2): 0, (1, 1): 1, (0, 1): 3, (3, 0): 0, (2, 0): 2, (1, 0): 4, (0, 0): 6}


def parse_sextic(text: str) -> GeneralSextic:
    """Parse an equation into its GeneralSextic normal form.

    Every monomial is required to have weighted degree exactly 6; anything
    else is rejected monomial-by-monomial with the offending term named.
    """
    return sextic_from_polynomial(parse_polynomial(text))


def sextic_from_polynomial(poly: Poly) -> GeneralSextic:
    """Collect an expanded polynomial into the GeneralSextic slots."""
    if not poly.terms:
        raise NotHomogeneousError("the zero polynomial does not define a surface")
    slots: dict[tuple[int, int], dict[tuple[int, int], Fraction]] = {
        key: {} for key in _SLOT_DEGREES
    }
    for m, c in poly.terms.items():
        dx, dy, dz, dw = m
        weighted = dx + dy + 2 * dz + 3 * dw
        if weighted != 6:
            raise NotHomogeneousError(
                f"monomial {_monomial_str(m)} has weighted degree {weighted}, not 6"
            )
        slots[(dz, dw)][(dx, dy)] = c

    def form_of(zw: tuple[int, int]) -> BinaryForm:
        degree = _SLOT_DEGREES[zw]
        coeffs = [Fraction(0)] * (degree + 1)
        for (dx, dy), c in slots[zw].items():
            coeffs[dy] = c  # dx + dy = degree, entry i holds x^(degree-i) y^i
        return BinaryForm.from_coefficients(degree, coeffs)

    return GeneralSextic(
        c_w2=slots[(0, 2)].get((0, 0), Fraction(0)),
        c_wz=form_of((1, 1)),
        c_w=form_of((0, 1)),
        c_z3=slots[(3, 0)].get((0, 0), Fraction(0)),
        c_z2=form_of((2, 0)),
        c_z=form_of((1, 0)),
        c_0=form_of((0, 0)),
    )


def parse_binary_form(text: str, degree: int) -> BinaryForm:
    """Parse a homogeneous polynomial in x, y of the given degree.

    ``0`` (and any expression collapsing to zero) parses to the zero form of
    the requested degree.
    """
    poly = parse_polynomial(text)
    coeffs = [Fraction(0)] * (degree + 1)
    for m, c in poly.terms.items():
        dx, dy, dz, dw = m
        if dz or dw:
            raise UnknownVariableError(
                f"only x and y are allowed here, got {_monomial_str(m)}"
            )
        if dx + dy != degree:
            raise NotHomogeneousError(
                f"monomial {_monomial_str(m)} has degree {dx + dy}, expected {degree}"
            )
        coeffs[dy] = c
    return BinaryForm.from_coefficients(degree, coeffs)
