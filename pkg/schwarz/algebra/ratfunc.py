"""
Exact rational functions in one variable over the rationals.

A :class:`RatFunc` is stored as a pair of sympy ``Poly`` objects over ``QQ``
in the variable ``y``, always in canonical form: numerator and denominator
coprime, denominator monic. Two rational functions are therefore equal
exactly when their stored polynomials are equal, which is what every identity
check in the toolkit relies on.

Scalars enter and leave as :class:`fractions.Fraction`.
"""
import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable
from typing_extensions import Self

import numpy as np
import sympy

from schwarz.core.errors import ParseError, PoleError, ZeroDivisionRatFuncError

logger = logging.getLogger()

Y = sympy.Symbol("y")
QQ = sympy.QQ

_TEXT_RE = re.compile(r"^\s*\[(?P<num>[^\]]*)\]\s*/\s*\[(?P<den>[^\]]*)\]\s*$")


def to_fraction(value) -> Fraction:
    """Convert an int, Fraction, sympy Rational or "p/q" string to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Rational):
        return Fraction(int(value.numerator), int(value.denominator))
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError("not an exact rational: {!r}".format(value))


def to_sympy(value) -> sympy.Rational:
    """Convert an exact scalar to a sympy Rational."""
    fr = to_fraction(value)
    return sympy.Rational(fr.numerator, fr.denominator)


def make_poly(coefficients: Iterable) -> sympy.Poly:
    """Build a polynomial in ``y`` from ascending coefficients."""
    descending = [to_sympy(c) for c in reversed(list(coefficients))]
    if not descending:
        descending = [sympy.Integer(0)]
    return sympy.Poly.from_list(descending, Y, domain=QQ)


def poly_coefficients(poly: sympy.Poly) -> tuple[Fraction, ...]:
    """Ascending coefficients of a polynomial; empty for the zero polynomial."""
    if poly.is_zero:
        return ()
    return tuple(to_fraction(c) for c in reversed(poly.all_coeffs()))


def _fraction_text(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else "{}/{}".format(value.numerator, value.denominator)


@dataclass(frozen=True, eq=False)
class RatFunc:
    """Reduced rational function ``num/den`` with monic denominator."""
    num: sympy.Poly
    den: sympy.Poly

    def __post_init__(self):
        """Bring the pair into canonical form."""
        num = self.num if isinstance(self.num, sympy.Poly) else make_poly(self.num)
        den = self.den if isinstance(self.den, sympy.Poly) else make_poly(self.den)
        if den.is_zero:
            raise ZeroDivisionRatFuncError("rational function with zero denominator")

        if num.is_zero:
            num, den = make_poly([]), make_poly([1])
        else:
            g = num.gcd(den)
            if g.degree() > 0:
                num = num.exquo(g)
                den = den.exquo(g)
            lc = den.LC()
            if lc != 1:
                num = num.quo_ground(lc)
                den = den.quo_ground(lc)

        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    # Construction

    @classmethod
    def from_coefficients(cls, num: Iterable, den: Iterable = (1,)) -> Self:
        """Build from ascending coefficient sequences."""
        return cls(make_poly(num), make_poly(den))

    @classmethod
    def constant(cls, value) -> Self:
        return cls(make_poly([value]), make_poly([1]))

    @classmethod
    def identity(cls) -> Self:
        return cls(make_poly([0, 1]), make_poly([1]))

    @classmethod
    def from_expr(cls, expr: sympy.Expr) -> Self:
        """Build from a sympy expression that is rational in ``y`` over QQ."""
        expr = sympy.sympify(expr)
        if expr.free_symbols - {Y}:
            raise ParseError("unexpected symbols {}".format(sorted(map(str, expr.free_symbols - {Y}))))
        if not expr.is_rational_function(Y):
            raise ParseError("not a rational function of y: {}".format(expr))
        numer, denom = sympy.fraction(sympy.cancel(sympy.together(expr)))
        try:
            return cls(sympy.Poly(numer, Y, domain=QQ), sympy.Poly(denom, Y, domain=QQ))
        except (sympy.polys.polyerrors.PolynomialError, sympy.polys.polyerrors.CoercionFailed) as e:
            raise ParseError("coefficients must be rational: {}".format(e)) from e

    @classmethod
    def from_text(cls, text: str) -> Self:
        """Parse the ``[num coeffs]/[den coeffs]`` serialization."""
        match = _TEXT_RE.match(text)
        if not match:
            raise ParseError("expected '[num coeffs]/[den coeffs]'", text, 0)

        def parse_list(body: str, offset: int) -> list[Fraction]:
            items = [item for item in body.split(",")]
            if items == [""] or all(not item.strip() for item in items):
                return []
            values = []
            position = offset
            for item in items:
                try:
                    values.append(Fraction(item.strip()))
                except (ValueError, ZeroDivisionError):
                    raise ParseError("bad coefficient {!r}".format(item.strip()), text, position)
                position += len(item) + 1
            return values

        num = parse_list(match.group("num"), match.start("num"))
        den = parse_list(match.group("den"), match.start("den"))
        if not den:
            raise ParseError("empty denominator", text, match.start("den"))
        if not any(den):
            raise ParseError("zero denominator", text, match.start("den"))
        return cls.from_coefficients(num, den)

    # Inspection

    @property
    def num_coefficients(self) -> tuple[Fraction, ...]:
        return poly_coefficients(self.num)

    @property
    def den_coefficients(self) -> tuple[Fraction, ...]:
        return poly_coefficients(self.den)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_constant(self) -> bool:
        return self.num.degree() <= 0 and self.den.degree() <= 0

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree() == 0

    @property
    def degree(self) -> int:
        """Degree as a map of the projective line."""
        return max(self.num.degree(), self.den.degree(), 0)

    def as_expr(self) -> sympy.Expr:
        return self.num.as_expr() / self.den.as_expr()

    def to_text(self) -> str:
        """Serialize as ``[num coeffs]/[den coeffs]`` (ascending, exact)."""
        num = ", ".join(_fraction_text(c) for c in self.num_coefficients)
        den = ", ".join(_fraction_text(c) for c in self.den_coefficients)
        return "[{}]/[{}]".format(num, den)

    def pole_order(self, point) -> int:
        """Multiplicity of ``point`` as a root of the denominator."""
        linear = make_poly([-to_fraction(point), 1])
        order = 0
        den = self.den
        while den.degree() > 0 and den.rem(linear).is_zero:
            den = den.exquo(linear)
            order += 1
        return order

    def order_at_infinity(self) -> int:
        """Vanishing order at infinity (negative for a pole there)."""
        if self.is_zero:
            raise PoleError("the zero function has no finite order at infinity")
        return self.den.degree() - self.num.degree()

    def poles(self) -> np.ndarray:
        """Numerical roots of the denominator."""
        coeffs = [complex(c) for c in reversed(self.den_coefficients)]
        if len(coeffs) < 2:
            return np.zeros(0, dtype=complex)
        return np.roots(coeffs)

    def distance_to_poles(self, point: complex) -> float:
        """Distance from ``point`` to the nearest pole, ``inf`` for polynomials."""
        poles = self.poles()
        if poles.size == 0:
            return float("inf")
        return float(np.min(np.abs(poles - complex(point))))

    # Evaluation

    def __call__(self, value) -> Fraction:
        """Exact evaluation at a rational point."""
        point = to_sympy(value)
        den = self.den.eval(point)
        if den == 0:
            raise PoleError("{} is a pole of {}".format(value, self))
        return to_fraction(self.num.eval(point) / den)

    def evaluate(self, z):
        """Floating evaluation at complex point(s)."""
        num = np.polyval(self.numeric_num, z)
        den = np.polyval(self.numeric_den, z)
        return num / den

    @property
    def numeric_num(self) -> np.ndarray:
        """Numerator coefficients, descending, as complex floats."""
        coeffs = self.num_coefficients or (Fraction(0),)
        return np.array([complex(c) for c in reversed(coeffs)])

    @property
    def numeric_den(self) -> np.ndarray:
        """Denominator coefficients, descending, as complex floats."""
        return np.array([complex(c) for c in reversed(self.den_coefficients)])

    # Arithmetic

    @classmethod
    def _coerce(cls, other) -> Self:
        if isinstance(other, RatFunc):
            return other
        return cls.constant(other)

    def __add__(self, other) -> Self:
        other = self._coerce(other)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> Self:
        return RatFunc(-self.num, self.den)

    def __sub__(self, other) -> Self:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Self:
        return self._coerce(other) - self

    def __mul__(self, other) -> Self:
        other = self._coerce(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> Self:
        other = self._coerce(other)
        if other.is_zero:
            raise ZeroDivisionRatFuncError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> Self:
        return self._coerce(other) / self

    def __pow__(self, exponent: int) -> Self:
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            if self.is_zero:
                raise ZeroDivisionRatFuncError("negative power of the zero rational function")
            return RatFunc(self.den ** -exponent, self.num ** -exponent)
        return RatFunc(self.num ** exponent, self.den ** exponent)

    def derivative(self) -> Self:
        """Quotient-rule derivative."""
        num_d = self.num.diff(Y)
        den_d = self.den.diff(Y)
        return RatFunc(num_d * self.den - self.num * den_d, self.den ** 2)

    def compose(self, inner: Self) -> Self:
        """Exact composition ``self ∘ inner``."""
        inner = self._coerce(inner)
        degree = self.degree
        p, q = inner.num, inner.den

        p_powers = [make_poly([1])]
        q_powers = [make_poly([1])]
        for _ in range(degree):
            p_powers.append(p_powers[-1] * p)
            q_powers.append(q_powers[-1] * q)

        def homogenize(poly: sympy.Poly) -> sympy.Poly:
            total = make_poly([])
            for i, c in enumerate(poly_coefficients(poly)):
                if c:
                    total = total + (p_powers[i] * q_powers[degree - i]).mul_ground(to_sympy(c))
            return total

        numerator = homogenize(self.num)
        denominator = homogenize(self.den)
        if denominator.is_zero:
            raise PoleError("composition lands identically on a pole of {}".format(self))
        return RatFunc(numerator, denominator)

    # Comparison

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFunc):
            try:
                other = self._coerce(other)
            except TypeError:
                return NotImplemented
        return self.num_coefficients == other.num_coefficients and self.den_coefficients == other.den_coefficients

    def __hash__(self) -> int:
        return hash((self.num_coefficients, self.den_coefficients))

    def __str__(self) -> str:
        return str(self.as_expr())

    def __repr__(self) -> str:
        return "RatFunc({})".format(self.to_text())
