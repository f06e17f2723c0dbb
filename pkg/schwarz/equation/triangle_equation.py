"""
The Schwarz triangle equation S_y(t) = R(y) and its linearization.

Angle parameters are carried as the inverses (α⁻¹, β⁻¹, γ⁻¹), a signature
entry ∞ being the inverse 0. The exponent differences of the linear equation
ψ″ + ½Rψ = 0 are β⁻¹ at 0, γ⁻¹ at 1 and α⁻¹ at ∞, and the equation is
projectively equivalent to the Gauss equation

    y(1−y)w″ + (c − (a+b+1)y)w′ − ab w = 0

with ``1−c = β⁻¹``, ``c−a−b = γ⁻¹`` and ``a−b = α⁻¹``.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing_extensions import Self

import sympy

from schwarz.algebra.ratfunc import RatFunc, to_fraction
from schwarz.core.enum_classes import ParamTag
from schwarz.core.errors import GenericParamsError, IrrationalParameterError, SchwarzError
from schwarz.core.utils import fraction_to_str, parse_fraction_list

logger = logging.getLogger()

HALF = Fraction(1, 2)

ParamValue = Fraction | sympy.Expr | ParamTag


def _coerce_param(value) -> ParamValue:
    if isinstance(value, ParamTag):
        return value
    if isinstance(value, float):
        raise TypeError("angle parameters must be exact, got the float {}".format(value))
    if isinstance(value, sympy.Basic):
        if value.is_Rational:
            return to_fraction(value)
        if value.free_symbols or value.is_real is False:
            raise IrrationalParameterError("not an exact real number: {}".format(value))
        return value
    return to_fraction(value)


@dataclass(frozen=True)
class AngleParams:
    """The triple (α⁻¹, β⁻¹, γ⁻¹), exact or entirely Generic."""
    e_alpha: ParamValue
    e_beta: ParamValue
    e_gamma: ParamValue

    def __post_init__(self):
        values = [_coerce_param(v) for v in (self.e_alpha, self.e_beta, self.e_gamma)]
        tagged = [v is ParamTag.GENERIC for v in values]
        if any(tagged) and not all(tagged):
            raise GenericParamsError("Generic must apply to all three parameters or none")
        for name, value in zip(("e_alpha", "e_beta", "e_gamma"), values):
            object.__setattr__(self, name, value)

    @classmethod
    def generic(cls) -> Self:
        return cls(ParamTag.GENERIC, ParamTag.GENERIC, ParamTag.GENERIC)

    @classmethod
    def from_text(cls, text: str) -> Self:
        """Parse ``generic`` or three comma separated exact fractions."""
        if text.strip().lower() == ParamTag.GENERIC:
            return cls.generic()
        return cls(*parse_fraction_list(text, 3))

    @property
    def values(self) -> tuple[ParamValue, ParamValue, ParamValue]:
        return (self.e_alpha, self.e_beta, self.e_gamma)

    @property
    def is_generic(self) -> bool:
        return self.e_alpha is ParamTag.GENERIC

    @property
    def is_rational(self) -> bool:
        return all(isinstance(v, Fraction) for v in self.values)

    def rational_values(self) -> tuple[Fraction, Fraction, Fraction]:
        """The three inverses as Fractions, raising for Generic or irrational input."""
        if self.is_generic:
            raise GenericParamsError("exact parameter values required, got Generic")
        if not self.is_rational:
            raise IrrationalParameterError(
                "irrational parameters {} are outside exact rational arithmetic".format(self)
            )
        return self.values

    def to_record(self) -> list[str] | str:
        if self.is_generic:
            return str(ParamTag.GENERIC)
        return [fraction_to_str(v) if isinstance(v, Fraction) else str(v) for v in self.values]

    def __str__(self) -> str:
        if self.is_generic:
            return str(ParamTag.GENERIC)
        return ",".join(fraction_to_str(v) if isinstance(v, Fraction) else str(v) for v in self.values)


@dataclass(frozen=True)
class ExponentTriple:
    at0: Fraction
    at1: Fraction
    atInf: Fraction

    @property
    def inverse_angles(self) -> tuple[Fraction, Fraction, Fraction]:
        """Back to (α⁻¹, β⁻¹, γ⁻¹) order."""
        return (self.atInf, self.at0, self.at1)

    @property
    def is_resonant(self) -> bool:
        """True when some exponent difference is an integer."""
        return any(e.denominator == 1 for e in (self.at0, self.at1, self.atInf))


@dataclass(frozen=True)
class HGParams:
    a: Fraction
    b: Fraction
    c: Fraction

    def check(self, exponents: ExponentTriple) -> Self:
        """Raise unless 1−c, c−a−b and a−b reproduce the exponent differences."""
        if (1 - self.c, self.c - self.a - self.b, self.a - self.b) != (exponents.at0, exponents.at1, exponents.atInf):
            raise SchwarzError("{} does not match exponent differences {}".format(self, exponents))
        return self


@dataclass(frozen=True)
class ODECoefficients:
    """``ψ″ + p ψ′ + q ψ = 0``."""
    p: RatFunc
    q: RatFunc

    def pole_order(self, point) -> int:
        return max(self.p.pole_order(point), self.q.pole_order(point))


def build_R(params: AngleParams) -> RatFunc:
    """R_{α,β,γ} with the inverse angles substituted."""
    e_alpha, e_beta, e_gamma = params.rational_values()
    a2, b2, g2 = e_alpha ** 2, e_beta ** 2, e_gamma ** 2

    y = RatFunc.identity()
    y_minus_1 = y - 1
    at_zero = (1 - b2) / (y * y)
    at_one = (1 - g2) / (y_minus_1 * y_minus_1)
    mixed = (b2 + g2 - a2 - 1) / (y * y_minus_1)
    return HALF * (at_zero + at_one + mixed)


def exponent_differences(params: AngleParams) -> ExponentTriple:
    e_alpha, e_beta, e_gamma = params.rational_values()
    return ExponentTriple(at0=e_beta, at1=e_gamma, atInf=e_alpha)


def to_hypergeometric(params: AngleParams) -> HGParams:
    e_alpha, e_beta, e_gamma = params.rational_values()
    hg = HGParams(
        a=HALF * (1 + e_alpha - e_beta - e_gamma),
        b=HALF * (1 - e_alpha - e_beta - e_gamma),
        c=1 - e_beta,
    )
    return hg.check(exponent_differences(params))


def hypergeometric_invariant(hg: HGParams) -> RatFunc:
    """
    Projective invariant ``2q − p²/2 − p′`` of the Gauss equation with
    parameters ``hg``. Removing the first-order term of that equation yields
    ψ″ + ½Rψ = 0 with R equal to this function.
    """
    y = RatFunc.identity()
    y_one_minus_y = y * (1 - y)
    p = (hg.c - (hg.a + hg.b + 1) * y) / y_one_minus_y
    q = -(hg.a * hg.b) / y_one_minus_y
    return 2 * q - HALF * p * p - p.derivative()


def linear_ode(R: RatFunc) -> ODECoefficients:
    """Coefficients of ψ″ + ½R(y)ψ = 0."""
    return ODECoefficients(p=RatFunc.constant(0), q=HALF * R)
