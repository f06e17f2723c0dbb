"""
Schwarzian derivative and Schwarzian pullback on exact rational functions.

The Schwarzian of a non-constant ``f`` is

    S(f) = f‴/f′ − 3/2 (f″/f′)²

and it satisfies the cocycle law ``S(f∘g) = S(f)∘g · g′² + S(g)``. The
pullback of a potential ``R`` along ``Φ`` is the same expression with ``S(f)``
replaced by ``R``, so that ``S(f) = R`` is preserved: if ``S(J) = R`` then
``S(J∘Φ) = schwarz_pullback(R, Φ)``.
"""
from fractions import Fraction

from schwarz.algebra.ratfunc import RatFunc
from schwarz.core.errors import ConstantFunctionError

THREE_HALVES = Fraction(3, 2)


def derivative(f: RatFunc) -> RatFunc:
    return f.derivative()


def compose(f: RatFunc, g: RatFunc) -> RatFunc:
    """``f ∘ g``."""
    return f.compose(g)


def schwarzian(f: RatFunc) -> RatFunc:
    if f.is_constant:
        raise ConstantFunctionError("Schwarzian of the constant {}".format(f))
    d1 = f.derivative()
    d2 = d1.derivative()
    d3 = d2.derivative()
    ratio = d2 / d1
    return d3 / d1 - THREE_HALVES * ratio * ratio


def schwarz_pullback(R: RatFunc, phi: RatFunc) -> RatFunc:
    """``R∘Φ · Φ′² + S(Φ)``."""
    phi_prime = phi.derivative()
    return R.compose(phi) * phi_prime * phi_prime + schwarzian(phi)
