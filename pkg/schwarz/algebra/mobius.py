"""Möbius transformations with exact rational entries."""
from dataclasses import dataclass
from fractions import Fraction
from typing_extensions import Self

from schwarz.algebra.ratfunc import RatFunc, to_fraction
from schwarz.core.errors import PoleError, SchwarzError


@dataclass(frozen=True)
class MobiusMap:
    """``y ↦ (a y + b) / (c y + d)`` with ``ad − bc ≠ 0``."""
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, to_fraction(getattr(self, name)))
        if self.determinant == 0:
            raise SchwarzError("degenerate Möbius map: ad - bc = 0")

    @property
    def determinant(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    def as_ratfunc(self) -> RatFunc:
        return RatFunc.from_coefficients([self.b, self.a], [self.d, self.c])

    def inverse(self) -> Self:
        return MobiusMap(self.d, -self.b, -self.c, self.a)

    def __matmul__(self, other: Self) -> Self:
        """Composition ``self ∘ other`` as a matrix product."""
        return MobiusMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )


def mobius_apply(m: MobiusMap, f: RatFunc) -> RatFunc:
    """Post-compose ``f`` with ``m``: returns ``(a f + b) / (c f + d)``."""
    denominator = m.c * f + m.d
    if denominator.is_zero:
        raise PoleError("{} sends {} to infinity identically".format(m, f))
    return (m.a * f + m.b) / denominator
