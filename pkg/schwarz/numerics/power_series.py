"""
Truncated power series about a base point.

``PowerSeries(c, base_point=p)`` represents

    c[0] + c[1]*(y-p) + c[2]*(y-p)**2 + ... + c[n]*(y-p)**n

with ``n`` the truncation order; coefficients beyond ``n`` are unknown, not
zero. Arithmetic between two series keeps the smaller order and requires the
same base point.

Coefficients are either all exact (``Fraction``, held in an object array) or
double-precision complex. Exact series are what the Wronskian and inversion
identities are checked on; residual checks use complex series.
"""
import logging
from fractions import Fraction
from math import comb
from numbers import Rational
from typing_extensions import Self

import numpy as np

from schwarz.algebra.ratfunc import RatFunc
from schwarz.core.errors import DegenerateSeriesError, OrderTooSmallError, PoleError, SchwarzError

logger = logging.getLogger()

BASE_POINT_TOLERANCE = 1e-12


def _is_exact(value) -> bool:
    return isinstance(value, Rational)


def _as_array(coefficients) -> np.ndarray:
    values = list(coefficients)
    if values and all(_is_exact(v) for v in values):
        return np.array([Fraction(v) for v in values], dtype=object)
    return np.array([complex(v) for v in values], dtype=complex)


def _zeros_like(c: np.ndarray, length: int) -> np.ndarray:
    if c.dtype == object:
        return np.array([Fraction(0)] * length, dtype=object)
    return np.zeros(length, dtype=complex)


def _convolve(a: np.ndarray, b: np.ndarray, order: int) -> np.ndarray:
    """First ``order + 1`` coefficients of the product."""
    if a.dtype != object and b.dtype != object:
        return np.convolve(a, b)[:order + 1]
    ans = np.array([Fraction(0)] * (order + 1), dtype=object)
    for n in range(order + 1):
        total = Fraction(0)
        for i in range(max(0, n - len(b) + 1), min(n, len(a) - 1) + 1):
            total = total + a[i] * b[n - i]
        ans[n] = total
    return ans


def _same_point(p, q) -> bool:
    if _is_exact(p) and _is_exact(q):
        return p == q
    return abs(complex(p) - complex(q)) <= BASE_POINT_TOLERANCE * max(1.0, abs(complex(p)))


class PowerSeries(object):
    """
    Power series representation of a function near ``base_point``.

    :param c: coefficients in ascending order.
    :param base_point: expansion point.
    :param order: highest power kept; ``c`` is padded with zeros or truncated.
    """

    def __init__(self, c, base_point=0, order: int | None = None):
        if isinstance(c, PowerSeries):
            c = c.c
        c = _as_array(c)
        if order is None:
            if len(c) == 0:
                raise ValueError("empty coefficient array")
            order = len(c) - 1
        if order < 0:
            raise ValueError("order cannot be less than zero: order = {}".format(order))
        if order < len(c):
            c = c[:order + 1]
        else:
            padded = _zeros_like(c, order + 1)
            padded[:len(c)] = c
            c = padded
        self.c = c
        self.base_point = base_point

    @property
    def order(self) -> int:
        """Highest power in the series."""
        return len(self.c) - 1

    @property
    def is_exact(self) -> bool:
        return self.c.dtype == object

    def __getitem__(self, i):
        return self.c[i]

    def __iter__(self):
        return iter(self.c)

    def __len__(self) -> int:
        return len(self.c)

    def _check_base(self, other: Self) -> None:
        if not _same_point(self.base_point, other.base_point):
            raise SchwarzError(
                "series about different points: {} and {}".format(self.base_point, other.base_point)
            )

    def _like(self, c) -> Self:
        return PowerSeries(c, base_point=self.base_point)

    def __add__(self, x) -> Self:
        if isinstance(x, PowerSeries):
            self._check_base(x)
            order = min(self.order, x.order)
            return self._like(self.c[:order + 1] + x.c[:order + 1])
        ans = self.c.copy()
        ans[0] = ans[0] + x
        return self._like(ans)

    def __radd__(self, x) -> Self:
        return self + x

    def __neg__(self) -> Self:
        return self._like(-self.c)

    def __sub__(self, x) -> Self:
        return self + (-x)

    def __rsub__(self, x) -> Self:
        return -self + x

    def __mul__(self, x) -> Self:
        if isinstance(x, PowerSeries):
            self._check_base(x)
            order = min(self.order, x.order)
            return self._like(_convolve(self.c, x.c, order))
        return self._like([x * ci for ci in self.c])

    def __rmul__(self, x) -> Self:
        return self * x

    def __truediv__(self, x) -> Self:
        if not isinstance(x, PowerSeries):
            return self._like([ci / x for ci in self.c])
        self._check_base(x)
        if x.c[0] == 0:
            raise ZeroDivisionError("leading coefficient of the denominator series is zero")
        order = min(self.order, x.order)
        ans = _zeros_like(self.c if self.is_exact and x.is_exact else np.zeros(0, complex), order + 1)
        for n in range(order + 1):
            total = self.c[n]
            for i in range(n):
                total = total - ans[i] * x.c[n - i]
            ans[n] = total / x.c[0]
        return self._like(ans)

    def __rtruediv__(self, x) -> Self:
        num = _zeros_like(self.c, len(self.c))
        num[0] = x
        return self._like(num) / self

    def __pow__(self, n: int) -> Self:
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        ans = PowerSeries([1], self.base_point, order=self.order)
        for _ in range(n):
            ans = ans * self
        return ans

    def deriv(self, n: int = 1) -> Self:
        """``n``-th derivative; the order drops by ``n``."""
        series = self
        for _ in range(n):
            if series.order == 0:
                raise OrderTooSmallError("cannot differentiate an order-0 series")
            series = series._like([k * ck for k, ck in enumerate(series.c) if k > 0])
        return series

    def __call__(self, y):
        """Evaluate at ``y`` (an absolute point, or an array of points)."""
        if self.is_exact and _is_exact(y) and _is_exact(self.base_point):
            coefficients, h = self.c, Fraction(y) - self.base_point
        else:
            coefficients = np.array([complex(ck) for ck in self.c])
            h = np.asarray(y, dtype=complex) - complex(self.base_point)
        ans = coefficients[-1]
        for ck in coefficients[-2::-1]:
            ans = ans * h + ck
        return ans

    def __str__(self) -> str:
        return str(self.c)

    def __repr__(self) -> str:
        return "PowerSeries({}, base_point={})".format(self.c.tolist(), self.base_point)


def taylor_shift(coefficients, base) -> list:
    """Ascending coefficients of a polynomial re-expanded about ``base``."""
    coefficients = list(coefficients)
    shifted = []
    for j in range(len(coefficients)):
        total = 0
        power = 1
        for i in range(j, len(coefficients)):
            total = total + coefficients[i] * comb(i, j) * power
            power = power * base
        shifted.append(total)
    return shifted


def series_from_ratfunc(f: RatFunc, base, order: int) -> PowerSeries:
    """Taylor series of ``f`` about ``base``; exact when ``base`` is rational."""
    if _is_exact(base):
        base = Fraction(base)
        num = taylor_shift(f.num_coefficients or (Fraction(0),), base)
        den = taylor_shift(f.den_coefficients, base)
    else:
        base = complex(base)
        num = taylor_shift([complex(c) for c in f.num_coefficients or (0,)], base)
        den = taylor_shift([complex(c) for c in f.den_coefficients], base)

    if den[0] == 0:
        raise PoleError("{} is a pole of {}".format(base, f))
    num_series = PowerSeries(num, base_point=base, order=order)
    den_series = PowerSeries(den, base_point=base, order=order)
    return num_series / den_series


def series_compose(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """``f ∘ g`` about ``g.base_point``; ``g`` must start at ``f.base_point``."""
    if not _same_point(g.c[0], f.base_point):
        raise SchwarzError("inner series starts at {}, outer is expanded at {}".format(g.c[0], f.base_point))
    order = min(f.order, g.order)
    h = PowerSeries(g.c[:order + 1], base_point=g.base_point)
    h.c[0] = h.c[0] * 0

    ans = PowerSeries([f.c[order]], base_point=g.base_point, order=order)
    for k in range(order - 1, -1, -1):
        ans = ans * h + f.c[k]
    return ans


def series_invert(t: PowerSeries) -> PowerSeries:
    """
    Compositional inverse ``J`` with ``J(t(p)) = p``, found order by order:
    the coefficient of u**k in ``h∘s`` depends on ``s_k`` only through
    ``h_1 s_k``.
    """
    if t.order < 1 or t.c[1] == 0:
        raise DegenerateSeriesError("cannot invert a series with vanishing first derivative")

    order = t.order
    h = PowerSeries(t.c, base_point=0)
    h.c[0] = h.c[0] * 0
    h1 = t.c[1]

    s = _zeros_like(t.c, order + 1)
    s[1] = 1 / h1
    for k in range(2, order + 1):
        inner = PowerSeries(s[:k + 1], base_point=0)
        inner.c[0] = inner.c[0] * 0
        composed = series_compose(PowerSeries(h.c[:k + 1], base_point=0), inner)
        s[k] = -composed.c[k] / h1

    s[0] = t.base_point
    return PowerSeries(s, base_point=t.c[0])


def series_schwarzian(t: PowerSeries) -> PowerSeries:
    """S(t) = t‴/t′ − 3/2 (t″/t′)², three orders shorter than ``t``."""
    if t.order < 3:
        raise OrderTooSmallError("the Schwarzian needs a series of order at least 3")
    d1 = t.deriv()
    if d1.c[0] == 0:
        raise DegenerateSeriesError("Schwarzian of a series with vanishing first derivative")
    d2 = d1.deriv()
    d3 = d2.deriv()
    ratio = d2 / d1
    three_halves = Fraction(3, 2) if t.is_exact else 1.5
    return d3 / d1 - three_halves * ratio * ratio
