"""
Local Schwarz maps and the residual checks built on them.

At an ordinary point ``p`` of ψ″ + ½Rψ = 0 the solutions ψ₁, ψ₂ with
(ψ₁, ψ₁′) = (1, 0) and (ψ₂, ψ₂′) = (0, 1) at ``p`` are computed by
coefficient recursion. Their quotient ``t = ψ₂/ψ₁`` satisfies S_y(t) = R(y);
``ψ₁/ψ₂`` would have a pole at ``p``, and the two differ by a Möbius map so
either is a Schwarz map. The inverse series J of ``t`` solves

    S_t(J) + (J′)² R(J) = 0.

Residuals are evaluated against the exact R at sample points of a disk well
inside the convergence region, never against R's own truncated series.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from schwarz.algebra.ratfunc import RatFunc
from schwarz.algebra.schwarzian import schwarz_pullback
from schwarz.core.config import AppSettings, app_settings
from schwarz.core.enum_classes import VerifyKind
from schwarz.core.errors import DegenerateSeriesError, OrderTooSmallError, PoleError, SchwarzError
from schwarz.equation.triangle_equation import linear_ode
from schwarz.numerics.power_series import (
    PowerSeries,
    series_compose,
    series_from_ratfunc,
    series_invert,
    series_schwarzian,
)

logger = logging.getLogger()

# A univalent map with unit derivative sends a disk of radius ρ onto a region
# containing the concentric disk of radius ρ/4.
KOEBE_FACTOR = 0.25


@dataclass
class ResidualReport:
    kind: VerifyKind
    sample_points: list[complex]
    max_abs_residual: float
    truncation_order: int
    companion_residual: float | None = field(default=None)

    def __post_init__(self):
        if not self.max_abs_residual >= 0:
            raise SchwarzError("residual must be a non-negative number, got {}".format(self.max_abs_residual))

    def passes(self, tolerance: float) -> bool:
        worst = self.max_abs_residual
        if self.companion_residual is not None:
            worst = max(worst, self.companion_residual)
        return worst < tolerance

    def to_record(self) -> dict:
        record = {
            "kind": str(self.kind),
            "sample_points": [[float(z.real), float(z.imag)] for z in self.sample_points],
            "max_abs_residual": self.max_abs_residual,
            "truncation_order": self.truncation_order,
        }
        if self.companion_residual is not None:
            record["companion_residual"] = self.companion_residual
        return record


def _ensure_ordinary(R: RatFunc, base, settings: AppSettings) -> None:
    if isinstance(base, Fraction):
        if R.pole_order(base) > 0:
            raise PoleError("base point {} is a pole of R".format(base))
    elif R.distance_to_poles(base) < settings.pole_clearance:
        raise PoleError("base point {} is a pole of R".format(base))


def series_solve_linear(
    R: RatFunc,
    base,
    order: int,
    exact: bool = False,
    settings: AppSettings = app_settings,
) -> tuple[PowerSeries, PowerSeries]:
    """The normalized fundamental pair (ψ₁, ψ₂) of ψ″ + ½Rψ = 0 at ``base``."""
    if order < 2:
        raise OrderTooSmallError("series solutions need order at least 2, got {}".format(order))
    if exact:
        if not isinstance(base, (int, Fraction)):
            raise SchwarzError("exact series need a rational base point, got {}".format(base))
        base = Fraction(base)
    else:
        base = complex(base)
    _ensure_ordinary(R, base, settings)

    q = series_from_ratfunc(linear_ode(R).q, base, order)
    zero = q.c[0] * 0
    solutions = []
    for value, slope in ((1, 0), (0, 1)):
        a = [zero + value, zero + slope]
        # (k+2)(k+1) a[k+2] = -sum q[j] a[k-j]
        for k in range(order - 1):
            total = zero
            for j in range(k + 1):
                total = total + q.c[j] * a[k - j]
            a.append(-total / ((k + 2) * (k + 1)))
        solutions.append(PowerSeries(a, base_point=base))
    return solutions[0], solutions[1]


def wronskian(psi1: PowerSeries, psi2: PowerSeries) -> PowerSeries:
    return psi1 * psi2.deriv() - psi2 * psi1.deriv()


def schwarz_map(R: RatFunc, base, order: int, exact: bool = False) -> PowerSeries:
    """``t = ψ₂/ψ₁``, with t(base) = 0 and t′(base) = 1."""
    psi1, psi2 = series_solve_linear(R, base, order, exact=exact)
    t = psi2 / psi1
    if t.c[1] == 0:
        raise DegenerateSeriesError("Schwarz map with vanishing derivative at {}".format(base))
    return t


def sample_disk(center: complex, radius: float, settings: AppSettings = app_settings) -> np.ndarray:
    """The center plus ``sample_rings`` concentric circles of ``sample_angles`` points."""
    angles = 2 * np.pi * np.arange(settings.sample_angles) / settings.sample_angles
    points = [complex(center)]
    for ring in range(1, settings.sample_rings + 1):
        r = radius * ring / settings.sample_rings
        points.extend(complex(center) + r * np.exp(1j * angles))
    return np.array(points, dtype=complex)


def sample_radius(R: RatFunc, base, settings: AppSettings = app_settings) -> float:
    """Sample disk radius: a fraction of the distance to R's nearest pole (1 without poles)."""
    distance = R.distance_to_poles(complex(base))
    if distance == float("inf"):
        distance = 1.0
    return settings.sample_disk_fraction * distance


def star_residual(J: PowerSeries, R: RatFunc, taus: np.ndarray) -> float:
    """max |S_t(J) + (J′)² R(J)| over ``taus``."""
    s = series_schwarzian(J)
    dJ = J.deriv()
    values = s(taus) + dJ(taus) ** 2 * R.evaluate(J(taus))
    return float(np.max(np.abs(values)))


def _max_residual(values) -> float:
    return float(np.max(np.abs(values)))


def residual_principal(
    R: RatFunc, base, order: int, settings: AppSettings = app_settings
) -> ResidualReport:
    """|S_y(t) − R(y)| for the Schwarz map t at ``base``."""
    t = schwarz_map(R, base, order)
    s = series_schwarzian(t)
    points = sample_disk(base, sample_radius(R, base, settings), settings)
    residual = _max_residual(s(points) - R.evaluate(points))
    logger.debug("principal residual at order {}: {:.3e}".format(order, residual))
    return ResidualReport(VerifyKind.PRINCIPAL, list(points), residual, order)


def residual_riccati(
    R: RatFunc, base, order: int, settings: AppSettings = app_settings
) -> ResidualReport:
    """|u′ + u² + ½R| for the logarithmic derivative u = ψ₁′/ψ₁."""
    if order < settings.min_riccati_order:
        raise OrderTooSmallError(
            "the Riccati check needs order at least {}, got {}".format(settings.min_riccati_order, order)
        )
    psi1, _ = series_solve_linear(R, base, order, settings=settings)
    u = psi1.deriv() / psi1
    points = sample_disk(base, sample_radius(R, base, settings), settings)
    residual = _max_residual(u.deriv()(points) + u(points) ** 2 + 0.5 * R.evaluate(points))
    logger.debug("Riccati residual at order {}: {:.3e}".format(order, residual))
    return ResidualReport(VerifyKind.RICCATI, list(points), residual, order)


def _tau_disk(t: PowerSeries, radius_y: float, settings: AppSettings) -> np.ndarray:
    radius = radius_y * KOEBE_FACTOR * abs(complex(t.c[1]))
    return sample_disk(t.c[0], radius, settings)


def residual_star(
    R: RatFunc, base, order: int, settings: AppSettings = app_settings
) -> ResidualReport:
    """(⋆)-residual of J, the inverse of the Schwarz map, near t(base)."""
    t = schwarz_map(R, base, order)
    J = series_invert(t)
    taus = _tau_disk(t, sample_radius(R, base, settings), settings)
    residual = star_residual(J, R, taus)
    logger.debug("star residual at order {}: {:.3e}".format(order, residual))
    return ResidualReport(VerifyKind.STAR, list(taus), residual, order)


def verify_pullback(
    R: RatFunc, phi: RatFunc, base, order: int, settings: AppSettings = app_settings
) -> ResidualReport:
    """
    Solve (⋆) for ``R_Φ`` by J₂ at ``base``, push it forward to J₁ = Φ∘J₂
    and report the (⋆)-residual of J₁ against R. The companion residual is
    that of J₂ against R_Φ, so a passing report shows both equations solved
    by the pair (J₁, J₂).
    """
    if phi.is_constant:
        raise DegenerateSeriesError("pullback along the constant map {}".format(phi))
    R_phi = schwarz_pullback(R, phi)
    phi_prime = phi.derivative()

    if isinstance(base, Fraction):
        if phi.pole_order(base) > 0:
            raise PoleError("base point {} is a pole of Φ".format(base))
        if phi_prime(base) == 0:
            raise DegenerateSeriesError("Φ is ramified at {}; J₁ = Φ∘J₂ is not invertible there".format(base))
        image = phi(base)
    else:
        if phi.distance_to_poles(base) < settings.pole_clearance:
            raise PoleError("base point {} is a pole of Φ".format(base))
        if abs(complex(phi_prime.evaluate(complex(base)))) < settings.pole_clearance:
            raise DegenerateSeriesError("Φ is ramified at {}; J₁ = Φ∘J₂ is not invertible there".format(base))
        image = complex(phi.evaluate(complex(base)))
    _ensure_ordinary(R, image, settings)

    t2 = schwarz_map(R_phi, base, order)
    J2 = series_invert(t2)
    phi_series = series_from_ratfunc(phi, complex(base), order)
    J1 = series_compose(phi_series, J2)

    radius_y = min(sample_radius(R_phi, base, settings), sample_radius(phi, base, settings))
    taus = _tau_disk(t2, radius_y, settings)

    residual = star_residual(J1, R, taus)
    companion = star_residual(J2, R_phi, taus)
    logger.debug("pullback residuals at order {}: {:.3e} / {:.3e}".format(order, residual, companion))
    return ResidualReport(VerifyKind.PULLBACK, list(taus), residual, order, companion_residual=companion)
