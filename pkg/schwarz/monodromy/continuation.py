"""
Analytic continuation of ψ″ + ½Rψ = 0 along paths in the complex plane.

A path is a sequence of legs, each parameterized by s ∈ [0, 1]. Along a leg
the fundamental matrix

    Y = [[ψ₁, ψ₂], [ψ₁′, ψ₂′]]

obeys dY/ds = z′(s) · [[0, 1], [−q(z), −p(z)]] · Y, with p = 0 and q = ½R taken
from the equation's coefficient record. scipy integrates it as a complex
first-order system.
"""
import logging
from dataclasses import dataclass
from typing import Iterable, Protocol, Sequence

import numpy as np
from scipy.integrate import solve_ivp

from schwarz.algebra.ratfunc import RatFunc
from schwarz.core.config import AppSettings, app_settings
from schwarz.core.errors import ContinuationError, PoleError, SchwarzError
from schwarz.equation.triangle_equation import ODECoefficients, linear_ode

logger = logging.getLogger()

CLOSURE_TOLERANCE = 1e-12


class Leg(Protocol):
    start: complex
    end: complex

    def point(self, s: float) -> complex: ...

    def velocity(self, s: float) -> complex: ...

    def distance_to(self, p: complex) -> float: ...


@dataclass(frozen=True)
class Segment:
    start: complex
    end: complex

    def point(self, s: float) -> complex:
        return self.start + s * (self.end - self.start)

    def velocity(self, s: float) -> complex:
        return self.end - self.start

    def distance_to(self, p: complex) -> float:
        direction = self.end - self.start
        if direction == 0:
            return abs(p - self.start)
        s = ((p - self.start) * direction.conjugate()).real / abs(direction) ** 2
        return abs(p - self.point(min(1.0, max(0.0, s))))


@dataclass(frozen=True)
class Arc:
    """Circular arc from angle ``start_angle`` sweeping ``sweep`` radians (ccw when positive)."""
    center: complex
    radius: float
    start_angle: float
    sweep: float

    @property
    def start(self) -> complex:
        return self.point(0.0)

    @property
    def end(self) -> complex:
        return self.point(1.0)

    def point(self, s: float) -> complex:
        return self.center + self.radius * np.exp(1j * (self.start_angle + s * self.sweep))

    def velocity(self, s: float) -> complex:
        return 1j * self.sweep * self.radius * np.exp(1j * (self.start_angle + s * self.sweep))

    def distance_to(self, p: complex) -> float:
        offset = p - self.center
        if offset != 0 and abs(self.sweep) < 2 * np.pi:
            angle = (np.angle(offset) - self.start_angle) * np.sign(self.sweep) % (2 * np.pi)
            if angle > abs(self.sweep):
                return min(abs(p - self.start), abs(p - self.end))
        return abs(abs(offset) - self.radius)


def as_legs(path: Iterable) -> list[Leg]:
    """Accept legs, or a polyline of complex points turned into segments."""
    path = list(path)
    if path and all(isinstance(p, (complex, float, int)) for p in path):
        if len(path) < 2:
            raise SchwarzError("a polyline needs at least two points")
        return [Segment(complex(a), complex(b)) for a, b in zip(path, path[1:])]
    return path


def path_clearance(legs: Sequence[Leg], poles: np.ndarray) -> float:
    """Smallest distance between the path and a pole."""
    if poles.size == 0:
        return float("inf")
    return min(leg.distance_to(complex(p)) for leg in legs for p in poles)


def is_closed(legs: Sequence[Leg]) -> bool:
    return abs(legs[-1].end - legs[0].start) <= CLOSURE_TOLERANCE


def _transport(ode: ODECoefficients, leg: Leg, Y: np.ndarray, settings: AppSettings) -> np.ndarray:
    p_num, p_den = ode.p.numeric_num, ode.p.numeric_den
    q_num, q_den = ode.q.numeric_num, ode.q.numeric_den

    def rhs(s, y):
        z = leg.point(s)
        p = np.polyval(p_num, z) / np.polyval(p_den, z)
        q = np.polyval(q_num, z) / np.polyval(q_den, z)
        m = y.reshape(2, 2)
        dm = np.array([m[1], -p * m[1] - q * m[0]])
        return (leg.velocity(s) * dm).ravel()

    sol = solve_ivp(
        rhs,
        (0.0, 1.0),
        Y.ravel(),
        method=settings.integrator_method,
        rtol=settings.integrator_rtol,
        atol=settings.integrator_atol,
    )
    if not sol.success:
        raise ContinuationError("integration along {} failed: {}".format(leg, sol.message))
    return sol.y[:, -1].reshape(2, 2)


def continue_solution(R: RatFunc, path, settings: AppSettings = app_settings) -> np.ndarray:
    """
    Transport the fundamental matrix, equal to the identity at the start of
    ``path``, to its end. For a closed path the result is the monodromy
    matrix in the basis normalized at the start point.
    """
    legs = as_legs(path)
    if not legs:
        raise SchwarzError("empty path")
    clearance = path_clearance(legs, R.poles())
    if clearance < settings.pole_clearance:
        raise PoleError("path passes within {:.2e} of a pole of R".format(clearance))

    ode = linear_ode(R)
    Y = np.eye(2, dtype=complex)
    for leg in legs:
        Y = _transport(ode, leg, Y, settings)
    return Y
