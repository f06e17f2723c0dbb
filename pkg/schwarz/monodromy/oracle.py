"""
Numerical monodromy oracle for the triangle equation.

Positively oriented loops around 0 and 1 based at ½ give matrices M0, M1 in
the fundamental basis normalized at the base point. Their projective images
generate the projective monodromy group, which is finite, dihedral,
triangularizable or Zariski dense in PSL₂; the first three are exactly the
integrable cases, so the oracle cross-checks the exact classifier.

Locally at 0 the exponents of ψ″ + ½Rψ = 0 are (1 ± β⁻¹)/2, so the
eigenvalues of M0 are −e^{±iπβ⁻¹} and trace(M0) = −2cos(πβ⁻¹); likewise at
1 with γ⁻¹.
"""
import logging
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from scipy.special import hyp2f1

from schwarz.core.config import AppSettings, app_settings
from schwarz.core.enum_classes import ProjectiveKind
from schwarz.core.errors import ContinuationError, InconclusiveError, SchwarzError
from schwarz.equation.triangle_equation import (
    AngleParams,
    ExponentTriple,
    HGParams,
    build_R,
    exponent_differences,
    to_hypergeometric,
)
from schwarz.monodromy.continuation import Arc, Segment, continue_solution, is_closed

logger = logging.getLogger()


@dataclass(frozen=True)
class LoopSpec:
    base_point: complex
    center: complex
    radius: float
    steps: int

    def __post_init__(self):
        if not 0 < self.radius < 0.5:
            raise SchwarzError("loop radius must lie in (0, 1/2), got {}".format(self.radius))
        if abs(self.base_point - self.center) <= self.radius:
            raise SchwarzError("base point {} lies inside the loop around {}".format(self.base_point, self.center))
        if self.steps < 1:
            raise SchwarzError("a loop needs at least one arc")

    def legs(self) -> list:
        """Out to the circle, once around counter-clockwise, and back."""
        offset = complex(self.base_point) - complex(self.center)
        angle = float(np.angle(offset))
        on_circle = complex(self.center) + self.radius * offset / abs(offset)
        sweep = 2 * np.pi / self.steps

        legs = [Segment(complex(self.base_point), on_circle)]
        legs.extend(Arc(complex(self.center), self.radius, angle + k * sweep, sweep) for k in range(self.steps))
        legs.append(Segment(on_circle, complex(self.base_point)))
        return legs


@dataclass
class MonodromyRep:
    M0: np.ndarray
    M1: np.ndarray
    estimated_error: float
    exponents: ExponentTriple | None = None
    resonant: bool = False

    @property
    def generators(self) -> tuple[np.ndarray, np.ndarray]:
        return (self.M0, self.M1)

    def to_record(self) -> dict:
        def matrix(m: np.ndarray) -> list:
            return [[[complex(x).real, complex(x).imag] for x in row] for row in m]

        return {
            "M0": matrix(self.M0),
            "M1": matrix(self.M1),
            "estimated_error": self.estimated_error,
            "resonant": self.resonant,
        }


@dataclass(frozen=True)
class ProjectiveClass:
    kind: ProjectiveKind
    tolerance_used: float
    order: int | None = None
    max_order: int | None = field(default=None)
    max_word_length: int | None = field(default=None)

    def to_record(self) -> dict:
        record = {
            "kind": str(self.kind),
            "tolerance_used": self.tolerance_used,
            "max_order": self.max_order,
            "max_word_length": self.max_word_length,
        }
        if self.order is not None:
            record["order"] = self.order
        return record


def loop_matrix(R, loop: LoopSpec, settings: AppSettings = app_settings) -> np.ndarray:
    legs = loop.legs()
    if not is_closed(legs):
        raise ContinuationError("loop around {} does not return to its base point".format(loop.center))
    return continue_solution(R, legs, settings)


def monodromy(
    params: AngleParams,
    base=None,
    radius: float | None = None,
    steps: int | None = None,
    settings: AppSettings = app_settings,
) -> MonodromyRep:
    """M0 and M1 for the triangle equation with exact ``params``."""
    exponents = exponent_differences(params)
    R = build_R(params)
    base = complex(settings.base_fraction if base is None else base)
    radius = settings.loop_radius if radius is None else radius
    steps = settings.loop_arc_pieces if steps is None else steps

    M0 = loop_matrix(R, LoopSpec(base, 0j, radius, steps), settings)
    M1 = loop_matrix(R, LoopSpec(base, 1 + 0j, radius, steps), settings)
    error = max(abs(np.linalg.det(M0) - 1), abs(np.linalg.det(M1) - 1))

    if exponents.is_resonant:
        logger.warning("Integer exponent difference in {}; logarithmic solutions possible".format(exponents))
    return MonodromyRep(M0, M1, float(error), exponents, exponents.is_resonant)


# Projective geometry of 2x2 matrices

def _norm(m: np.ndarray) -> float:
    return float(np.linalg.norm(m))


def projectively_equal(A: np.ndarray, B: np.ndarray, tol: float) -> bool:
    """Equality in PSL₂ up to ``tol``, relative to the size of ``A``."""
    return min(_norm(A - B), _norm(A + B)) <= tol * max(1.0, _norm(A))


def _is_scalar(M: np.ndarray, tol: float) -> bool:
    return _norm(M - np.trace(M) / 2 * np.eye(2)) <= tol * max(1.0, _norm(M))


def _eigenlines(M: np.ndarray, tol: float) -> list[np.ndarray] | None:
    """Unit eigenvectors of ``M``; ``None`` when every line is an eigenline."""
    if _is_scalar(M, tol):
        return None
    _, vectors = np.linalg.eig(M)
    return [vectors[:, 0], vectors[:, 1]]


def _parallel(v: np.ndarray, w: np.ndarray, tol: float) -> bool:
    return abs(v[0] * w[1] - v[1] * w[0]) <= tol * np.linalg.norm(v) * np.linalg.norm(w)


def _sends(M: np.ndarray, v: np.ndarray, w: np.ndarray, tol: float) -> bool:
    """True when ``M`` maps the line of ``v`` onto the line of ``w``."""
    return _parallel(M @ v, w, tol)


def shares_eigenvector(M0: np.ndarray, M1: np.ndarray, tol: float) -> bool:
    lines0 = _eigenlines(M0, tol)
    lines1 = _eigenlines(M1, tol)
    if lines0 is None or lines1 is None:
        return True
    return any(_sends(M1, v, v, tol) for v in lines0)


def preserved_line_pair(M0: np.ndarray, M1: np.ndarray, tol: float) -> tuple | None:
    """An unordered pair of lines that both generators fix or swap, if one exists."""
    for M in (M0, M1, M0 @ M1):
        lines = _eigenlines(M, tol)
        if lines is None or _parallel(lines[0], lines[1], tol):
            continue
        v, w = lines
        if all(
            (_sends(G, v, v, tol) and _sends(G, w, w, tol)) or (_sends(G, v, w, tol) and _sends(G, w, v, tol))
            for G in (M0, M1)
        ):
            return (v, w)
    return None


def projective_order(g: np.ndarray, max_order: int, tol: float) -> int | None:
    """Order of ``g`` in PSL₂, ``None`` when it is infinite."""
    g = g / np.sqrt(np.linalg.det(g))
    if _is_scalar(g, tol):
        return 1
    trace = np.trace(g)
    if abs(trace * trace - 4) <= tol:
        return None
    eigenvalues = np.linalg.eigvals(g)
    ratio = eigenvalues[0] / eigenvalues[1]
    if abs(abs(ratio) - 1) > tol:
        return None
    turns = (np.angle(ratio) / (2 * np.pi)) % 1.0
    approx = Fraction(turns).limit_denominator(max_order)
    if abs(turns - float(approx)) > tol:
        return None
    return approx.denominator


def group_closure(
    generators: tuple[np.ndarray, ...], tol: float, max_order: int, max_word_length: int
) -> tuple[int | None, list[np.ndarray]]:
    """
    Breadth-first closure of the projectivized group. Returns its order, or
    ``None`` when a cap was reached first, together with the elements seen.
    """
    elements = [np.eye(2, dtype=complex)]
    queue = deque([(elements[0], 0)])
    truncated = False

    while queue:
        g, length = queue.popleft()
        if length >= max_word_length:
            truncated = True
            continue
        for gen in generators:
            h = g @ gen
            if any(projectively_equal(h, e, tol) for e in elements):
                continue
            elements.append(h)
            if len(elements) > max_order:
                logger.debug("group closure passed {} elements".format(max_order))
                return None, elements
            queue.append((h, length + 1))

    if truncated:
        logger.debug("group closure stopped at word length {}".format(max_word_length))
        return None, elements
    return len(elements), elements


def classify_projective(
    rep: MonodromyRep,
    tol: float | None = None,
    max_order: int | None = None,
    max_word_length: int | None = None,
    settings: AppSettings = app_settings,
) -> ProjectiveClass:
    """
    Finite, then triangularizable, then dihedral; Dense needs a positive
    certificate, an element of infinite order or of order above
    ``dense_order_bound`` (the finite primitive subgroups of PSL₂ have
    element orders at most 5). Raises :class:`InconclusiveError` otherwise.
    """
    tol = settings.projective_tolerance if tol is None else tol
    max_order = settings.max_group_order if max_order is None else max_order
    max_word_length = settings.max_word_length if max_word_length is None else max_word_length

    def verdict(kind: ProjectiveKind, order: int | None = None) -> ProjectiveClass:
        return ProjectiveClass(kind, tol, order, max_order, max_word_length)

    M0, M1 = rep.generators
    generators = (M0, M1, np.linalg.inv(M0), np.linalg.inv(M1))
    order, elements = group_closure(generators, tol, max_order, max_word_length)
    if order is not None:
        return verdict(ProjectiveKind.FINITE, order)
    if shares_eigenvector(M0, M1, tol):
        return verdict(ProjectiveKind.TRIANGULARIZABLE)
    if preserved_line_pair(M0, M1, tol) is not None:
        return verdict(ProjectiveKind.DIHEDRAL)

    for g in [M0, M1, M0 @ M1] + elements:
        n = projective_order(g, max_order, tol)
        if n is None or n > settings.dense_order_bound:
            return verdict(ProjectiveKind.DENSE)

    logger.warning("Projective monodromy could not be certified within caps {} / {}".format(max_order, max_word_length))
    raise InconclusiveError(
        "no finite closure within {} elements and no density certificate".format(max_order)
    )


# Validation against the Gauss series

def gauss_local_solution(hg: HGParams, y: float) -> tuple[float, float]:
    """
    ψ = y^{c/2} (1−y)^{(a+b+1−c)/2} ₂F₁(a, b; c; y) and ψ′ for real y in (0, 1).
    """
    a, b, c = float(hg.a), float(hg.b), float(hg.c)
    if hg.c.denominator == 1 and hg.c <= 0:
        raise SchwarzError("₂F₁ is undefined for c = {}".format(hg.c))
    if not 0 < y < 1:
        raise SchwarzError("the Gauss series is used on (0, 1) only, got {}".format(y))

    k = (a + b + 1 - c) / 2
    prefactor = y ** (c / 2) * (1 - y) ** k
    f = hyp2f1(a, b, c, y)
    df = a * b / c * hyp2f1(a + 1, b + 1, c + 1, y)
    psi = prefactor * f
    dpsi = psi * (c / (2 * y) - k / (1 - y)) + prefactor * df
    return float(psi), float(dpsi)


def validate_continuation(
    params: AngleParams, start: float = 0.25, end: float = 0.75, settings: AppSettings = app_settings
) -> float:
    """Relative discrepancy between the continued and the closed-form Gauss solution at ``end``."""
    hg = to_hypergeometric(params)
    R = build_R(params)
    initial = np.array(gauss_local_solution(hg, start), dtype=complex)
    expected = np.array(gauss_local_solution(hg, end), dtype=complex)

    Y = continue_solution(R, [Segment(complex(start), complex(end))], settings)
    transported = Y @ initial
    discrepancy = float(np.max(np.abs(transported - expected)) / max(1.0, float(np.max(np.abs(expected)))))
    logger.debug("Gauss validation for {}: {:.3e}".format(params, discrepancy))
    return discrepancy
