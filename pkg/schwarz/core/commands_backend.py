import logging
import time
from pathlib import Path

from schwarz.algebra.ratfunc import RatFunc
from schwarz.core.config import AppSettings, app_settings
from schwarz.core.enum_classes import Exit_Status, VerifyKind
from schwarz.core.errors import ParseError
from schwarz.core.records import CommandResult
from schwarz.core.utils import parse_fraction, parse_rational_expression
from schwarz.equation.triangle_equation import AngleParams, build_R
from schwarz.groups.triangle_groups import Signature
from schwarz.services.classification_service import ClassificationService
from schwarz.services.sweep_service import SweepService
from schwarz.services.verification_service import VerificationService

logger = logging.getLogger()


def _elapsed_ms(start: float) -> int:
    return int((time.perf_counter() - start) * 1000)


def parse_rational_function(text: str) -> RatFunc:
    """Either the ``[num]/[den]`` coefficient form or a rational expression in y."""
    if text.strip().startswith("["):
        return RatFunc.from_text(text)
    return parse_rational_expression(text)


class Commands_Backend:
    """Backend logic for the classification, verification and sweep commands."""
    def __init__(
        self,
        classification_service: ClassificationService = None,
        verification_service: VerificationService = None,
        sweep_service: SweepService = None,
        settings: AppSettings = None,
    ):
        """Initialize backend with its services."""
        self.settings = settings or app_settings
        self.classification_service = classification_service or ClassificationService()
        self.verification_service = verification_service or VerificationService(self.settings)
        self.sweep_service = sweep_service or SweepService(self.settings)

    def classify_equation(self, inv_angles: str) -> CommandResult:
        """Strong minimality verdict with its witness."""
        start = time.perf_counter()
        params = AngleParams.from_text(inv_angles)
        verdict = self.classification_service.classify_equation(params)
        return CommandResult(
            command="classify-equation",
            inputs={"inv_angles": params.to_record()},
            result=verdict.to_record(),
            elapsed_ms=_elapsed_ms(start),
        )

    def classify_group(self, sig: str) -> CommandResult:
        """Geometry, arithmeticity, maximality and special polynomials of a signature."""
        start = time.perf_counter()
        signature = Signature.from_text(sig)
        report = self.classification_service.classify_group(signature)
        return CommandResult(
            command="classify-group",
            inputs={"sig": str(signature)},
            result=report,
            elapsed_ms=_elapsed_ms(start),
        )

    def __resolve_R(self, inv_angles: str | None, rational_function: str | None) -> RatFunc:
        if (inv_angles is None) == (rational_function is None):
            raise ParseError("give exactly one of --inv-angles and --rational-function")
        if inv_angles is not None:
            return build_R(AngleParams.from_text(inv_angles))
        return parse_rational_function(rational_function)

    def verify(
        self,
        kind: str,
        inv_angles: str | None = None,
        rational_function: str | None = None,
        phi: str | None = None,
        order: int | None = None,
        tol: float | None = None,
        base: str | None = None,
    ) -> CommandResult:
        """Residual report with pass/fail against ``tol``."""
        start = time.perf_counter()
        kind = VerifyKind(kind)
        R = self.__resolve_R(inv_angles, rational_function)
        phi_func = parse_rational_expression(phi) if phi is not None else None
        if kind == VerifyKind.PULLBACK and phi_func is None:
            raise ParseError("verify pullback needs --phi")

        order = self.settings.default_order if order is None else order
        tol = self.settings.default_tolerance if tol is None else tol
        base_value = parse_fraction(base if base is not None else self.settings.base_point)

        report = self.verification_service.verify(kind, R, base_value, order, phi=phi_func)
        passed = report.passes(tol)
        result = report.to_record()
        result.update({"tolerance": tol, "passed": passed})

        inputs = {
            "kind": str(kind),
            "R": R.to_text(),
            "order": order,
            "base": base if base is not None else self.settings.base_point,
        }
        if phi_func is not None:
            inputs["phi"] = phi_func.to_text()
        return CommandResult(
            command="verify",
            inputs=inputs,
            result=result,
            status=(Exit_Status.OKAY if passed else Exit_Status.FAIL).value,
            elapsed_ms=_elapsed_ms(start),
        )

    def sweep(
        self, max_den: int | None = None, out: Path | None = None, workers: int | None = None
    ) -> tuple[CommandResult, list[dict]]:
        """Kimura verdict against the oracle for every triple; records and a summary."""
        start = time.perf_counter()
        max_den = self.settings.sweep_max_denominator if max_den is None else max_den
        if max_den < 2:
            raise ParseError("--max-den must be at least 2, got {}".format(max_den))

        records = self.sweep_service.run(max_den, workers)
        if out is not None:
            self.sweep_service.write_records(records, out)

        summary = self.sweep_service.summarize(records)
        return CommandResult(
            command="sweep",
            inputs={"max_den": max_den, "out": str(out) if out is not None else None},
            result=summary,
            status=(Exit_Status.OKAY if summary["disagree"] == 0 else Exit_Status.FAIL).value,
            elapsed_ms=_elapsed_ms(start),
        ), records
