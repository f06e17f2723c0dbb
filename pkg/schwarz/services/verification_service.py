"""Service for the numerical residual checks."""
import logging

from schwarz.algebra.ratfunc import RatFunc
from schwarz.core.config import AppSettings, app_settings
from schwarz.core.enum_classes import VerifyKind
from schwarz.core.errors import SchwarzError
from schwarz.numerics.schwarz_map import (
    ResidualReport,
    residual_principal,
    residual_riccati,
    residual_star,
    verify_pullback,
)

logger = logging.getLogger()


class VerificationService:
    """Service layer for verifying the Schwarzian identities numerically."""
    def __init__(self, settings: AppSettings = None):
        """Initialize with numerical settings."""
        self.settings = settings or app_settings

    def verify(
        self,
        kind: VerifyKind,
        R: RatFunc,
        base,
        order: int,
        phi: RatFunc | None = None,
    ) -> ResidualReport:
        """Run the residual check named by ``kind``."""
        logger.info("Verifying {} at base {} with order {}".format(kind, base, order))
        if kind == VerifyKind.PRINCIPAL:
            return residual_principal(R, base, order, self.settings)
        if kind == VerifyKind.RICCATI:
            return residual_riccati(R, base, order, self.settings)
        if kind == VerifyKind.STAR:
            return residual_star(R, base, order, self.settings)
        if kind == VerifyKind.PULLBACK:
            if phi is None:
                raise SchwarzError("the pullback check needs a map Φ")
            return verify_pullback(R, phi, base, order, self.settings)
        raise SchwarzError("unknown verification {}".format(kind))
