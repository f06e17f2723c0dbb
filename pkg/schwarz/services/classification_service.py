"""Service for the exact classifiers."""
import logging

from schwarz.classifier.kimura import MinimalityVerdict, classify
from schwarz.core.enum_classes import Geometry
from schwarz.equation.triangle_equation import AngleParams
from schwarz.groups.triangle_groups import Signature, geometry, group_report, is_maximal, signature_to_params

logger = logging.getLogger()


class ClassificationService:
    """Service layer for equation and signature classification."""

    def classify_equation(self, params: AngleParams) -> MinimalityVerdict:
        """Strong minimality verdict for the triangle equation with ``params``."""
        verdict = classify(params)
        logger.debug("{} -> {}".format(params, verdict.verdict))
        return verdict

    def classify_group(self, sig: Signature) -> dict:
        """Flat report on ``sig``; hyperbolic-only fields are null otherwise."""
        geo = geometry(sig)
        record = {"signature": str(sig), "geometry": str(geo)}

        if geo == Geometry.HYPERBOLIC:
            record.update(group_report(sig).to_record())
            record["flags"] = []
        else:
            maximal = is_maximal(sig)
            record.update({
                "arithmetic": None,
                "maximal": maximal,
                "in_M": not maximal,
                "in_W": None,
                "special_polynomials": None,
                "flags": ["non_hyperbolic"],
            })

        record["equation"] = self.classify_equation(signature_to_params(sig)).to_record()
        return record
