"""Service comparing the exact classifier with the monodromy oracle over rational triples."""
import itertools
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from schwarz.classifier.kimura import classify
from schwarz.core.config import AppSettings, app_settings
from schwarz.core.enum_classes import ProjectiveKind
from schwarz.core.errors import InconclusiveError
from schwarz.core.utils import fraction_to_str
from schwarz.equation.triangle_equation import AngleParams
from schwarz.monodromy.oracle import classify_projective, monodromy

logger = logging.getLogger()


def reduced_fractions(max_denominator: int) -> list[Fraction]:
    """Reduced fractions strictly between 0 and 1 with denominator at most ``max_denominator``."""
    return sorted({Fraction(p, q) for q in range(2, max_denominator + 1) for p in range(1, q)})


def enumerate_triples(max_denominator: int) -> list[tuple[Fraction, Fraction, Fraction]]:
    """Unordered triples e1 ≤ e2 ≤ e3, in lexicographic order."""
    return list(itertools.combinations_with_replacement(reduced_fractions(max_denominator), 3))


def sweep_triple(values: tuple[Fraction, Fraction, Fraction]) -> dict:
    """Classify one triple both ways."""
    params = AngleParams(*values)
    verdict = classify(params)
    record = {
        "inv_angles": [fraction_to_str(v) for v in values],
        "kimura": str(verdict.verdict),
    }
    try:
        projective = classify_projective(monodromy(params))
    except InconclusiveError as e:
        logger.warning("Oracle inconclusive for {}: {}".format(params, e))
        record.update({"oracle": str(ProjectiveKind.INCONCLUSIVE), "order": None, "agree": None})
        return record

    integrable = not verdict.is_strongly_minimal
    record.update({
        "oracle": str(projective.kind),
        "order": projective.order,
        "agree": integrable == projective.kind.is_integrable,
    })
    if not record["agree"]:
        logger.warning("Disagreement on {}: {} vs {}".format(params, verdict.verdict, projective.kind))
    return record


class SweepService:
    """Service layer for oracle agreement sweeps."""
    def __init__(self, settings: AppSettings = None):
        """Initialize with worker settings."""
        self.settings = settings or app_settings

    def run(self, max_denominator: int, workers: int | None = None) -> list[dict]:
        """Records for every triple, in canonical order whatever the worker count."""
        triples = enumerate_triples(max_denominator)
        workers = self.settings.sweep_workers if workers is None else workers
        logger.info("Sweeping {} triples with denominators up to {} on {} worker(s)".format(
            len(triples), max_denominator, workers))

        if workers <= 1:
            return [sweep_triple(t) for t in triples]
        with ProcessPoolExecutor(max_workers=workers) as executor:
            return list(executor.map(sweep_triple, triples, chunksize=8))

    @staticmethod
    def summarize(records: list[dict]) -> dict:
        inconclusive = sum(1 for r in records if r["agree"] is None)
        agree = sum(1 for r in records if r["agree"] is True)
        return {
            "total": len(records),
            "agree": agree,
            "disagree": len(records) - agree - inconclusive,
            "inconclusive": inconclusive,
        }

    @staticmethod
    def write_records(records: list[dict], out: Path) -> None:
        """One JSON document per line."""
        with open(out, "w", encoding="utf-8") as f:
            for record in records:
                f.write(json.dumps(record) + "\n")
        logger.info("Wrote {} records to {}".format(len(records), out))
