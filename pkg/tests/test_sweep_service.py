import json
from fractions import Fraction

import pytest

from schwarz.core.config import app_settings
from schwarz.services.sweep_service import SweepService, enumerate_triples, reduced_fractions, sweep_triple

F = Fraction


def test_reduced_fractions():
    assert reduced_fractions(4) == [F(1, 4), F(1, 3), F(1, 2), F(2, 3), F(3, 4)]
    assert len(reduced_fractions(8)) == 21


def test_enumerate_triples():
    triples = enumerate_triples(4)
    assert len(triples) == 35
    assert triples == sorted(triples)
    assert all(a <= b <= c for a, b, c in triples)
    assert len(enumerate_triples(8)) == 1771


def test_sweep_triple_record():
    record = sweep_triple((F(1, 2), F(1, 2), F(1, 2)))
    assert record == {
        "inv_angles": ["1/2", "1/2", "1/2"],
        "kimura": "NotStronglyMinimal",
        "oracle": "Finite",
        "order": 4,
        "agree": True,
    }


def test_sweep_triple_strongly_minimal():
    record = sweep_triple((F(1, 3), F(1, 3), F(1, 4)))
    assert record["kimura"] == "StronglyMinimal"
    assert record["oracle"] == "Dense"
    assert record["agree"] is True


def test_summarize():
    records = [{"agree": True}, {"agree": True}, {"agree": False}, {"agree": None}]
    assert SweepService.summarize(records) == {"total": 4, "agree": 2, "disagree": 1, "inconclusive": 1}


def test_sweep_denominator_four(tmp_path):
    service = SweepService()
    records = service.run(4, workers=1)
    assert len(records) == 35
    assert all(record["agree"] is True for record in records)

    out = tmp_path / "results.json"
    service.write_records(records, out)
    lines = out.read_text(encoding="utf-8").splitlines()
    assert [json.loads(line) for line in lines] == records


def test_sweep_order_does_not_depend_on_workers():
    service = SweepService()
    assert service.run(3, workers=2) == service.run(3, workers=1)


@pytest.mark.slow
def test_sweep_denominator_eight():
    records = SweepService().run(8, workers=app_settings.sweep_workers)
    summary = SweepService.summarize(records)
    assert summary["total"] == 1771
    assert summary["disagree"] == 0
    assert summary["inconclusive"] < 0.05 * summary["total"]
