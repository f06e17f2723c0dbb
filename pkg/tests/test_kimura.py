import itertools
import random
from fractions import Fraction

import pytest
import sympy

from schwarz.classifier.kimura import (
    KIMURA_TABLE,
    MinimalityVerdict,
    check_condition1,
    check_condition2,
    classify,
)
from schwarz.core.enum_classes import Geometry, Verdict, WitnessKind
from schwarz.core.errors import IrrationalParameterError, SchwarzError
from schwarz.core.utils import INF
from schwarz.equation.triangle_equation import AngleParams, exponent_differences
from schwarz.groups.triangle_groups import Signature, geometry, signature_to_params
from schwarz.monodromy.oracle import classify_projective, monodromy

F = Fraction


def exponents(*values):
    return exponent_differences(AngleParams(*values))


def test_table_shape():
    assert len(KIMURA_TABLE) == 15
    assert sum(row.parity for row in KIMURA_TABLE) == 11
    assert KIMURA_TABLE[0].entries[2] is None


def test_condition1_odd_sum():
    witness = check_condition1(exponents(F(1, 3), F(1, 3), F(1, 3)))
    assert witness.kind == WitnessKind.CONDITION1
    assert witness.value == 1
    assert witness.to_record()["sum"] == "1"


def test_condition1_with_zero_entry():
    witness = check_condition1(exponents(F(1, 2), F(1, 2), 0))
    assert witness.value == 1
    assert witness.sum_signs == (1, 1, 1)


def test_condition1_none():
    assert check_condition1(exponents(F(1, 2), F(1, 3), F(1, 7))) is None


def test_condition2_row1_arbitrary_column():
    e = exponents(F(1, 2), F(3, 2), F(1, 5))
    assert check_condition1(e) is None
    witness = check_condition2(e)
    assert witness.row == 1
    assert witness.integers == (0, 1, None)
    assert witness.verify(e)


def test_condition2_row4():
    e = exponents(F(1, 2), F(1, 3), F(1, 4))
    witness = check_condition2(e)
    assert witness.row == 4
    assert not witness.parity_used
    assert witness.verify(e)


def test_condition2_none():
    assert check_condition2(exponents(F(1, 2), F(1, 3), F(1, 7))) is None


def test_parity_clause_rejects_odd_sum():
    # (1/5,1/5,1/5) only fits row 13 with ℓ+m+n = −1
    e = exponents(F(1, 5), F(1, 5), F(1, 5))
    assert check_condition1(e) is None
    assert check_condition2(e) is None


def test_parity_clause_accepts_even_sum():
    e = exponents(F(2, 5), F(2, 5), F(2, 5))
    witness = check_condition2(e)
    assert witness.parity_used
    assert sum(witness.integers) % 2 == 0
    assert witness.verify(e)


@pytest.mark.parametrize("params, verdict", [
    (AngleParams(F(1, 2), F(1, 3), F(1, 7)), Verdict.STRONGLY_MINIMAL),
    (AngleParams(F(1, 3), F(1, 3), F(1, 3)), Verdict.NOT_STRONGLY_MINIMAL),
    (AngleParams(F(1, 2), F(1, 2), F(1, 2)), Verdict.NOT_STRONGLY_MINIMAL),
    (AngleParams(0, 0, 0), Verdict.STRONGLY_MINIMAL),
    (AngleParams.generic(), Verdict.GENERIC_STRONGLY_MINIMAL),
])
def test_classify(params, verdict):
    result = classify(params)
    assert result.verdict == verdict
    assert (result.witness is not None) == (verdict == Verdict.NOT_STRONGLY_MINIMAL)


def test_classify_record():
    record = classify(AngleParams(F(1, 3), F(1, 3), F(1, 3))).to_record()
    assert record == {
        "verdict": "NotStronglyMinimal",
        "witness": {"kind": "Condition1", "sum_signs": [1, 1, 1], "sum": "1"},
    }


def test_irrational_rejected():
    with pytest.raises(IrrationalParameterError):
        classify(AngleParams(sympy.sqrt(2), F(1, 3), F(1, 7)))


def test_verdict_invariant():
    with pytest.raises(SchwarzError):
        MinimalityVerdict(Verdict.NOT_STRONGLY_MINIMAL)


def test_witnesses_verify_over_sweep():
    fractions = sorted({F(p, q) for q in range(1, 6) for p in range(0, 2 * q)})
    for values in itertools.combinations_with_replacement(fractions, 3):
        for ordered in set(itertools.permutations(values)):
            e = exponents(*ordered)
            result = classify(AngleParams(*ordered))
            if result.witness is not None:
                assert result.witness.verify(e)
        # the verdict does not depend on the order of the three values
        verdicts = {classify(AngleParams(*p)).verdict for p in itertools.permutations(values)}
        assert len(verdicts) == 1


def test_hyperbolic_corpus_is_strongly_minimal():
    entries = list(range(2, 51)) + [INF]
    checked = 0
    for sig in itertools.combinations_with_replacement(entries, 3):
        signature = Signature(*sig)
        if geometry(signature) != Geometry.HYPERBOLIC:
            continue
        assert classify(signature_to_params(signature)).verdict == Verdict.STRONGLY_MINIMAL, signature
        checked += 1
    assert checked > 20000


@pytest.mark.parametrize("values", [
    (F(1, 3), F(1, 3), F(2, 3)),
    (F(2, 3), F(2, 3), F(2, 3)),
    (F(2, 3), F(1, 3), F(1, 3)),
])
def test_second_tetrahedral_row(values):
    result = classify(AngleParams(*values))
    assert result.verdict == Verdict.NOT_STRONGLY_MINIMAL
    assert result.witness.row == 3
    assert result.witness.parity_used
    assert result.witness.verify(exponents(*values))


@pytest.mark.parametrize("values", [
    (F(1, 4), F(1, 3), F(2, 3)),
    (F(1, 3), F(1, 3), F(3, 4)),
    (F(2, 3), F(2, 3), F(3, 4)),
])
def test_near_tetrahedral_triples_are_strongly_minimal(values):
    assert classify(AngleParams(*values)).verdict == Verdict.STRONGLY_MINIMAL


@pytest.mark.parametrize("row_index", range(len(KIMURA_TABLE)))
def test_every_row_has_integrable_monodromy(row_index):
    # the arbitrary column of row 1 is filled with 1/5
    values = [F(1, 5) if entry is None else entry for entry in KIMURA_TABLE[row_index].entries]
    params = AngleParams(*values)
    assert classify(params).verdict == Verdict.NOT_STRONGLY_MINIMAL
    assert classify_projective(monodromy(params)).kind.is_integrable


def test_strongly_minimal_triple_has_dense_monodromy():
    params = AngleParams(F(1, 4), F(1, 3), F(2, 3))
    assert not classify_projective(monodromy(params)).kind.is_integrable


def test_sign_and_shift_symmetry():
    rng = random.Random(2024)
    fractions = [F(p, q) for q in range(1, 7) for p in range(q)]
    for _ in range(400):
        values = [rng.choice(fractions) for _ in range(3)]
        verdict = classify(AngleParams(*values)).verdict
        i = rng.randrange(3)
        j = (i + 1 + rng.randrange(2)) % 3

        negated = list(values)
        negated[i] = -negated[i]
        shifted_by_two = list(values)
        shifted_by_two[i] += 2
        pair_shifted = list(values)
        pair_shifted[i] += 1
        pair_shifted[j] += 1

        for variant in (negated, shifted_by_two, pair_shifted):
            assert classify(AngleParams(*variant)).verdict == verdict, (values, variant)


def test_single_shift_keeps_rows_without_parity():
    rng = random.Random(7)
    fractions = [F(p, q) for q in range(1, 7) for p in range(q)]
    checked = 0
    for _ in range(400):
        values = [rng.choice(fractions) for _ in range(3)]
        witness = classify(AngleParams(*values)).witness
        if witness is None or witness.kind != WitnessKind.CONDITION2 or witness.parity_used:
            continue
        shifted = list(values)
        shifted[rng.randrange(3)] += 1
        assert classify(AngleParams(*shifted)).verdict == Verdict.NOT_STRONGLY_MINIMAL
        checked += 1
    assert checked > 0
