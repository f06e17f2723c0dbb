"""
Exact strong-minimality classifier for the Schwarz triangle equation.

The equation S_y(t) = R_{α,β,γ}(y) fails to be strongly minimal exactly when
its linearization ψ″ + ½Rψ = 0 is Liouville integrable: integrability is
equivalent to the Riccati equation u′ + u² + ½R = 0 having an algebraic
solution, which is the only way the transcendence degree of a solution can
drop. Through the reduction to the Gauss equation this is decided by
Kimura's two conditions on the exponent differences (α⁻¹, β⁻¹, γ⁻¹):

1. one of α⁻¹+β⁻¹+γ⁻¹, −α⁻¹+β⁻¹+γ⁻¹, α⁻¹−β⁻¹+γ⁻¹, α⁻¹+β⁻¹−γ⁻¹ is an odd
   integer;
2. after choosing signs and an order, the three values equal a row of
   :data:`KIMURA_TABLE` up to integers ℓ, m, n (with ℓ+m+n even on the
   rows that say so).

Generic (algebraically independent) parameters are always strongly minimal.

The rows follow Kimura's table and Schwarz's list. Rows 2 and 3 are the two
tetrahedral cases (1/2, 1/3, 1/3) and (2/3, 1/3, 1/3).

The search over rows, signs and permutations runs in a fixed order so the
first witness found is reproducible. Witnesses are not unique; several rows
can match the same input.
"""
import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing_extensions import Self

from schwarz.core.enum_classes import Verdict, WitnessKind
from schwarz.core.errors import SchwarzError
from schwarz.core.utils import fraction_to_str
from schwarz.equation.triangle_equation import AngleParams, ExponentTriple, exponent_differences

logger = logging.getLogger()

F = Fraction

# Sign patterns applied to (α⁻¹, β⁻¹, γ⁻¹) for the four condition 1 sums.
CONDITION1_SIGNS = ((1, 1, 1), (-1, 1, 1), (1, -1, 1), (1, 1, -1))

SIGN_CHOICES = tuple(itertools.product((1, -1), repeat=3))
PERMUTATIONS = tuple(itertools.permutations(range(3)))


@dataclass(frozen=True)
class KimuraRow:
    """Three fractional offsets, ``None`` standing for an arbitrary value."""
    entries: tuple[Fraction | None, Fraction | None, Fraction | None]
    parity: bool = False

    @property
    def residues(self) -> frozenset[Fraction]:
        """Entries reduced mod 1; a matching triple must reach each of them."""
        return frozenset(e % 1 for e in self.entries if e is not None)


KIMURA_TABLE: tuple[KimuraRow, ...] = (
    KimuraRow((F(1, 2), F(1, 2), None)),
    KimuraRow((F(1, 2), F(1, 3), F(1, 3))),
    KimuraRow((F(2, 3), F(1, 3), F(1, 3)), parity=True),
    KimuraRow((F(1, 2), F(1, 3), F(1, 4))),
    KimuraRow((F(2, 3), F(1, 4), F(1, 4)), parity=True),
    KimuraRow((F(1, 2), F(1, 3), F(1, 5))),
    KimuraRow((F(2, 5), F(1, 3), F(1, 3)), parity=True),
    KimuraRow((F(2, 3), F(1, 5), F(1, 5)), parity=True),
    KimuraRow((F(1, 2), F(2, 5), F(1, 5)), parity=True),
    KimuraRow((F(3, 5), F(1, 3), F(1, 5)), parity=True),
    KimuraRow((F(2, 5), F(2, 5), F(2, 5)), parity=True),
    KimuraRow((F(2, 3), F(1, 3), F(1, 5)), parity=True),
    KimuraRow((F(4, 5), F(1, 5), F(1, 5)), parity=True),
    KimuraRow((F(1, 2), F(2, 5), F(1, 3)), parity=True),
    KimuraRow((F(3, 5), F(2, 5), F(1, 3)), parity=True),
)


def _is_odd_integer(value: Fraction) -> bool:
    return value.denominator == 1 and value.numerator % 2 == 1


@dataclass(frozen=True)
class KimuraWitness:
    """
    Evidence for integrability.

    Condition 1 carries the sign pattern of the odd sum and its value.
    Condition 2 carries the 1-based row, the signs applied to
    (α⁻¹, β⁻¹, γ⁻¹), the permutation sending each value to a row column and
    the integers (ℓ, m, n), ``None`` for the arbitrary column.
    """
    kind: WitnessKind
    sum_signs: tuple[int, int, int] | None = None
    value: Fraction | None = None
    row: int | None = None
    signs: tuple[int, int, int] | None = None
    permutation: tuple[int, int, int] | None = None
    integers: tuple[int | None, int | None, int | None] | None = None
    parity_used: bool = False

    def verify(self, exponents: ExponentTriple) -> bool:
        """Re-evaluate the witness against ``exponents``."""
        values = exponents.inverse_angles
        if self.kind == WitnessKind.CONDITION1:
            total = sum(s * v for s, v in zip(self.sum_signs, values))
            return total == self.value and _is_odd_integer(total)

        row = KIMURA_TABLE[self.row - 1]
        for j in range(3):
            entry = row.entries[self.permutation[j]]
            if entry is None:
                if self.integers[j] is not None:
                    return False
                continue
            if self.signs[j] * values[j] - entry != self.integers[j]:
                return False
        if row.parity:
            return sum(self.integers) % 2 == 0
        return True

    def to_record(self) -> dict:
        if self.kind == WitnessKind.CONDITION1:
            return {
                "kind": str(self.kind),
                "sum_signs": list(self.sum_signs),
                "sum": fraction_to_str(self.value),
            }
        l, m, n = self.integers
        return {
            "kind": str(self.kind),
            "row": self.row,
            "signs": list(self.signs),
            "permutation": list(self.permutation),
            "l": l,
            "m": m,
            "n": n,
            "parity_used": self.parity_used,
        }


@dataclass(frozen=True)
class MinimalityVerdict:
    verdict: Verdict
    witness: KimuraWitness | None = field(default=None)

    def __post_init__(self):
        if (self.verdict == Verdict.NOT_STRONGLY_MINIMAL) != (self.witness is not None):
            raise SchwarzError("NotStronglyMinimal verdicts, and only those, carry a witness")

    @classmethod
    def strongly_minimal(cls) -> Self:
        return cls(Verdict.STRONGLY_MINIMAL)

    @property
    def is_strongly_minimal(self) -> bool:
        return self.verdict.is_strongly_minimal

    def to_record(self) -> dict:
        record = {"verdict": str(self.verdict)}
        if self.witness is not None:
            record["witness"] = self.witness.to_record()
        return record


def check_condition1(e: ExponentTriple) -> KimuraWitness | None:
    values = e.inverse_angles
    for signs in CONDITION1_SIGNS:
        total = sum(s * v for s, v in zip(signs, values))
        if _is_odd_integer(total):
            return KimuraWitness(kind=WitnessKind.CONDITION1, sum_signs=signs, value=total)
    return None


def _match_row(row: KimuraRow, signed: tuple[Fraction, ...], permutation: tuple[int, ...]) -> tuple | None:
    """Integers (ℓ, m, n) making ``signed`` fit the permuted row, if any."""
    integers = []
    for j in range(3):
        entry = row.entries[permutation[j]]
        if entry is None:
            integers.append(None)
            continue
        offset = signed[j] - entry
        if offset.denominator != 1:
            return None
        integers.append(offset.numerator)
    if row.parity and sum(integers) % 2 != 0:
        return None
    return tuple(integers)


def check_condition2(e: ExponentTriple) -> KimuraWitness | None:
    values = e.inverse_angles
    reachable = {(s * v) % 1 for v in values for s in (1, -1)}
    for row_index, row in enumerate(KIMURA_TABLE, start=1):
        if not row.residues <= reachable:
            continue
        for signs in SIGN_CHOICES:
            signed = tuple(s * v for s, v in zip(signs, values))
            for permutation in PERMUTATIONS:
                integers = _match_row(row, signed, permutation)
                if integers is None:
                    continue
                logger.debug("Condition 2 witness for {}: row {}".format(e, row_index))
                return KimuraWitness(
                    kind=WitnessKind.CONDITION2,
                    row=row_index,
                    signs=signs,
                    permutation=permutation,
                    integers=integers,
                    parity_used=row.parity,
                )
    return None


def classify(params: AngleParams) -> MinimalityVerdict:
    """Decide strong minimality of the triangle equation with ``params``."""
    if params.is_generic:
        return MinimalityVerdict(Verdict.GENERIC_STRONGLY_MINIMAL)

    exponents = exponent_differences(params)
    witness = check_condition1(exponents) or check_condition2(exponents)
    if witness is None:
        return MinimalityVerdict.strongly_minimal()
    return MinimalityVerdict(Verdict.NOT_STRONGLY_MINIMAL, witness)
