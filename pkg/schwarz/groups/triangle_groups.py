"""
Triangle group signatures (k, l, m), 2 ≤ k, l, m ≤ ∞.

Arithmeticity is a lookup in Takeuchi's list of the 85 arithmetic triangle
groups (``data/arithmetic_triangles.json``). A triangle group is maximal
unless its signature has one of the shapes (2, l, 2l), (3, l, 3l) or
(k, l, l) in some order, with 2·∞ = 3·∞ = ∞. Non-maximal signatures form the
set M, and W is M together with the arithmetic signatures.

Γ-special polynomials exist in infinite number exactly for arithmetic
groups, never for maximal non-arithmetic ones, and otherwise only up to a
finite constraint coming from the index of Γ in its commensurator.
"""
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing_extensions import Self

from schwarz.core.config import data_settings
from schwarz.core.enum_classes import Geometry, SpecialPolynomials
from schwarz.core.errors import NonHyperbolicError, SchwarzError
from schwarz.core.utils import INF, parse_signature_entries, signature_entry_to_str
from schwarz.equation.triangle_equation import AngleParams

logger = logging.getLogger()

Entry = int | float


def _entry_inverse(entry: Entry) -> Fraction:
    return Fraction(0) if entry == INF else Fraction(1, entry)


def _sort_key(entry: Entry) -> float:
    return float(entry)


@dataclass(frozen=True)
class Signature:
    """A signature as given; comparisons and lookups use :attr:`sorted`."""
    k: Entry
    l: Entry
    m: Entry

    def __post_init__(self):
        for entry in self.entries:
            if entry != INF and (not isinstance(entry, int) or entry < 2):
                raise SchwarzError("signature entries are integers ≥ 2 or ∞, got {!r}".format(entry))

    @classmethod
    def from_text(cls, text: str) -> Self:
        return cls(*parse_signature_entries(text))

    @property
    def entries(self) -> tuple[Entry, Entry, Entry]:
        return (self.k, self.l, self.m)

    @property
    def sorted(self) -> tuple[Entry, Entry, Entry]:
        return tuple(sorted(self.entries, key=_sort_key))

    @property
    def inverse_sum(self) -> Fraction:
        return sum((_entry_inverse(e) for e in self.entries), Fraction(0))

    @property
    def has_cusp(self) -> bool:
        return INF in self.entries

    def __str__(self) -> str:
        return "({})".format(",".join(signature_entry_to_str(e) for e in self.entries))


@dataclass(frozen=True)
class GroupReport:
    geometry: Geometry
    arithmetic: bool
    maximal: bool
    in_M: bool
    in_W: bool
    special_polynomials: SpecialPolynomials

    def to_record(self) -> dict:
        return {
            "geometry": str(self.geometry),
            "arithmetic": self.arithmetic,
            "maximal": self.maximal,
            "in_M": self.in_M,
            "in_W": self.in_W,
            "special_polynomials": str(self.special_polynomials),
        }


@cache
def arithmetic_signatures() -> frozenset[tuple[Entry, Entry, Entry]]:
    """Sorted signatures of the arithmetic triangle groups."""
    table = set()
    for raw in data_settings.arithmetic_signatures:
        entries = [INF if entry == "inf" else int(entry) for entry in raw]
        table.add(Signature(*entries).sorted)
    logger.debug("Loaded {} arithmetic triangle signatures".format(len(table)))
    return frozenset(table)


def geometry(sig: Signature) -> Geometry:
    total = sig.inverse_sum
    if total < 1:
        return Geometry.HYPERBOLIC
    if total == 1:
        return Geometry.EUCLIDEAN
    return Geometry.SPHERICAL


def _require_hyperbolic(sig: Signature) -> None:
    if geometry(sig) != Geometry.HYPERBOLIC:
        raise NonHyperbolicError("{} is {}, not hyperbolic".format(sig, geometry(sig)))


def is_arithmetic(sig: Signature) -> bool:
    _require_hyperbolic(sig)
    return sig.sorted in arithmetic_signatures()


def is_maximal(sig: Signature) -> bool:
    for x, y, z in itertools.permutations(sig.entries):
        if x == 2 and z == 2 * y:
            return False
        if x == 3 and z == 3 * y:
            return False
        if y == z:
            return False
    return True


def group_report(sig: Signature) -> GroupReport:
    arithmetic = is_arithmetic(sig)
    maximal = is_maximal(sig)
    in_M = not maximal

    if arithmetic:
        special = SpecialPolynomials.INFINITELY_MANY
    elif maximal:
        special = SpecialPolynomials.NONE
    else:
        special = SpecialPolynomials.FINITELY_CONSTRAINED

    return GroupReport(
        geometry=Geometry.HYPERBOLIC,
        arithmetic=arithmetic,
        maximal=maximal,
        in_M=in_M,
        in_W=in_M or arithmetic,
        special_polynomials=special,
    )


def signature_to_params(sig: Signature) -> AngleParams:
    """Inverse angles (1/k, 1/l, 1/m) in the given order, ∞ giving 0."""
    return AngleParams(*(_entry_inverse(e) for e in sig.entries))
