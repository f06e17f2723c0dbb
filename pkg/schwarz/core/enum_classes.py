from enum import Enum

from strenum import StrEnum


class Exit_Status(Enum):
    OKAY = 0
    FAIL = 1
    USAGE = 2

    def __bool__(self) -> bool:
        return self == Exit_Status.OKAY

class Geometry(StrEnum):
    SPHERICAL = "Spherical"
    EUCLIDEAN = "Euclidean"
    HYPERBOLIC = "Hyperbolic"

class SpecialPolynomials(StrEnum):
    NONE = "None"
    FINITELY_CONSTRAINED = "FinitelyConstrained"
    INFINITELY_MANY = "InfinitelyMany"

class Verdict(StrEnum):
    STRONGLY_MINIMAL = "StronglyMinimal"
    NOT_STRONGLY_MINIMAL = "NotStronglyMinimal"
    GENERIC_STRONGLY_MINIMAL = "GenericStronglyMinimal"

    @property
    def is_strongly_minimal(self) -> bool:
        return self != Verdict.NOT_STRONGLY_MINIMAL

class WitnessKind(StrEnum):
    CONDITION1 = "Condition1"
    CONDITION2 = "Condition2"

class ProjectiveKind(StrEnum):
    FINITE = "Finite"
    DIHEDRAL = "Dihedral"
    TRIANGULARIZABLE = "Triangularizable"
    DENSE = "Dense"
    INCONCLUSIVE = "Inconclusive"

    @property
    def is_integrable(self) -> bool:
        return self in (ProjectiveKind.FINITE, ProjectiveKind.DIHEDRAL, ProjectiveKind.TRIANGULARIZABLE)

class VerifyKind(StrEnum):
    PRINCIPAL = "principal"
    RICCATI = "riccati"
    STAR = "star"
    PULLBACK = "pullback"

class ParamTag(StrEnum):
    GENERIC = "generic"
