"""Exception types shared across the package."""

from __future__ import annotations


class SRingError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(SRingError):
    """A claimed S-ring fails one of the defining axioms."""


class NotAPartition(ValidationError):
    """The class list does not partition the residues 0..n-1."""


class MissingIdentityClass(ValidationError):
    """The singleton {0} is not one of the classes."""


class NotInverseClosed(ValidationError):
    """Some class X has -X not equal to any class."""


class NotMultiplicativelyClosed(ValidationError):
    """Some class product is not constant on some class."""


class NotASection(SRingError):
    """The given (l, u) pair is not a section of the ring's subgroup lattice."""


class NotCoprime(SRingError):
    """Tensor factors must live over groups of coprime order."""


class NotEquivalent(SRingError):
    """The two sections are not projectively equivalent."""


class LimitExceeded(SRingError):
    """An exhaustive-search bound was exceeded; raise the bound explicitly to proceed."""


class TheoryViolation(SRingError):
    """A consequence the underlying theory guarantees failed to hold: a bug indicator."""


class SingularConditionViolated(TheoryViolation):
    """A rank-2 section of composite order fails the wreath/tensor decomposition."""


class NoInducingUnit(TheoryViolation):
    """A restricted similarity is not induced by any unit, contradicting quasidensity."""


class ReconstructionFailed(TheoryViolation):
    """An outer multiplier family does not reassemble into a similarity."""


class DualNotAnSRing(TheoryViolation):
    """The character-sum partition of the dual group is not an S-ring."""


class IntersectionNotAnSRing(TheoryViolation):
    """A module intersection of two S-rings is not an S-ring."""


class CosetClosureNotCoset(UserWarning):
    """The coset closure of a non-quasidense ring came out non-coset; flagged, not fatal."""
