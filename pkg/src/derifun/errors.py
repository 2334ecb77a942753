"""Exception hierarchy shared by every layer of the engine."""

from __future__ import annotations


class DerifunError(Exception):
    """Base class for all engine errors."""


class CompositionNotZero(DerifunError):
    """Two consecutive differentials do not compose to zero."""


class NotInLattice(DerifunError):
    """A vector is not an integral combination of the given lattice basis."""


class InternalLatticeError(DerifunError):
    """A functor image failed lattice membership; indicates a bug, not bad input."""


class BudgetExceeded(DerifunError):
    """A matrix would exceed the configured column cap."""

    def __init__(self, message: str, level: int | None = None, rank: int | None = None):
        super().__init__(message)
        self.level = level
        self.rank = rank


class UnsupportedDegree(DerifunError):
    """A functor was requested in a degree the engine does not model."""


class UnsupportedWeight(DerifunError):
    """No Curtis decomposition is recorded for this weight."""


class NotSaturated(DerifunError):
    """A kernel lattice failed to be a direct summand."""


class NotInLieImage(DerifunError):
    """A tensor is not in the image of the free Lie ring."""


class InsufficientTruncation(DerifunError):
    """A simplicial object is truncated too low for the requested degree."""


class NotReducible(DerifunError):
    """No décalage ladder applies to this functor."""


class Mismatch(DerifunError):
    """Two independent evaluation paths disagree."""


class ParseError(DerifunError):
    """Malformed group or functor expression."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownName(DerifunError):
    """Unrecognised natural transformation name."""
