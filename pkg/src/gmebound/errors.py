"""Exception types raised across the package."""


class GMEBoundError(Exception):
    """Base class for all package errors."""


class ShapeError(GMEBoundError, ValueError):
    """Matrix or vector shapes do not fit together."""


class DomainError(GMEBoundError, ValueError):
    """An argument lies outside the domain an operation is defined on."""


class PhysicalityError(GMEBoundError, ValueError):
    """A matrix fails the density-matrix invariants."""

    def __init__(self, message, min_eigenvalue=None):
        super().__init__(message)
        self.min_eigenvalue = min_eigenvalue


class StateFileError(GMEBoundError, ValueError):
    """A state file could not be parsed."""
