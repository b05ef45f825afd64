"""Exception hierarchy.

Everything raised on purpose derives from :class:`CylkitError`, so callers
(notably the CLI) can map failures to exit codes without catching broad
``Exception``.
"""


class CylkitError(Exception):
    """Base class for all package errors."""


class InvalidInputError(CylkitError, ValueError):
    """Malformed or precondition-violating input."""


class ShapeError(InvalidInputError):
    """Partition does not fit the type, or boundary containment fails."""


class CapExceededError(CylkitError):
    """A configured size/length cap would be exceeded."""


class GradingError(InvalidInputError):
    """Arithmetic between incompatibly graded objects."""


class PositivityError(CylkitError):
    """A coefficient that must be non-negative came out negative.

    This signals an internal bug, not a property of the input.
    """


class SolveError(CylkitError):
    """An exact linear solve was inconsistent or non-integral.

    The systems solved here are provably unitriangular or full rank, so this
    also signals an internal bug upstream.
    """
