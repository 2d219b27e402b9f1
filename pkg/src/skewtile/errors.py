"""Exception hierarchy shared by all modules.

The CLI maps ``ParseError`` to exit status 2 and every other ``SkewtileError``
to exit status 1.
"""


class SkewtileError(Exception):
    """Base class for domain errors."""


class ParseError(SkewtileError):
    """Input document does not match its schema."""


class StructuralError(SkewtileError):
    """Ids or incidences are inconsistent (unknown vertex, non-composable pair...)."""


class NotFiniteDimensional(SkewtileError):
    """Path enumeration hit its length bound with legal extensions left."""


class InvariantViolation(SkewtileError):
    """An internal consistency check failed; indicates a bug, not bad input."""


class ArcError(SkewtileError):
    """An arc or multiset is not permissible / not compatible / not in the expected shape."""
