"""Exception hierarchy shared across the package."""


class SPCError(Exception):
    """Base class for every error raised by spclab."""


class InvalidEdge(SPCError, ValueError):
    pass


class InvalidVertex(SPCError, IndexError):
    pass


class BadParameter(SPCError, ValueError):
    pass


class LengthMismatch(SPCError, ValueError):
    pass


class UnknownVariant(SPCError, ValueError):
    pass


class TooLarge(SPCError, ValueError):
    """Raised when exhaustive search would exceed the vertex cap."""


class SpecParseError(SPCError, ValueError):
    """Raised when a textual family or scheme description cannot be parsed."""
