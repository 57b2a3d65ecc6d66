"""Exception types shared across the package."""


class DoubleStanleyError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(DoubleStanleyError, ValueError):
    """An input lies outside the domain of an operation."""


class ResourceCapError(DoubleStanleyError):
    """A configured size cap was exceeded."""


class ParseError(DoubleStanleyError, ValueError):
    """Text input could not be parsed."""


class TruncationError(DoubleStanleyError):
    """A polynomial truncation is too small to hold the requested data."""
