"""Exception types shared by every module."""


class CertrigError(Exception):
    """Base class for errors raised by certrig."""


class DomainError(CertrigError, ValueError):
    """An argument lies outside the documented domain of an operation."""


class ParseError(CertrigError, ValueError):
    """A numeral could not be parsed."""


class NonTerminationError(CertrigError, RuntimeError):
    """An iterative search exceeded its safety cap."""
