"""Exception hierarchy shared by every dirsig module."""

from __future__ import annotations


class DirsigError(Exception):
    """Base class for all errors raised by this package."""


class InvalidModulusError(DirsigError, ValueError):
    pass


class NoInverseError(DirsigError, ValueError):
    pass


class EntropyError(DirsigError):
    """The randomness source failed or ran out of scripted values."""


class ParameterError(DirsigError, ValueError):
    """A ParamSet failed validation where a valid one is required."""


class GenerationError(DirsigError):
    """A randomized search exceeded its retry budget."""


class FixtureMissError(DirsigError, KeyError):
    """Fixture hash mode was asked for an input outside its table."""


class KeyValidationError(DirsigError, ValueError):
    pass


class FormatError(DirsigError, ValueError):
    """A protocol object has malformed or out-of-range fields."""


class ParseError(FormatError):
    """Strict decoding failed. ``line`` is 1-based, or None if not line-specific."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class TagMismatchError(ParseError):
    pass


class InvariantViolation(ParseError):
    pass


class PackageInvalidError(DirsigError):
    """A disclosure package failed the public precheck."""


class ProtocolOrderError(DirsigError):
    """A state machine received a message in the wrong phase."""


class ProtocolAbort(DirsigError):
    """The counterparty was caught cheating; the session is dead."""


class WrongProverError(DirsigError):
    pass


class DelegationError(DirsigError):
    """Delegation protocol check failed."""


class TokenError(DirsigError, ValueError):
    pass


class StateError(DirsigError):
    """An operation was attempted from a workflow state that forbids it."""
