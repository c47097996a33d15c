"""Exception hierarchy shared by all modules.

``DomainError`` covers violated operation preconditions (the CLI maps it to
exit code 3); ``ParseError`` covers malformed text input (exit code 2).
"""

from __future__ import annotations

__all__ = [
    "DomainError",
    "EqualPoints",
    "InvalidDescriptor",
    "LevelMismatch",
    "NotALimitLevel",
    "OutOfRange",
    "ParseError",
    "SubtrahendTooLarge",
    "TargetMismatch",
    "UndefinedForZeroCoordinate",
    "UnsupportedLevel",
    "WitnessNotFound",
    "ZeroHasNoBox",
    "ZeroNotInImage",
    "ZeroOrdinal",
]


class DomainError(Exception):
    """A precondition of an operation does not hold."""


class SubtrahendTooLarge(DomainError):
    """Left subtraction a - b requires b <= a."""


class OutOfRange(DomainError):
    """An ordinal exceeds the carrier bound it must stay below."""


class ZeroOrdinal(DomainError):
    """The operation is undefined at 0."""


class LevelMismatch(DomainError):
    """Operands live at different levels."""


class ZeroHasNoBox(DomainError):
    """The adjoined zero belongs to no box."""


class ZeroNotInImage(DomainError):
    """The adjoined zero has no preimage under the level-shift bijection."""


class UndefinedForZeroCoordinate(DomainError):
    """The construction needs a final term in both coordinates."""


class TargetMismatch(DomainError):
    """The target descriptor is not centred on the shifted point."""


class WitnessNotFound(DomainError):
    """No neighborhood witness exists; indicates invalid input or a bug."""


class EqualPoints(DomainError):
    """Separating descriptors need two distinct points."""


class NotALimitLevel(DomainError):
    """The requested level has no punctured neighborhoods in this topology."""


class UnsupportedLevel(DomainError):
    """The topology family is only defined for levels up to omega."""


class InvalidDescriptor(DomainError):
    """The descriptor fields do not describe a basic open set."""


class ParseError(ValueError):
    """Malformed text input; ``position`` is the 0-based offending offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
