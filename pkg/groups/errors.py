"""Exception hierarchy shared by every shiftforge package."""


class ShiftforgeError(Exception):
    """Base class for all engine errors."""


class WordSyntaxError(ShiftforgeError):
    """A word string does not follow the token grammar."""


class UnknownGeneratorError(ShiftforgeError):
    """A letter is outside the alphabet of a weight map, oracle or graph."""

    def __init__(self, name: str, where: str = "alphabet"):
        super().__init__(f"unknown generator {name!r} for {where}")
        self.name = name
        self.where = where


class NotSurjectiveError(ShiftforgeError):
    """A weight map does not reach 1, so it is not onto the integers."""


class NotAHomomorphismError(ShiftforgeError):
    """A weight map gives a relator nonzero weight."""


class MissingOracleError(ShiftforgeError):
    """An operation needs a word problem solver the group does not have."""


class DegenerateSystemError(ShiftforgeError):
    """A single finite cycle with sphere decorations only."""


class SurfaceSpecError(ShiftforgeError):
    """A surface description violates the construction's requirements."""


class SpecReferenceError(ShiftforgeError):
    """A spec document names something it does not define."""


class InvariantViolation(ShiftforgeError):
    """An internal self-check failed; results cannot be trusted."""
