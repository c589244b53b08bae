"""Exception hierarchy shared by every module."""


class RamseyLabError(Exception):
    """Base class for all errors raised by this package."""


class InputError(RamseyLabError, ValueError):
    """A precondition on the arguments of an operation does not hold."""


class WindowError(InputError):
    """``n`` lies outside the admissible interval for the given ``(r, t)``."""


class CapacityError(RamseyLabError):
    """The instance exceeds a configured size bound of an exact search."""


class ParseError(InputError):
    """Malformed graph6 or edge-list input."""


class Undecided(RamseyLabError):
    """A search ran out of its node budget before reaching a verdict."""

    def __init__(self, message, nodes=0):
        super().__init__(message)
        self.nodes = nodes


class InvariantFailure(RamseyLabError, AssertionError):
    """A lemma or proof step produced a conclusion that does not hold.

    Either the implementation has a bug or the instance is a counterexample;
    ``instance`` carries whatever is needed to reproduce it.
    """

    def __init__(self, message, instance=None):
        super().__init__(message)
        self.instance = instance or {}
