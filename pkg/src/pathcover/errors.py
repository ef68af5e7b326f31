"""Exception hierarchy shared by every module."""


class PathCoverError(Exception):
    """Base class for all library errors."""


class SizeError(PathCoverError, ValueError):
    """A graph or intermediate construction exceeds a vertex cap."""


class ArgumentError(PathCoverError, ValueError):
    """An argument is invalid for the requested operation."""


class ParameterError(ArgumentError):
    """Invalid parameters for a graph family generator."""


class ParseError(PathCoverError, ValueError):
    """Malformed graph6 input.

    ``offset`` is the byte position at which decoding failed.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class DomainError(PathCoverError):
    """Input lies outside an operation's mathematical domain (e.g. not maximal)."""


class ConsistencyError(PathCoverError):
    """An internal cross-check failed; the input was misclassified somewhere upstream."""
