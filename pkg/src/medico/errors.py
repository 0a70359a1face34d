"""Exception types raised by the library."""


class MedicoError(Exception):
    """Base class for all library errors."""


class ParseError(MedicoError, ValueError):
    """Malformed graph input.

    ``offset`` is a byte offset for graph6 input and a 1-based line number
    for edgelist input.
    """

    def __init__(self, message, offset=None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (at {offset})"
        super().__init__(message)


class OrderTooLarge(ParseError):
    pass


class DifferentComponents(MedicoError, ValueError):
    pass


class Disconnected(MedicoError, ValueError):
    pass


class NotModular(MedicoError, ValueError):
    pass


class Incomplete(MedicoError, RuntimeError):
    """A capped enumeration was truncated, so the answer would be partial."""


class UnknownPattern(MedicoError, KeyError):
    pass


class NotAnEdge(MedicoError, ValueError):
    pass


class NotC6(MedicoError, ValueError):
    pass


class BoundExceeded(MedicoError, ValueError):
    pass


class InvalidSpec(MedicoError, ValueError):
    pass


class ResampleCapExceeded(MedicoError, RuntimeError):
    pass
