"""Exception hierarchy shared by all modules."""


class DTGraphError(Exception):
    """Base class for every error raised by this package."""


class IndexOutOfRange(DTGraphError, IndexError):
    pass


class SelfLoop(DTGraphError, ValueError):
    pass


class ParseError(DTGraphError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class EmptySeed(DTGraphError, ValueError):
    pass


class LengthMismatch(DTGraphError, ValueError):
    pass


class InvalidParameters(DTGraphError, ValueError):
    pass


class Unreachable(DTGraphError, ValueError):
    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} is unreachable from the seed set")


class NotThreshold(DTGraphError, ValueError):
    pass


class DegenerateWeights(DTGraphError, ValueError):
    pass


class PreconditionViolated(DTGraphError, ValueError):
    pass


class SynthesisFailed(DTGraphError, RuntimeError):
    """Constructed weights failed verification. Always an implementation bug."""


class BoundViolated(DTGraphError, RuntimeError):
    """A proven structural bound did not hold. Always an implementation bug."""


class NotRealizing(DTGraphError, ValueError):
    pass


class Disconnected(DTGraphError, ValueError):
    pass


class NoTriplets(DTGraphError, ValueError):
    pass


class UnknownName(DTGraphError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class EmptySequence(DTGraphError, ValueError):
    pass


class TooLarge(DTGraphError, ValueError):
    pass


class UnsupportedDisconnected(DTGraphError, ValueError):
    pass
