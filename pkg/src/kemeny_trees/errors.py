"""Exception hierarchy.

Everything raised on purpose by the library derives from :class:`KemenyError`.
The CLI maps :class:`DomainError` subclasses to exit status 3 and
:class:`InvalidSpec` to exit status 1.
"""


class KemenyError(Exception):
    """Base class for all library errors."""


class GraphError(KemenyError, ValueError):
    """Malformed graph input."""


class InvalidVertex(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class InvalidSpec(KemenyError, ValueError):
    """A family spec or input file could not be parsed or violates its domain."""


class DomainError(KemenyError):
    """The input is well-formed but outside an operation's domain."""


class Disconnected(DomainError):
    pass


class NotATree(DomainError):
    pass


class TrivialGraph(DomainError):
    pass


class InvalidProfile(DomainError):
    pass


class OutOfRange(DomainError):
    pass


class EmptyClass(DomainError):
    pass


class CapExceeded(DomainError):
    pass


class UnknownCheck(DomainError):
    pass


class ConvergenceFailure(KemenyError, ArithmeticError):
    pass
