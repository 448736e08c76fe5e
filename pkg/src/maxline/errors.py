"""Exception hierarchy shared by every maxline module."""


class MaxlineError(Exception):
    """Base class for all errors raised by maxline."""


class LoopArc(MaxlineError, ValueError):
    pass


class DuplicateArc(MaxlineError, ValueError):
    pass


class VertexOutOfRange(MaxlineError, IndexError):
    pass


class ArcNotPresent(MaxlineError, KeyError):
    pass


class InvalidSize(MaxlineError, ValueError):
    pass


class InvalidSpec(MaxlineError, ValueError):
    pass


class TooLarge(MaxlineError, ValueError):
    """Input exceeds the desk-scale guard of an exhaustive routine."""


class NotLineDigraph(MaxlineError, ValueError):
    """Raised by root reconstruction; carries the forbidden-pattern witness."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"not a line digraph: {witness}")


class InternalInconsistency(MaxlineError, RuntimeError):
    """A result contradicts an invariant that should be unreachable."""


class BoundViolated(MaxlineError, RuntimeError):
    """A root beat the closed-form maximum arc count."""


class ParseError(MaxlineError, ValueError):
    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")
