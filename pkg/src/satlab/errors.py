"""Exception hierarchy shared by every satlab module."""


class SatlabError(Exception):
    """Base class for all satlab errors."""


class CapacityError(SatlabError):
    """Raised when a graph or an enumeration exceeds a configured limit."""


class Graph6ParseError(SatlabError, ValueError):
    """Malformed graph6 input; ``offset`` is the byte position of the fault."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class HypothesisError(SatlabError, ValueError):
    """Arguments fall outside the hypotheses of a formula or builder."""


class ConstraintViolation(SatlabError, ValueError):
    """An attachment spec breaks one of the numbered family constraints."""

    def __init__(self, constraint, message):
        super().__init__(f"constraint ({constraint}) violated: {message}")
        self.constraint = constraint


class PreconditionError(SatlabError, ValueError):
    """The input graph does not satisfy the hypotheses an audit relies on."""

    def __init__(self, hypothesis, message=""):
        text = f"precondition failed: {hypothesis}"
        if message:
            text += f" ({message})"
        super().__init__(text)
        self.hypothesis = hypothesis


class InternalConsistencyError(SatlabError, AssertionError):
    """An invariant that must always hold was found broken."""
