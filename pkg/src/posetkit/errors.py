"""Exception types shared across the toolkit."""


class PosetError(Exception):
    """Base class for all toolkit errors."""


class CycleError(PosetError):
    """The given cover relation contains a directed cycle."""


class NotReducedError(PosetError):
    """A cover pair is transitively implied and auto-reduction is off."""


class UnknownElement(PosetError):
    """An element id does not belong to the poset."""


class NotComparable(PosetError):
    """Two elements are not ordered the way the operation requires."""


class NotBounded(PosetError):
    """The poset lacks a unique minimum or a unique maximum."""


class NotGraded(PosetError):
    """The maximal chains of the poset have unequal lengths."""


class PreconditionViolated(PosetError):
    """An argument fails the operation's stated precondition."""


class NotELLabelled(PosetError):
    """A required increasing chain is missing or ambiguous."""


class NotLeftModular(PosetError):
    """A chain assumed left modular fails a property the operation needs."""


class NotViable(PosetError):
    """A relative meet or join required by a closure is undefined."""


class NotLinearExtension(PosetError):
    """The vertex labelling is not an order-preserving bijection onto [n]."""


class NotNonStraddling(PosetError):
    """A partition argument contains a straddle."""


class SizeLimit(PosetError):
    """The requested instance exceeds the configured size cap."""


class ParseError(PosetError):
    """A poset document is not syntactically valid."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class ValidationError(PosetError):
    """A poset document is well-formed JSON but semantically broken."""
