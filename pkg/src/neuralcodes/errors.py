class NeuralCodeError(ValueError):
    """Base class for all errors raised by this package."""


class ParseError(NeuralCodeError):
    def __init__(self, message, line=None, pos=None):
        self.line = line
        self.pos = pos
        where = []
        if line is not None:
            where.append(f"line {line}")
        if pos is not None:
            where.append(f"position {pos}")
        prefix = ", ".join(where)
        super().__init__(f"{prefix}: {message}" if prefix else message)


class GuardError(NeuralCodeError):
    """An enumeration would exceed a configured size bound."""


class PreconditionError(NeuralCodeError):
    """An operation was called on input that does not meet its precondition.

    Examples: factoring a map that is not monomial, or recovering a code map
    from a homomorphism that violates H1 or H3.
    """
