"""Exception types shared across the package."""


class IndZeroError(Exception):
    pass


class DomainError(IndZeroError, ValueError):
    """Input lies outside the domain of a function (e.g. log at 0)."""


class PreconditionError(IndZeroError, ValueError):
    pass


class CapExceeded(IndZeroError, ValueError):
    """A size guardrail was hit (vertex cap, enumeration limit, series cap)."""


class GraphParseError(IndZeroError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DegenerateCurveError(IndZeroError, ArithmeticError):
    """The iterated curve came within tolerance of -1."""


class SolverError(IndZeroError, ArithmeticError):
    pass
