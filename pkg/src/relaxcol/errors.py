"""Exception types shared across the package.

The CLI maps these onto exit codes, so each class carries the code it
should produce.
"""


class RelaxColError(Exception):
    exit_code = 1


class MalformedInputError(RelaxColError, ValueError):
    exit_code = 2

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class EmptyComplexError(MalformedInputError):
    pass


class UnknownVertexError(RelaxColError, KeyError):
    exit_code = 2

    def __str__(self):
        return f"unknown vertex {self.args[0]!r}"


class ContextMismatchError(RelaxColError, ValueError):
    """Polynomials or colorings built over different vertex tables were mixed."""

    exit_code = 2


class ResourceLimitError(RelaxColError, RuntimeError):
    exit_code = 3


class BudgetExhausted(RelaxColError, RuntimeError):
    """Search ran out of nodes before deciding.

    ``lower`` and ``upper`` are the best bounds established so far; for a
    chromatic-number search the true value lies in ``[lower, upper]``.
    """

    exit_code = 3

    def __init__(self, message, lower=None, upper=None, nodes=0):
        super().__init__(message)
        self.lower = lower
        self.upper = upper
        self.nodes = nodes


class InvalidWitnessError(RelaxColError, ValueError):
    exit_code = 2


class InvariantViolation(RelaxColError, AssertionError):
    """Two independent computations that must agree did not."""

    exit_code = 4
