class RubanError(RuntimeError):
    """Base class for all errors raised by rubancf.

    Catch this if you want to handle anything that goes wrong inside the library
    in one place. The command line tool maps the two main subclasses to exit codes,
    :class:`PreconditionError` to 2 and :class:`BudgetExceeded` and
    :class:`PrecisionOverflow` to 3.
    """
    pass


class PreconditionError(RubanError):
    """Raised when an input does not satisfy the contract of an operation."""
    pass


class NotPrimeError(PreconditionError):
    """Raised when a modulus is not a prime, or is larger than supported."""
    pass


class NotASquare(PreconditionError):
    """Raised when a radicand has no square root in the p-adic numbers."""
    pass


class PerfectSquare(PreconditionError):
    """Raised when a radicand is a square of an integer.

    The expansion of an integer square root is that of a rational number, use
    :func:`rubancf.expand_rational` for those.
    """
    pass


class HypothesisViolated(PreconditionError):
    """Raised when a height bound is requested for a spec with a_0 != 0."""
    pass


class SpecInconsistent(PreconditionError):
    """Raised when a quasi-periodic spec contradicts its own repetition law."""
    pass


class InvalidQuotient(PreconditionError):
    """Raised when a value is not a valid (partial) quotient for the prime."""
    pass


class BudgetExceeded(RubanError):
    """Raised when an expansion does not finish within its step budget.

    For rational input this should never happen, as every rational number has a
    finite or ultimately (p - 1/p)-periodic expansion. Seeing this error for a
    rational input means that either the budget is far too small, or there is a
    bug.

    Attributes:
        steps: The number of steps that were taken.
    """
    def __init__(self, message: str, steps: int) -> None:
        """Create a BudgetExceeded error.

        Args:
            message: Description of what ran out of budget.
            steps: The number of steps that were taken.
        """
        super().__init__(message)
        self.steps = steps


class PrecisionOverflow(RubanError):
    """Raised when a Hensel root would need more digits than allowed.

    This is a diagnostic, the expansion itself is fine. Retry with a larger
    :attr:`Settings.precision_cap`.
    """
    pass


class ZeroDenominator(RubanError, ZeroDivisionError):
    """Raised when evaluating a continued fraction divides by zero."""
    pass


class Degenerate(RubanError):
    """Raised when the value of a periodic continued fraction is undefined."""
    pass
