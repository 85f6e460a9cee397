import logging
import os
from typing import Optional


logger = logging.getLogger(__name__)


#: Name of the environment variable that overrides the step budgets.
BUDGET_VARIABLE = 'RUBAN_BUDGET'


class Settings:
    """Tunable limits for expansions and checks.

    Attributes:
        rational_budget (int): Maximum number of steps to take when expanding a
                rational number. Every rational expansion terminates or reaches the
                (p - 1/p)-periodic tail, so running out of this is a defect.

        surd_budget (int): Number of steps to take when expanding or classifying a
                quadratic surd.

        precision_guard (int): Number of extra p-adic digits of the square root to
                keep beyond what is strictly needed to determine a partial quotient.

        initial_precision (int): Number of p-adic digits to start a square root
                with. Precision doubles from here when needed.

        precision_cap (int): Maximum number of p-adic digits of a square root. If a
                partial quotient needs more than this, a PrecisionOverflow is raised.

        evidence_depth (int): Number of partial quotients to materialise when
                collecting finite-depth evidence on a quasi-periodic spec.

        max_prime (int): Largest prime that is accepted.

        height_rtol (float): Relative width to which absolute height intervals are
                refined.

    Budgets can be overridden globally by setting the ``RUBAN_BUDGET`` environment
    variable to an integer, and using :meth:`from_environment`, which is what all
    operations do if you do not pass them a Settings object.
    """

    def __init__(self) -> None:
        """Create a default Settings object."""
        self.rational_budget = 10**4
        self.surd_budget = 10**3
        self.precision_guard = 8
        self.initial_precision = 16
        self.precision_cap = 1 << 16
        self.evidence_depth = 10**4
        self.max_prime = 2**64
        self.height_rtol = 1e-9

    @staticmethod
    def from_environment() -> 'Settings':
        """Create a Settings object, taking overrides from the environment.

        Returns:
            Default settings, with the budgets replaced by the value of the
            ``RUBAN_BUDGET`` environment variable if it is set.

        Raises:
            ValueError: If ``RUBAN_BUDGET`` is set but is not a positive integer.
        """
        settings = Settings()
        budget = os.environ.get(BUDGET_VARIABLE)
        if budget is not None:
            try:
                value = int(budget)
            except ValueError:
                raise ValueError(
                        'Invalid value {} for {}, expected an integer'.format(
                            budget, BUDGET_VARIABLE))
            if value < 1:
                raise ValueError('{} must be at least 1'.format(BUDGET_VARIABLE))
            logger.debug('Using budget %s from %s', value, BUDGET_VARIABLE)
            settings.rational_budget = value
            settings.surd_budget = value
        return settings


def resolve(settings: Optional[Settings]) -> Settings:
    """Return the given settings, or those from the environment if None."""
    if settings is None:
        return Settings.from_environment()
    return settings
