"""The Ruban continued fraction algorithm.

A p-adic number alpha = alpha_0 is expanded by taking a_n = pfloor(alpha_n) and
alpha_{n+1} = 1 / (alpha_n - a_n), until alpha_n is in S_p. For rational numbers
everything is exact. For a square root of an integer D we follow the complete
quotients alpha_n = (R_n + sqrt(D)) / Q_n, with R_n and Q_n rationals with
p-power denominators, and use a Hensel root of sufficient precision to compute
each floor.
"""
from fractions import Fraction
import logging
from typing import Generator, List, Optional, Tuple

from rubancf.convergents import Convergents
from rubancf.errors import BudgetExceeded, PrecisionOverflow
from rubancf.expansion import CFExpansion, Tail, TailKind
from rubancf.padic import (
        Branch, HenselRoot, Rational, SpElement, padic_abs, padic_sqrt, pfloor, vp)
from rubancf.prime import Prime
from rubancf.settings import Settings, resolve


logger = logging.getLogger(__name__)


def _has_p_power_denominator(x: Fraction, p: int) -> bool:
    denominator = x.denominator
    while denominator % p == 0:
        denominator //= p
    return denominator == 1


def step_rational(alpha: Rational, p: int) -> Tuple[SpElement, Optional[Fraction]]:
    """Take one step of the expansion of a rational number.

    Args:
        alpha: The current complete quotient.
        p: The prime.

    Returns:
        The partial quotient a = pfloor(alpha), and the next complete quotient
        1 / (alpha - a), or None if alpha = a and the expansion terminates.
    """
    alpha = Fraction(alpha)
    quotient = pfloor(alpha, p)
    if alpha == quotient.value:
        return quotient, None
    return quotient, 1 / (alpha - quotient.value)


def expand_rational(
        alpha: Rational, p: int, budget: Optional[int] = None,
        settings: Optional[Settings] = None, strict: bool = True) -> CFExpansion:
    """Expand a rational number into a Ruban continued fraction.

    Every rational number has an expansion that is either finite, or ends in an
    infinite repetition of p - 1/p. The latter is detected exactly, by a complete
    quotient alpha_n with n >= 1 becoming equal to -1/p, which is the value of
    [p - 1/p, p - 1/p, ...]. The quotients up to but not including that complete
    quotient are returned.

    Args:
        alpha: The number to expand.
        p: The prime.
        budget: Maximum number of partial quotients to compute, defaults to
                settings.rational_budget.
        settings: Settings to use, None to use those from the environment.
        strict: Whether to raise if the budget runs out. If False, an expansion
                with an OPEN tail is returned instead.

    Returns:
        The expansion. Its complete_quotients attribute contains alpha_0 up to
        and including the last complete quotient that was computed.

    Raises:
        NotPrimeError: If p is not a prime.
        BudgetExceeded: If strict and the budget ran out, which means that the
                budget was too small.
    """
    settings = resolve(settings)
    p = Prime(p, settings.max_prime)
    if budget is None:
        budget = settings.rational_budget
    if budget < 1:
        raise ValueError('Budget must be at least 1')

    fixed_point = Fraction(-1, p)
    current = Fraction(alpha)
    quotients = []  # type: List[SpElement]
    complete = [current]

    for _ in range(budget):
        quotient, next_alpha = step_rational(current, p)
        quotients.append(quotient)
        logger.debug('alpha_%s = %s, a_%s = %s', len(quotients) - 1, current,
                     len(quotients) - 1, quotient)

        if next_alpha is None:
            return CFExpansion(p, quotients, Tail(TailKind.TERMINATED),
                               source=Fraction(alpha), complete_quotients=complete)

        complete.append(next_alpha)
        if next_alpha == fixed_point:
            return CFExpansion(p, quotients, Tail(TailKind.PERIODIC_P_MINUS),
                               source=Fraction(alpha), complete_quotients=complete)
        current = next_alpha

    logger.info('Expansion of %s in Q_%s did not finish in %s steps',
                alpha, p, budget)
    if strict:
        raise BudgetExceeded(
                'Expansion of {} in Q_{} did not finish in {} steps'.format(
                    alpha, p, budget), budget)
    return CFExpansion(p, quotients, Tail(TailKind.OPEN), source=Fraction(alpha),
                       complete_quotients=complete)


class SurdState:
    """A complete quotient (R + sqrt(D)) / Q of the expansion of sqrt(D).

    States compare equal if they have the same radicand, prime, branch, R and Q,
    regardless of index and root precision. Fractions are always in lowest terms,
    so this is exact.

    Attributes:
        D: The radicand.
        p: The prime.
        R: The rational R_n.
        Q: The rational Q_n, never zero.
        index: The index n of this complete quotient.
        root: The square root of D in use, at its current precision.
    """
    def __init__(
            self, D: int, p: int, R: Rational, Q: Rational, index: int,
            root: HenselRoot) -> None:
        """Create a SurdState."""
        self.D = D
        self.p = p
        self.R = Fraction(R)
        self.Q = Fraction(Q)
        self.index = index
        self.root = root

    @property
    def branch(self) -> Branch:
        """The branch of the square root."""
        return self.root.branch

    def validate(self) -> None:
        """Check that this state is well formed.

        Raises:
            AssertionError: If Q is zero, R or Q have a denominator that is not a
                    power of p, or Q does not divide D - R**2.
        """
        assert self.Q != 0, 'Q_{} is zero'.format(self.index)
        assert _has_p_power_denominator(self.R, self.p), 'Bad R_{} = {}'.format(
                self.index, self.R)
        assert _has_p_power_denominator(self.Q, self.p), 'Bad Q_{} = {}'.format(
                self.index, self.Q)
        assert _has_p_power_denominator((self.D - self.R**2) / self.Q, self.p), (
                'Q_{} does not divide D - R_{}**2'.format(self.index, self.index))

    def approximation(self) -> Fraction:
        """Return (R + s) / Q, with s the root residue.

        This is congruent to the complete quotient modulo p**(K - vp(Q)), where K is
        the precision of the root.
        """
        return (self.R + self.root.residue) / self.Q

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SurdState):
            return NotImplemented
        return ((self.D, self.p, self.branch, self.R, self.Q) ==
                (other.D, other.p, other.branch, other.R, other.Q))

    def __hash__(self) -> int:
        return hash((self.D, self.p, self.branch, self.R, self.Q))

    def __repr__(self) -> str:
        return 'SurdState(n={}, R={}, Q={})'.format(self.index, self.R, self.Q)


def initial_state(
        D: int, p: int, branch: Branch, settings: Optional[Settings] = None
        ) -> SurdState:
    """Return the state (0, 1) representing sqrt(D) itself.

    Raises:
        NotPrimeError: If p is not a prime.
        PerfectSquare: If D is the square of an integer.
        NotASquare: If D is not a square in Q_p.
    """
    settings = resolve(settings)
    p = Prime(p, settings.max_prime)
    root = padic_sqrt(D, p, settings.initial_precision, branch)
    return SurdState(D, p, 0, 1, 0, root)


def step_surd(
        state: SurdState, settings: Optional[Settings] = None
        ) -> Tuple[SpElement, SurdState]:
    """Take one step of the expansion of a square root.

    The floor of (R + sqrt(D)) / Q is computed from the Hensel root. If the root
    is not precise enough to determine the digits at positions vp(alpha_n) to 0
    with `precision_guard` digits to spare, its precision is doubled until it is.

    Args:
        state: The current state (R_n, Q_n).
        settings: Settings to use, None to use those from the environment.

    Returns:
        The partial quotient a_n and the state (R_{n+1}, Q_{n+1}), which carries
        the root at the precision that was needed.

    Raises:
        PrecisionOverflow: If more than settings.precision_cap digits of the root
                would be needed.
    """
    settings = resolve(settings)
    guard = settings.precision_guard
    p = state.p
    root = state.root
    needed = max(int(vp(state.Q, p)), 0) + 1 + guard

    while True:
        if root.precision >= needed:
            numerator = state.R + root.residue
            valuation = vp(numerator, p)
            if not valuation.is_infinite and root.precision - int(valuation) >= guard:
                break
        precision = max(2 * root.precision, needed)
        if precision > settings.precision_cap:
            raise PrecisionOverflow(
                    'Step {} of sqrt({}) in Q_{} needs more than {} digits'.format(
                        state.index, state.D, p, settings.precision_cap))
        logger.debug('Raising precision of sqrt(%s) in Q_%s to %s',
                     state.D, p, precision)
        root = root.refine(precision)

    quotient = pfloor(numerator / state.Q, p)
    R_next = quotient.value * state.Q - state.R
    Q_next = (state.D - R_next**2) / state.Q
    if not _has_p_power_denominator(Q_next, p):
        raise AssertionError('Q_{} = {} is not a p-adic rational'.format(
            state.index + 1, Q_next))

    logger.debug('a_%s = %s, R_%s = %s, Q_%s = %s', state.index, quotient,
                 state.index + 1, R_next, state.index + 1, Q_next)
    return quotient, SurdState(state.D, p, R_next, Q_next, state.index + 1, root)


def iter_surd_states(
        D: int, p: int, branch: Branch, settings: Optional[Settings] = None
        ) -> Generator[Tuple[SpElement, SurdState], None, None]:
    """Expand sqrt(D) lazily.

    This yields (a_n, state_n) for n = 0, 1, ..., where state_n is the complete
    quotient whose floor is a_n. It does not stop by itself.

    Raises:
        NotPrimeError: If p is not a prime.
        PerfectSquare: If D is the square of an integer.
        NotASquare: If D is not a square in Q_p.
        PrecisionOverflow: See :func:`step_surd`.
    """
    settings = resolve(settings)
    state = initial_state(D, p, branch, settings)
    while True:
        quotient, next_state = step_surd(state, settings)
        yield quotient, state
        state = next_state


def expand_surd(
        D: int, p: int, branch: Branch, N: int,
        settings: Optional[Settings] = None) -> CFExpansion:
    """Compute the first N partial quotients of sqrt(D) in Q_p.

    Args:
        D: The radicand, a square in Q_p but not in Z.
        p: The prime.
        branch: Which square root to expand.
        N: The number of partial quotients, at least 1.
        settings: Settings to use, None to use those from the environment.

    Returns:
        An expansion with an OPEN tail, with states 0 to N, and the root at the
        highest precision that was used.

    Raises:
        NotPrimeError: If p is not a prime.
        PerfectSquare: If D is the square of an integer.
        NotASquare: If D is not a square in Q_p.
        PrecisionOverflow: See :func:`step_surd`.
    """
    if N < 1:
        raise ValueError('Need at least one partial quotient')
    settings = resolve(settings)

    state = initial_state(D, p, branch, settings)
    quotients = []  # type: List[SpElement]
    states = [state]
    for _ in range(N):
        quotient, state = step_surd(state, settings)
        quotients.append(quotient)
        states.append(state)

    return CFExpansion(state.p, quotients, Tail(TailKind.OPEN), root=state.root,
                       states=states)


def padic_error(expansion: CFExpansion, n: int, verify: bool = True) -> Fraction:
    """Return |alpha - r_n / q_n|_p as predicted by the partial quotients.

    This is 1 / (|a_{n+1}|_p |q_n|_p**2). If verify is set and the expanded number
    is known, the prediction is compared with the directly computed distance;
    for square roots the root is refined until its precision exceeds the
    predicted valuation.

    Args:
        expansion: The expansion, which must have a partial quotient a_{n+1},
                possibly from its periodic tail.
        n: The index of the convergent.
        verify: Whether to check the prediction.

    Returns:
        The predicted distance, a power of p.

    Raises:
        ValueError: If a_{n+1} is not known.
        AssertionError: If verification fails.
    """
    p = expansion.p
    quotients = expansion.prefix(n + 2)
    table = Convergents(quotients)
    q_n = table.q(n)
    convergent = table.pair(n).value()
    predicted = 1 / (quotients[n + 1].abs_value() * padic_abs(q_n, p)**2)

    if verify:
        if expansion.source is not None:
            actual = padic_abs(expansion.source - convergent, p)
        elif expansion.root is not None:
            order = -int(vp(predicted, p))
            root = expansion.root
            precision = max(root.precision, order + 8)
            if precision > root.precision:
                root = root.refine(precision)
            actual = padic_abs(root.residue - convergent, p)
        else:
            actual = predicted
        if actual != predicted:
            raise AssertionError(
                    'Predicted error {} at n = {} does not match actual {}'.format(
                        predicted, n, actual))
    return predicted
