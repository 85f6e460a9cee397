"""Deciding whether expansions are finite, periodic or neither.

Rational numbers always have a finite expansion or one that ends in p - 1/p
repeated forever. For square roots there is no complete decision procedure, but
an expansion is periodic exactly when a state (R_n, Q_n) repeats, and it is
certainly not periodic if some m has R_m Q_m <= 0 and R_{m+1}**2 > D, after
which |R_n| grows forever. For D < 0 this happens at m = 0.
"""
from enum import Enum
from fractions import Fraction
import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from rubancf.expansion import CFExpansion, Tail, TailKind
from rubancf.padic import Branch, Rational, SpElement
from rubancf.ruban import SurdState, expand_rational, expand_surd
from rubancf.settings import Settings, resolve


logger = logging.getLogger(__name__)


class RationalVerdictKind(Enum):
    FINITE = 'finite'
    P_MINUS_PERIODIC = 'p-minus-periodic'


class RationalVerdict:
    """The classification of the expansion of a rational number.

    Attributes:
        kind: Whether the expansion is finite or ends in p - 1/p repeated.
        quotients: All the partial quotients if finite, or the preperiod.
        expansion: The expansion itself.
    """
    def __init__(self, kind: RationalVerdictKind, expansion: CFExpansion) -> None:
        """Create a RationalVerdict."""
        self.kind = kind
        self.quotients = expansion.quotients
        self.expansion = expansion

    @property
    def preperiod(self) -> int:
        """The number of quotients before the periodic part, if any."""
        return len(self.quotients)


def classify_rational(
        alpha: Rational, p: int, budget: Optional[int] = None,
        settings: Optional[Settings] = None) -> RationalVerdict:
    """Classify the expansion of a rational number.

    The verdict is checked by evaluating it back to a rational number.

    Args:
        alpha: The number to classify.
        p: The prime.
        budget: The step budget, defaults to settings.rational_budget.
        settings: Settings to use, None to use those from the environment.

    Returns:
        The verdict.

    Raises:
        BudgetExceeded: If the budget was too small.
        AssertionError: If the verdict does not evaluate back to alpha.
    """
    expansion = expand_rational(alpha, p, budget, settings)
    if expansion.tail.kind == TailKind.TERMINATED:
        kind = RationalVerdictKind.FINITE
    else:
        kind = RationalVerdictKind.P_MINUS_PERIODIC

    value = expansion.value()
    if value != Fraction(alpha):
        raise AssertionError('Expansion of {} evaluates to {}'.format(alpha, value))
    logger.info('%s in Q_%s is %s after %s quotients', alpha, p, kind.value,
                len(expansion.quotients))
    return RationalVerdict(kind, expansion)


class NonPeriodicityCertificate:
    """Proof that the expansion of a square root is not ultimately periodic.

    This is an index m with R_m Q_m <= 0 and R_{m+1}**2 > D.

    Attributes:
        m: The index.
        R: R_m.
        Q: Q_m.
        R_next: R_{m+1}.
        D: The radicand.
    """
    def __init__(
            self, m: int, R: Fraction, Q: Fraction, R_next: Fraction, D: int
            ) -> None:
        """Create a NonPeriodicityCertificate."""
        self.m = m
        self.R = R
        self.Q = Q
        self.R_next = R_next
        self.D = D

    @staticmethod
    def from_states(
            state: SurdState, next_state: SurdState
            ) -> Optional['NonPeriodicityCertificate']:
        """Return a certificate for two consecutive states if they form one."""
        certificate = NonPeriodicityCertificate(
                state.index, state.R, state.Q, next_state.R, state.D)
        if certificate.is_valid:
            return certificate
        return None

    @property
    def is_valid(self) -> bool:
        """Whether the two inequalities hold."""
        return self.R * self.Q <= 0 and self.R_next**2 > self.D

    def verify(self, states: Sequence[SurdState]) -> bool:
        """Check this certificate against a list of states.

        This checks that the certificate is valid, that it matches states m and
        m + 1, and that |R_n| strictly increases from n = m + 1 to the end of
        the list.

        Args:
            states: The states 0, 1, ... of the expansion.

        Returns:
            True iff everything checks out.
        """
        if not self.is_valid or len(states) < self.m + 2:
            return False
        state, next_state = states[self.m], states[self.m + 1]
        if (state.R, state.Q, next_state.R) != (self.R, self.Q, self.R_next):
            return False
        magnitudes = [abs(s.R) for s in states[self.m + 1:]]
        return all(a < b for a, b in zip(magnitudes, magnitudes[1:]))

    def __repr__(self) -> str:
        return 'NonPeriodicityCertificate(m={}, R={}, Q={}, R_next={})'.format(
                self.m, self.R, self.Q, self.R_next)


class SurdVerdictKind(Enum):
    PERIODIC = 'periodic'
    CERTIFIED_NON_PERIODIC = 'certified-non-periodic'
    INCONCLUSIVE = 'inconclusive'


class SurdVerdict:
    """The classification of the expansion of a square root.

    Attributes:
        kind: The outcome.
        steps: The number of states that were examined.
        preperiod: For PERIODIC, the index of the first repeated state.
        period: For PERIODIC, the distance to its repeat.
        cycle: For PERIODIC, the states in the cycle.
        certificate: For CERTIFIED_NON_PERIODIC, the certificate.
    """
    def __init__(
            self, kind: SurdVerdictKind, steps: int,
            preperiod: Optional[int] = None, period: Optional[int] = None,
            cycle: Optional[List[SurdState]] = None,
            certificate: Optional[NonPeriodicityCertificate] = None) -> None:
        """Create a SurdVerdict."""
        self.kind = kind
        self.steps = steps
        self.preperiod = preperiod
        self.period = period
        self.cycle = cycle
        self.certificate = certificate

    @property
    def tail(self) -> Tail:
        """The tail of the expansion, a cycle if PERIODIC, OPEN otherwise."""
        if self.kind == SurdVerdictKind.PERIODIC:
            return Tail(TailKind.PERIODIC_CYCLE, self.preperiod, self.period)
        return Tail(TailKind.OPEN)

    def __repr__(self) -> str:
        if self.kind == SurdVerdictKind.PERIODIC:
            return 'SurdVerdict(periodic, preperiod={}, period={})'.format(
                    self.preperiod, self.period)
        if self.kind == SurdVerdictKind.CERTIFIED_NON_PERIODIC:
            return 'SurdVerdict(certified-non-periodic, {})'.format(self.certificate)
        return 'SurdVerdict(inconclusive, steps={})'.format(self.steps)


def _surd_states(
        D: int, p: int, branch: Branch, budget: Optional[int],
        settings: Settings) -> CFExpansion:
    if budget is None:
        budget = settings.surd_budget
    if budget < 1:
        raise ValueError('Budget must be at least 1')
    return expand_surd(D, p, branch, budget, settings)


def certificate_search(
        D: int, p: int, branch: Branch, budget: Optional[int] = None,
        settings: Optional[Settings] = None
        ) -> Optional[NonPeriodicityCertificate]:
    """Look for a non-periodicity certificate in the expansion of sqrt(D).

    Args:
        D: The radicand.
        p: The prime.
        branch: The square root to expand.
        budget: Number of steps to take, defaults to settings.surd_budget. For
                D < 0 a single step suffices.
        settings: Settings to use, None to use those from the environment.

    Returns:
        The certificate with the smallest m among states 0 to budget, or None.
    """
    settings = resolve(settings)
    if D < 0:
        budget = 1
    expansion = _surd_states(D, p, branch, budget, settings)
    for state, next_state in zip(expansion.states, expansion.states[1:]):
        certificate = NonPeriodicityCertificate.from_states(state, next_state)
        if certificate is not None:
            logger.debug('Found %s for sqrt(%s) in Q_%s', certificate, D, p)
            return certificate
    return None


def find_state_repeat(states: Iterable[SurdState]) -> Optional[Tuple[int, int]]:
    """Find the first state that equals an earlier one.

    Args:
        states: A sequence of states.

    Returns:
        Positions (i, j) with i < j of the first repeat, or None.
    """
    seen = dict()   # type: Dict[SurdState, int]
    for j, state in enumerate(states):
        if state in seen:
            return seen[state], j
        seen[state] = j
    return None


def classify_states(
        states: Sequence[SurdState],
        quotients: Optional[Sequence[SpElement]] = None) -> SurdVerdict:
    """Classify an expansion from its states.

    This looks for an exact repeat and a certificate in a single scan. Once a
    certificate is found, the rest of the states are still checked, for growth of
    |R_n| and for the absence of repeats, both of which must hold.

    Args:
        states: States 0, 1, ... of an expansion.
        quotients: The partial quotients belonging to the states. If given, a
                periodic verdict is checked against them.

    Returns:
        The verdict. Steps is the number of states examined.

    Raises:
        AssertionError: If a certificate and a repeat are both found, or |R_n|
                does not grow after a certificate, or quotients contradict a
                repeat.
    """
    seen = dict()   # type: Dict[SurdState, int]
    certificate = None     # type: Optional[NonPeriodicityCertificate]

    for j, state in enumerate(states):
        if state in seen:
            if certificate is not None:
                raise AssertionError(
                        'State {} repeats despite {}'.format(state, certificate))
            i = seen[state]
            if quotients is not None:
                for t in range(len(quotients) - j):
                    if quotients[i + t] != quotients[j + t]:
                        raise AssertionError('Quotient {} breaks period {}'.format(
                            j + t, j - i))
            logger.info('Expansion is periodic, preperiod %s period %s', i, j - i)
            return SurdVerdict(SurdVerdictKind.PERIODIC, j + 1, preperiod=i,
                               period=j - i, cycle=list(states[i:j]))
        seen[state] = j

        if j == 0:
            continue
        previous = states[j - 1]
        if certificate is None:
            certificate = NonPeriodicityCertificate.from_states(previous, state)
            if certificate is not None:
                logger.debug('Found %s', certificate)
        elif abs(state.R) <= abs(previous.R):
            raise AssertionError('|R_{}| does not grow after {}'.format(
                j, certificate))

    if certificate is not None:
        logger.info('Expansion is not periodic, certificate at m = %s',
                    certificate.m)
        return SurdVerdict(SurdVerdictKind.CERTIFIED_NON_PERIODIC, len(states),
                           certificate=certificate)
    logger.info('No period or certificate in %s states', len(states))
    return SurdVerdict(SurdVerdictKind.INCONCLUSIVE, len(states))


def detect_cycle_surd(
        D: int, p: int, branch: Branch, budget: Optional[int] = None,
        settings: Optional[Settings] = None) -> SurdVerdict:
    """Classify the expansion of sqrt(D) by scanning states 0 to budget.

    Args:
        D: The radicand.
        p: The prime.
        branch: The square root to expand.
        budget: Number of steps to take, defaults to settings.surd_budget.
        settings: Settings to use, None to use those from the environment.

    Returns:
        PERIODIC if a state repeats, CERTIFIED_NON_PERIODIC if there is a
        certificate, INCONCLUSIVE otherwise.
    """
    settings = resolve(settings)
    expansion = _surd_states(D, p, branch, budget, settings)
    return classify_states(expansion.states, expansion.quotients)


def classify_surd(
        D: int, p: int, branch: Branch, budget: Optional[int] = None,
        settings: Optional[Settings] = None) -> SurdVerdict:
    """Classify the expansion of sqrt(D).

    For D < 0 the certificate at m = 0 is produced after a single step, so the
    budget is not used and the verdict always reports 2 examined states. For
    D > 0 this is :func:`detect_cycle_surd`.

    Raises:
        NotASquare: If D has no square root in Q_p.
        PerfectSquare: If D is the square of an integer.
    """
    settings = resolve(settings)
    if D < 0:
        certificate = certificate_search(D, p, branch, settings=settings)
        assert certificate is not None
        return SurdVerdict(SurdVerdictKind.CERTIFIED_NON_PERIODIC, 2,
                           certificate=certificate)
    return detect_cycle_surd(D, p, branch, budget, settings)
