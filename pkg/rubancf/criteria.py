"""Checks of the hypotheses of transcendence criteria for quasi-periodic fractions.

The criteria conclude, through the p-adic Roth theorem, that a quasi-periodic
continued fraction is transcendental, or quadratic irrational or transcendental,
if its blocks are repeated often enough. Nothing here proves anything, the
checks establish that the hypotheses hold, certainly where they follow from
closed forms, and as finite-depth evidence where they can only be observed.
"""
from abc import ABC, abstractmethod
from enum import Enum
from fractions import Fraction
import logging
from typing import List, Optional, Union

from mpmath import mp
from sympy import multiplicity

from rubancf.convergents import Convergents, eval_finite, mirror_ratio
from rubancf.expansion import p_minus_quotient
from rubancf.padic import SpElement, padic_abs
from rubancf.quasi_periodic import (
        Block, GeometricBlocks, QuasiPeriodicSpec, materialize, scan_period)
from rubancf.settings import Settings, resolve


logger = logging.getLogger(__name__)


Real = Union[int, Fraction, float]

Bound = Union[Fraction, mp.mpf]

#: Ratio value of closed forms where lambda_i grows faster than n_i.
UNBOUNDED = float('inf')

ROTH = ('By the p-adic Roth theorem, a quasi-periodic continued fraction with '
        'these properties has approximations that are too good for an '
        'algebraic number of the excluded degrees.')


def _log_ratio(A: Real, p: int) -> Optional[int]:
    """Return t if A = p**t for a positive integer t, None otherwise."""
    if isinstance(A, float):
        if not A.is_integer():
            return None
        A = int(A)
    A = Fraction(A)
    if A.denominator != 1 or A < p:
        return None
    t = int(multiplicity(p, A.numerator))
    if p**t == A.numerator:
        return t
    return None


def _bound(A: Real, p: int, factor: int) -> Bound:
    if A < p:
        raise ValueError('A = {} must be at least p = {}'.format(A, p))
    t = _log_ratio(A, p)
    if t is not None:
        return Fraction(factor * t - 1)
    with mp.workdps(30):
        if isinstance(A, Fraction):
            log_A = mp.log(mp.mpf(A.numerator) / A.denominator)
        else:
            log_A = mp.log(A)
        return factor * log_A / mp.log(p) - 1


def bound_B(A: Real, p: int) -> Bound:
    """Return B = 2 log A / log p - 1.

    This is exact, a Fraction, if A is a power of p, and an mpmath float
    otherwise.

    Raises:
        ValueError: If A < p.
    """
    return _bound(A, p, 2)


def bound_Bprime(A: Real, p: int) -> Bound:
    """Return B' = 4 log A / log p - 1, exact if A is a power of p.

    Raises:
        ValueError: If A < p.
    """
    return _bound(A, p, 4)


def _exceeds(ratio: Union[Fraction, float], bound: Bound) -> bool:
    if ratio == UNBOUNDED:
        return True
    if isinstance(bound, Fraction):
        return ratio > bound
    assert isinstance(ratio, Fraction)
    with mp.workdps(30):
        return bool(mp.mpf(ratio.numerator) / ratio.denominator > bound)


class CheckItem:
    """A single hypothesis check.

    Attributes:
        name: What is checked.
        passed: True or False, or None if it could not be decided.
        certain: Whether the outcome follows from the closed form, rather than from
                inspecting a finite number of quotients.
        detail: Human-readable explanation.
    """
    def __init__(
            self, name: str, passed: Optional[bool], certain: bool, detail: str
            ) -> None:
        self.name = name
        self.passed = passed
        self.certain = certain
        self.detail = detail

    def __repr__(self) -> str:
        return 'CheckItem({}, passed={}, certain={})'.format(
                self.name, self.passed, self.certain)


class Verdict(Enum):
    CRITERION_SATISFIED = 'criterion-satisfied'
    NOT_SATISFIED = 'not-satisfied'
    INSUFFICIENT_EVIDENCE = 'insufficient-evidence'


class CriterionReport:
    """The outcome of checking a criterion.

    The verdict is CRITERION_SATISFIED only if every check passed, NOT_SATISFIED
    if any check failed, and INSUFFICIENT_EVIDENCE otherwise.

    Attributes:
        theorem: The criterion, '1.1', '4.2' or '4.3'.
        conclusion: What the criterion concludes if satisfied.
        A: The bound on |a_i|_p that was used, if any.
        bound: The threshold the ratio must exceed, if any.
        ratio: The ratio that was found, if any.
        checks: The individual checks.
        depth: The number of quotients inspected.
        justification: Why the conclusion would follow.
    """
    def __init__(
            self, theorem: str, conclusion: str, A: Optional[Real],
            bound: Optional[Bound], ratio: Optional[Union[Fraction, float]],
            checks: List[CheckItem], depth: int) -> None:
        self.theorem = theorem
        self.conclusion = conclusion
        self.A = A
        self.bound = bound
        self.ratio = ratio
        self.checks = checks
        self.depth = depth
        self.justification = ROTH

    @property
    def verdict(self) -> Verdict:
        if any(check.passed is False for check in self.checks):
            return Verdict.NOT_SATISFIED
        if any(check.passed is None for check in self.checks):
            return Verdict.INSUFFICIENT_EVIDENCE
        return Verdict.CRITERION_SATISFIED

    @property
    def certain(self) -> bool:
        """Whether every check follows from the closed form."""
        return all(check.certain for check in self.checks)

    def __repr__(self) -> str:
        return 'CriterionReport({}, {})'.format(self.theorem, self.verdict.value)


def _tail_blocks(blocks: List[Block]) -> List[Block]:
    """Return the second half of the blocks, where limits are estimated."""
    return blocks[len(blocks) // 2:]


class Criterion(ABC):
    """Interface for transcendence criteria.

    Use :func:`check_thm1`, :func:`check_thm2` or :func:`check_thm3`, or
    :func:`rubancf.make_criterion`, to get one.
    """
    #: Identifier of the criterion.
    theorem = ''

    #: What the criterion concludes.
    conclusion = ''

    #: Whether the criterion needs a bound A on |a_i|_p.
    needs_A = True

    @abstractmethod
    def check(
            self, spec: QuasiPeriodicSpec, A: Optional[Real] = None,
            depth: Optional[int] = None, settings: Optional[Settings] = None
            ) -> CriterionReport:
        """Check whether a spec satisfies this criterion.

        Args:
            spec: The quasi-periodic continued fraction.
            A: Upper bound on the p-adic absolute values of the quotients,
                    at least p. Not used by every criterion.
            depth: Number of quotients to inspect, defaults to
                    settings.evidence_depth.
            settings: Settings to use, None to use those from the environment.

        Returns:
            A report with the individual checks and the verdict.
        """
        pass

    def _depth(self, spec: QuasiPeriodicSpec, depth: Optional[int],
               settings: Optional[Settings]) -> int:
        if depth is None:
            depth = resolve(settings).evidence_depth
        if depth < 1:
            raise ValueError('Depth must be at least 1')
        count = spec.generator.count()
        if count is not None and count > 0:
            depth = min(depth, spec.generator.block(count - 1).end)
        return depth

    def _boundedness(
            self, spec: QuasiPeriodicSpec, quotients: List[SpElement], A: Optional[Real]
            ) -> CheckItem:
        """Check |a_i|_p <= A, or report the largest |a_i|_p if A is None."""
        if spec.generator.is_symbolic:
            values = spec.quotient_values()
            largest = max(q.abs_value() for q in values + spec.prefix[:1])
            certain = True
        else:
            largest = max(q.abs_value() for q in quotients)
            certain = False
        if A is None:
            return CheckItem('bounded-quotients', True, certain,
                             'max |a_i|_p = {}'.format(largest))
        return CheckItem('bounded-quotients', largest <= A, certain,
                         'max |a_i|_p = {}, A = {}'.format(largest, A))

    def _aperiodicity(
            self, spec: QuasiPeriodicSpec, quotients: List[SpElement]) -> CheckItem:
        name = 'not-ultimately-periodic'
        if spec.generator.is_symbolic:
            # Each long enough block region contains exactly the values of its
            # contents, which would be those of the period.
            value_sets = {frozenset(block) for block in spec.generator.contents_set()}
            if len(value_sets) > 1:
                return CheckItem(name, True, True,
                                 'blocks with different values recur forever')
            return CheckItem(name, None, False,
                             'all blocks have the same values')
        period = scan_period(quotients)
        if period is None:
            return CheckItem(name, True, False,
                             'no period in the first {} quotients'.format(
                                 len(quotients)))
        return CheckItem(name, None, False, 'a_(n+{}) = a_n for {} <= n < {}'.format(
            period[0], period[1], len(quotients) - period[0]))

    def _bounded_k(self, spec: QuasiPeriodicSpec, blocks: List[Block]) -> CheckItem:
        generator = spec.generator
        if isinstance(generator, GeometricBlocks):
            return CheckItem('bounded-k', True, True,
                             'k_i = {} for all i'.format(generator.k))
        largest = max((block.k for block in blocks), default=0)
        return CheckItem('bounded-k', True, False,
                         'max k_i = {} over {} blocks'.format(largest, len(blocks)))


class _RatioCriterion(Criterion):
    """Shared logic of the lambda_i / n_i criteria."""

    #: Whether the lower limit of the ratio is used, rather than the upper one.
    uses_liminf = True

    def _threshold(self, A: Real, p: int) -> Bound:
        raise NotImplementedError()

    def _extra_checks(
            self, spec: QuasiPeriodicSpec, blocks: List[Block]) -> List[CheckItem]:
        return []

    def check(
            self, spec: QuasiPeriodicSpec, A: Optional[Real] = None,
            depth: Optional[int] = None, settings: Optional[Settings] = None
            ) -> CriterionReport:
        if A is None:
            raise ValueError('Criterion {} needs a bound A'.format(self.theorem))
        bound = self._threshold(A, spec.p)
        depth = self._depth(spec, depth, settings)
        quotients = materialize(spec, depth)
        blocks = spec.blocks_until(depth)

        ratio = None    # type: Optional[Union[Fraction, float]]
        generator = spec.generator
        limit = 'liminf' if self.uses_liminf else 'limsup'
        if isinstance(generator, GeometricBlocks):
            n, lam = generator.n, generator.lam
            if lam.g > n.g:
                ratio = UNBOUNDED
            elif lam.g < n.g:
                ratio = Fraction(0)
            else:
                ratio = lam.c / n.c
            ratio_item = CheckItem(
                    'ratio', _exceeds(ratio, bound), True,
                    '{} lambda_i/n_i = {}, bound {}'.format(limit, ratio, bound))
        elif len(blocks) < 3:
            ratio_item = CheckItem('ratio', None, False,
                                   'only {} blocks'.format(len(blocks)))
        else:
            ratios = [Fraction(b.repeats, b.start) for b in _tail_blocks(blocks)]
            ratio = min(ratios) if self.uses_liminf else max(ratios)
            ratio_item = CheckItem(
                    'ratio', _exceeds(ratio, bound), False,
                    '{} of lambda_i/n_i over blocks {}..{} is {}, bound {}'.format(
                        'min' if self.uses_liminf else 'max',
                        len(blocks) - len(_tail_blocks(blocks)), len(blocks) - 1,
                        ratio, bound))

        checks = [
                self._boundedness(spec, quotients, A),
                self._aperiodicity(spec, quotients),
                ratio_item]
        checks.extend(self._extra_checks(spec, blocks))
        report = CriterionReport(self.theorem, self.conclusion, A, bound, ratio,
                                 checks, depth)
        logger.info('Criterion %s on %s: %s', self.theorem, spec,
                    report.verdict.value)
        return report


class LiminfCriterion(_RatioCriterion):
    """Transcendence if liminf lambda_i / n_i > 2 log A / log p - 1.

    This also needs a block of p - 1/p only for infinitely many i.
    """
    theorem = '1.1'
    conclusion = 'transcendental'
    uses_liminf = True

    def _threshold(self, A: Real, p: int) -> Bound:
        return bound_B(A, p)

    def _extra_checks(
            self, spec: QuasiPeriodicSpec, blocks: List[Block]) -> List[CheckItem]:
        special = p_minus_quotient(spec.p)
        if spec.generator.is_symbolic:
            found = any(all(q == special for q in block)
                        for block in spec.generator.contents_set())
            return [CheckItem('p-minus-blocks', found, True,
                              'contents cycle, so every block recurs')]
        count = sum(1 for block in blocks
                    if all(q == special for q in block.contents))
        return [CheckItem('p-minus-blocks', count > 0 or None, False,
                          '{} of {} blocks are p - 1/p only'.format(
                              count, len(blocks)))]


class LimsupCriterion(_RatioCriterion):
    """Quadratic or transcendental if limsup lambda_i / n_i > 4 log A / log p - 1.

    This also needs k_i to be bounded.
    """
    theorem = '4.2'
    conclusion = 'quadratic irrational or transcendental'
    uses_liminf = False

    def _threshold(self, A: Real, p: int) -> Bound:
        return bound_Bprime(A, p)

    def _extra_checks(
            self, spec: QuasiPeriodicSpec, blocks: List[Block]) -> List[CheckItem]:
        return [self._bounded_k(spec, blocks)]


class BlockGrowthCriterion(Criterion):
    """Quadratic or transcendental if liminf lambda_i / lambda_{i-1} > 4.

    The blocks must be contiguous, n_i = n_{i-1} + lambda_{i-1} k_{i-1}, and both
    |a_i|_p and k_i bounded.
    """
    theorem = '4.3'
    conclusion = 'quadratic irrational or transcendental'
    needs_A = False

    def check(
            self, spec: QuasiPeriodicSpec, A: Optional[Real] = None,
            depth: Optional[int] = None, settings: Optional[Settings] = None
            ) -> CriterionReport:
        depth = self._depth(spec, depth, settings)
        quotients = materialize(spec, depth)
        blocks = spec.blocks_until(depth)
        generator = spec.generator
        bound = Fraction(4)

        ratio = None    # type: Optional[Union[Fraction, float]]
        if isinstance(generator, GeometricBlocks):
            n, lam = generator.n, generator.lam
            # c g**i = c g**(i-1) + c' g**(i-1) k for all i >= 1
            contiguous = n.g == lam.g and n.c * n.g == n.c + lam.c * generator.k
            contiguity = CheckItem('contiguous', contiguous, True,
                                   'n_i = {}, lambda_i = {}, k = {}'.format(
                                       n, lam, generator.k))
            ratio = Fraction(lam.g)
            ratio_item = CheckItem('ratio', ratio > bound, True,
                                   'lambda_i/lambda_(i-1) = {}'.format(ratio))
        else:
            gaps = [(a.index, b.index) for a, b in zip(blocks, blocks[1:])
                    if b.start != a.end]
            contiguity = CheckItem('contiguous', not gaps, False,
                                   'gaps after blocks {}'.format(gaps) if gaps
                                   else '{} blocks'.format(len(blocks)))
            if len(blocks) < 3:
                ratio_item = CheckItem('ratio', None, False,
                                       'only {} blocks'.format(len(blocks)))
            else:
                ratio = min(Fraction(b.repeats, a.repeats)
                            for a, b in zip(blocks, blocks[1:])
                            if a.index >= len(blocks) // 2 - 1)
                ratio_item = CheckItem('ratio', ratio > bound, False,
                                       'min lambda_i/lambda_(i-1) = {}'.format(ratio))

        checks = [
                self._boundedness(spec, quotients, A),
                self._bounded_k(spec, blocks),
                self._aperiodicity(spec, quotients),
                contiguity,
                ratio_item]
        report = CriterionReport(self.theorem, self.conclusion, A, bound, ratio,
                                 checks, depth)
        logger.info('Criterion %s on %s: %s', self.theorem, spec,
                    report.verdict.value)
        return report


def check_thm1(
        spec: QuasiPeriodicSpec, A: Real, depth: Optional[int] = None,
        settings: Optional[Settings] = None) -> CriterionReport:
    """Check the liminf criterion for transcendence, see :class:`LiminfCriterion`."""
    return LiminfCriterion().check(spec, A, depth, settings)


def check_thm2(
        spec: QuasiPeriodicSpec, A: Real, depth: Optional[int] = None,
        settings: Optional[Settings] = None) -> CriterionReport:
    """Check the limsup criterion, see :class:`LimsupCriterion`."""
    return LimsupCriterion().check(spec, A, depth, settings)


def check_thm3(
        spec: QuasiPeriodicSpec, depth: Optional[int] = None,
        settings: Optional[Settings] = None) -> CriterionReport:
    """Check the block growth criterion, see :class:`BlockGrowthCriterion`."""
    return BlockGrowthCriterion().check(spec, None, depth, settings)


class TelescopeEntry:
    """Outcome of the telescoping check for one block.

    Attributes:
        index: The block index i.
        start: n_i.
        end: n_{i+1}.
        holds: Whether q_{n_{i+1}-1} equals the product of the ratios
                q_m / q_{m-1} for n_i <= m < n_{i+1}, times q_{n_i-1}.
        mirrored: The number of ratios checked against the mirror formula.
        mirror_holds: Whether those all matched.
    """
    def __init__(
            self, index: int, start: int, end: int, holds: bool, mirrored: int,
            mirror_holds: bool) -> None:
        self.index = index
        self.start = start
        self.end = end
        self.holds = holds
        self.mirrored = mirrored
        self.mirror_holds = mirror_holds


class TelescopeReport:
    """Telescoping checks for the blocks of a spec within some depth."""
    def __init__(self, entries: List[TelescopeEntry]) -> None:
        self.entries = entries

    @property
    def holds(self) -> bool:
        return all(entry.holds and entry.mirror_holds for entry in self.entries)


def telescope_check(
        spec: QuasiPeriodicSpec, depth: Optional[int] = None,
        mirror_limit: int = 128, settings: Optional[Settings] = None
        ) -> TelescopeReport:
    """Check that the convergent denominators telescope over each block.

    For every block i with n_{i+1} <= depth, this checks that
    q_{n_{i+1}-1} = prod_{n_i <= m < n_{i+1}} (q_m / q_{m-1}) * q_{n_i-1}, and that
    each factor q_m / q_{m-1} equals [a_m, ..., a_1] for m <= mirror_limit and
    for the first and last factor of the block.

    Args:
        spec: The spec.
        depth: Number of quotients to consider, defaults to settings.evidence_depth.
        mirror_limit: Largest m to check every mirror factor for.
        settings: Settings to use, None to use those from the environment.

    Returns:
        One entry per block that ends within depth.
    """
    if depth is None:
        depth = resolve(settings).evidence_depth
    blocks = spec.blocks_until(depth)
    starts = [block.start for block in blocks]
    count = spec.generator.count()
    if count is None or len(blocks) < count:
        starts.append(spec.generator.block(len(blocks)).start)
    ranges = [(i, a, b) for i, (a, b) in enumerate(zip(starts, starts[1:]))
              if b <= depth]
    if not ranges:
        return TelescopeReport([])

    quotients = materialize(spec, ranges[-1][2])
    conv = Convergents(quotients)
    entries = []
    for i, start, end in ranges:
        product = Fraction(1)
        mirrored = 0
        mirror_holds = True
        for m in range(start, end):
            factor = conv.q(m) / conv.q(m - 1)
            product *= factor
            if m <= mirror_limit or m in (start, end - 1):
                mirrored += 1
                mirror_holds = (mirror_holds and
                                eval_finite(mirror_ratio(quotients, m)) == factor)
        holds = conv.q(end - 1) == product * conv.q(start - 1)
        logger.debug('Block %s from %s to %s telescopes: %s, |q|_p = %s', i, start,
                     end, holds, padic_abs(conv.q(end - 1), spec.p))
        entries.append(TelescopeEntry(i, start, end, holds, mirrored, mirror_holds))
    return TelescopeReport(entries)
