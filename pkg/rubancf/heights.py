"""Values and heights of ultimately periodic continued fractions.

The value eta = [a_0, ..., a_{h-1}, overline(a_h, ..., a_{h+k-1})] satisfies
A eta**2 + B eta + C = 0, with A, B and C given by the convergents at indices
h - 2, h - 1, h + k - 2 and h + k - 1. So eta is rational or a quadratic
irrational. Which root of the quadratic it is, is decided by p-adic proximity to
a convergent.
"""
from abc import ABC, abstractmethod
from fractions import Fraction
import logging
from math import isqrt
from random import Random
from typing import List, Optional, Sequence, Tuple

from mpmath import mp
from sympy import igcd, ilcm

from rubancf.convergents import Convergents, Quotient, eval_with_tail
from rubancf.errors import (
        Degenerate, HypothesisViolated, InvalidQuotient, ZeroDenominator)
from rubancf.expansion import p_minus_quotient
from rubancf.padic import (
        Branch, SpElement, is_perfect_square, padic_abs, padic_sqrt, vp)
from rubancf.prime import Prime
from rubancf.settings import Settings, resolve


logger = logging.getLogger(__name__)


class PeriodicSpec:
    """An ultimately periodic continued fraction.

    This describes [a_0, ..., a_{h-1}, overline(a_h, ..., a_{h+k-1})].

    Attributes:
        p: The prime.
        h: The length of the preperiod, at least 1.
        k: The length of the period, at least 1.
        quotients: The partial quotients a_0, ..., a_{h+k-1}.
    """
    def __init__(
            self, p: int, h: int, k: int, quotients: Sequence[Quotient]) -> None:
        """Create a PeriodicSpec.

        Args:
            p: The prime.
            h: The length of the preperiod, at least 1.
            k: The length of the period, at least 1.
            quotients: The partial quotients, as SpElements or rationals.

        Raises:
            NotPrimeError: If p is not a prime.
            InvalidQuotient: If a quotient is not valid at its position.
            ValueError: If h, k or the number of quotients are wrong.
        """
        self.p = Prime(p)
        if h < 1 or k < 1:
            raise ValueError('Need h >= 1 and k >= 1, got {} and {}'.format(h, k))
        if len(quotients) != h + k:
            raise ValueError('Expected {} quotients, got {}'.format(
                h + k, len(quotients)))

        elements = []   # type: List[SpElement]
        for i, quotient in enumerate(quotients):
            if isinstance(quotient, SpElement):
                element = quotient
            else:
                element = SpElement.from_value(Fraction(quotient), self.p)
            if i > 0 and not element.is_partial_quotient:
                raise InvalidQuotient(
                        'a_{} = {} is not a valid partial quotient'.format(
                            i, element))
            elements.append(element)

        self.h = h
        self.k = k
        self.quotients = elements

    @property
    def preperiod(self) -> List[SpElement]:
        """The partial quotients a_0, ..., a_{h-1}."""
        return self.quotients[:self.h]

    @property
    def period(self) -> List[SpElement]:
        """The partial quotients a_h, ..., a_{h+k-1}."""
        return self.quotients[self.h:]

    def prefix(self, length: int) -> List[SpElement]:
        """Return the first `length` partial quotients, unrolling the period."""
        return [self.quotient(i) for i in range(length)]

    def quotient(self, index: int) -> SpElement:
        """Return partial quotient a_index."""
        if index < self.h:
            return self.quotients[index]
        return self.quotients[self.h + (index - self.h) % self.k]

    def __repr__(self) -> str:
        return 'PeriodicSpec(p={}, [{}; overline({})])'.format(
                self.p, ', '.join(map(str, self.preperiod)),
                ', '.join(map(str, self.period)))


class QuadraticCoeffs:
    """Coefficients of A eta**2 + B eta + C = 0, exact rationals."""
    def __init__(self, A: Fraction, B: Fraction, C: Fraction) -> None:
        self.A = A
        self.B = B
        self.C = C

    def evaluate(self, x: Fraction) -> Fraction:
        """Return A x**2 + B x + C."""
        return (self.A * x + self.B) * x + self.C

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuadraticCoeffs):
            return NotImplemented
        return (self.A, self.B, self.C) == (other.A, other.B, other.C)

    def __repr__(self) -> str:
        return 'QuadraticCoeffs({}, {}, {})'.format(self.A, self.B, self.C)


def quadratic_coeffs(spec: PeriodicSpec) -> QuadraticCoeffs:
    """Return the quadratic equation satisfied by the value of a spec.

    With h the preperiod and k the period length, this is

        A = q_{h-2} q_{h+k-1} - q_{h-1} q_{h+k-2}
        B = q_{h-1} r_{h+k-2} + r_{h-1} q_{h+k-2} - r_{h-2} q_{h+k-1}
            - q_{h-2} r_{h+k-1}
        C = r_{h-2} r_{h+k-1} - r_{h-1} r_{h+k-2}
    """
    conv = Convergents(spec.quotients)
    h, k = spec.h, spec.k
    q, r = conv.q, conv.r
    A = q(h - 2) * q(h + k - 1) - q(h - 1) * q(h + k - 2)
    B = (q(h - 1) * r(h + k - 2) + r(h - 1) * q(h + k - 2)
         - r(h - 2) * q(h + k - 1) - q(h - 2) * r(h + k - 1))
    C = r(h - 2) * r(h + k - 1) - r(h - 1) * r(h + k - 2)
    return QuadraticCoeffs(A, B, C)


class AlgebraicValue(ABC):
    """A rational number or a quadratic irrational in Q_p."""
    @property
    @abstractmethod
    def degree(self) -> int:
        """The degree of the minimal polynomial."""
        pass

    @property
    @abstractmethod
    def minimal_polynomial(self) -> Tuple[int, ...]:
        """The primitive minimal polynomial, leading coefficient first.

        The leading coefficient is positive and the coefficients are coprime.
        """
        pass

    @abstractmethod
    def approximation(self, precision: int) -> Fraction:
        """Return a rational number congruent to this value mod p**precision."""
        pass


class RationalValue(AlgebraicValue):
    """A rational value.

    Attributes:
        value: The number.
    """
    def __init__(self, value: Fraction) -> None:
        self.value = Fraction(value)

    @property
    def degree(self) -> int:
        return 1

    @property
    def minimal_polynomial(self) -> Tuple[int, ...]:
        return (self.value.denominator, -self.value.numerator)

    def approximation(self, precision: int) -> Fraction:
        return self.value

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalValue):
            return NotImplemented
        return self.value == other.value

    def __repr__(self) -> str:
        return 'RationalValue({})'.format(self.value)


class QuadraticValue(AlgebraicValue):
    """A quadratic irrational (-b + sqrt(b**2 - 4ac)) / 2a in Q_p.

    Attributes:
        a: Leading coefficient, positive.
        b: Middle coefficient.
        c: Constant coefficient.
        p: The prime.
        branch: The branch of the square root of the discriminant.
    """
    def __init__(self, a: int, b: int, c: int, p: int, branch: Branch) -> None:
        """Create a QuadraticValue.

        Raises:
            ValueError: If the polynomial is not primitive with a > 0, or its
                    discriminant is a square.
        """
        if a <= 0 or igcd(igcd(a, b), c) != 1:
            raise ValueError('Polynomial {}, {}, {} is not canonical'.format(a, b, c))
        if is_perfect_square(b * b - 4 * a * c):
            raise ValueError('Polynomial {}, {}, {} is reducible'.format(a, b, c))
        self.a = a
        self.b = b
        self.c = c
        self.p = p
        self.branch = branch

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    @property
    def degree(self) -> int:
        return 2

    @property
    def minimal_polynomial(self) -> Tuple[int, ...]:
        return (self.a, self.b, self.c)

    def approximation(self, precision: int) -> Fraction:
        """Return x with vp(x - value) >= precision."""
        denominator = 2 * self.a
        digits = max(precision + int(vp(denominator, self.p)), 3)
        root = padic_sqrt(self.discriminant, self.p, digits, self.branch)
        return Fraction(root.residue - self.b, denominator)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuadraticValue):
            return NotImplemented
        return ((self.a, self.b, self.c, self.p, self.branch) ==
                (other.a, other.b, other.c, other.p, other.branch))

    def __repr__(self) -> str:
        return 'QuadraticValue({}X^2 + {}X + {}, p={}, branch={})'.format(
                self.a, self.b, self.c, self.p, self.branch.value)


def _primitive(coeffs: QuadraticCoeffs) -> Tuple[int, int, int]:
    """Scale A, B, C to coprime integers with a positive leading term."""
    values = (coeffs.A, coeffs.B, coeffs.C)
    scale = 1
    for value in values:
        scale = ilcm(scale, value.denominator)
    integers = [int(value * scale) for value in values]
    content = igcd(igcd(integers[0], integers[1]), integers[2])
    if content == 0:
        raise Degenerate('All coefficients vanish')
    integers = [value // content for value in integers]
    leading = next(value for value in integers if value != 0)
    if leading < 0:
        integers = [-value for value in integers]
    return integers[0], integers[1], integers[2]


def _target(spec: PeriodicSpec, n: int) -> Tuple[Fraction, int]:
    """Return convergent n and the valuation of its distance to the value."""
    quotients = spec.prefix(n + 2)
    conv = Convergents(quotients)
    order = -(int(quotients[n + 1].valuation) + 2 * int(vp(conv.q(n), spec.p)))
    return conv.pair(n).value(), order


def periodic_value(
        spec: PeriodicSpec, settings: Optional[Settings] = None) -> AlgebraicValue:
    """Determine the value of an ultimately periodic continued fraction.

    If the period consists of p - 1/p only, the value is the rational number
    [a_0, ..., a_{h-1}, -1/p]. Otherwise the quadratic from
    :func:`quadratic_coeffs` is made primitive, and its root is chosen that is
    p-adically closest to convergent h + 3k, moving further out by k while
    both roots are equally close.

    Args:
        spec: The continued fraction.
        settings: Settings to use, None to use those from the environment.

    Returns:
        A RationalValue or a QuadraticValue.

    Raises:
        Degenerate: If the value has a zero denominator, or the root cannot be
                told apart.
    """
    settings = resolve(settings)
    p = spec.p

    if all(a == p_minus_quotient(p) for a in spec.period):
        try:
            return RationalValue(eval_with_tail(spec.preperiod, Fraction(-1, p)))
        except ZeroDenominator as e:
            raise Degenerate('Value of {} is undefined'.format(spec)) from e

    a, b, c = _primitive(quadratic_coeffs(spec))
    if a == 0:
        if b == 0:
            raise Degenerate('Equation for {} vanishes'.format(spec))
        return RationalValue(Fraction(-c, b))

    disc = b * b - 4 * a * c
    guard = settings.precision_guard
    n = spec.h + 3 * spec.k
    for _ in range(64):
        convergent, order = _target(spec, n)
        if is_perfect_square(disc):
            root = isqrt(disc)
            candidates = [
                    RationalValue(Fraction(-b + root, 2 * a)),
                    RationalValue(Fraction(-b - root, 2 * a))
                    ]   # type: List[AlgebraicValue]
        else:
            candidates = [QuadraticValue(a, b, c, p, branch)
                          for branch in (Branch.A, Branch.B)]

        close = [candidate for candidate in candidates
                 if vp(candidate.approximation(order + guard) - convergent, p)
                 >= order]
        if len(close) == 1:
            logger.debug('Value of %s is %s', spec, close[0])
            return close[0]
        if not close:
            raise AssertionError('No root of {}, {}, {} is close to {}'.format(
                a, b, c, convergent))
        n += spec.k

    raise Degenerate('Could not separate the roots for {}'.format(spec))


def primitive_height(value: AlgebraicValue) -> int:
    """Return the largest absolute coefficient of the minimal polynomial."""
    return max(abs(coefficient) for coefficient in value.minimal_polynomial)


class AbsoluteHeight:
    """A certified enclosure of an absolute height.

    Attributes:
        lower: A lower bound.
        upper: An upper bound, equal to lower if the height is known exactly.
    """
    def __init__(self, lower: Fraction, upper: Optional[Fraction] = None) -> None:
        self.lower = Fraction(lower)
        self.upper = self.lower if upper is None else Fraction(upper)

    @property
    def is_exact(self) -> bool:
        return self.lower == self.upper

    def approximate(self, dps: int = 20) -> mp.mpf:
        """Return the midpoint as an mpmath float with dps digits."""
        midpoint = (self.lower + self.upper) / 2
        with mp.workdps(dps):
            return mp.mpf(midpoint.numerator) / midpoint.denominator

    def __repr__(self) -> str:
        if self.is_exact:
            return 'AbsoluteHeight({})'.format(self.lower)
        return 'AbsoluteHeight([{}, {}])'.format(
                self.approximate(12), self.upper - self.lower)


def _sqrt_enclosure(n: int, rtol: Fraction) -> Tuple[Fraction, Fraction]:
    bits = 32
    while True:
        root = isqrt(n << (2 * bits))
        lower = Fraction(root, 1 << bits)
        upper = Fraction(root + 1, 1 << bits)
        if upper - lower <= rtol * lower:
            return lower, upper
        bits *= 2


def absolute_height(
        value: AlgebraicValue, settings: Optional[Settings] = None
        ) -> AbsoluteHeight:
    """Compute the absolute height of a rational or quadratic value.

    For degree at most two, the product over all places of max(1, |beta|_v),
    with the complex place counted with the square of the usual absolute value,
    is the Mahler measure a * prod max(1, |root|) of the minimal polynomial.
    This is exact unless exactly one of two real roots lies outside the unit
    disc, in which case it is (|b| + sqrt(D)) / 2 and is enclosed to a relative
    width of settings.height_rtol.
    """
    if isinstance(value, RationalValue):
        return AbsoluteHeight(Fraction(primitive_height(value)))

    assert isinstance(value, QuadraticValue)
    settings = resolve(settings)
    a, b, c, disc = value.a, abs(value.b), abs(value.c), value.discriminant
    if disc < 0:
        return AbsoluteHeight(Fraction(max(a, c)))

    # largest root modulus is (|b| + sqrt(D)) / 2a, smallest is 2|c| / (|b| + sqrt(D))
    if 2 * a - b >= 0 and disc <= (2 * a - b)**2:
        return AbsoluteHeight(Fraction(a))
    if 2 * c - b > 0 and disc < (2 * c - b)**2:
        return AbsoluteHeight(Fraction(c))

    lower, upper = _sqrt_enclosure(disc, Fraction(settings.height_rtol))
    return AbsoluteHeight((b + lower) / 2, (b + upper) / 2)


class HeightReport:
    """Heights of the value of a spec, and the bounds they satisfy.

    Attributes:
        spec: The spec.
        value: Its value.
        primitive: The primitive height H.
        absolute: The absolute height.
        lemma_bound: The upper bound on H from the partial quotients: p for a
                rational value with h = 1 (which H equals), |q_{h-1}|_p**2 for
                other rational values, 2 |q_{h+k-1}|_p**4 for quadratic ones.
        lemma_holds: Whether H is within lemma_bound (equal to it if h = 1 and
                the value is rational).
        upper_holds: Whether all of the absolute height interval is at most
                sqrt(degree + 1) * H.
        lower_holds: Whether H <= 2**degree times all of the interval.
        integrality_holds: Whether |q_{h+k-1}|_p**2 times A, B and C are integers,
                as well as q_n |q_n|_p and r_n |r_n|_p for n < h + k.
    """
    def __init__(
            self, spec: PeriodicSpec, value: AlgebraicValue, primitive: int,
            absolute: AbsoluteHeight, lemma_bound: Fraction, lemma_holds: bool,
            upper_holds: bool, lower_holds: bool, integrality_holds: bool
            ) -> None:
        self.spec = spec
        self.value = value
        self.primitive = primitive
        self.absolute = absolute
        self.lemma_bound = lemma_bound
        self.lemma_holds = lemma_holds
        self.upper_holds = upper_holds
        self.lower_holds = lower_holds
        self.integrality_holds = integrality_holds

    @property
    def all_hold(self) -> bool:
        """Whether every bound and integrality check holds."""
        return (self.lemma_holds and self.upper_holds and self.lower_holds and
                self.integrality_holds)


def _is_integer(x: Fraction) -> bool:
    return x.denominator == 1


def bound_report(
        spec: PeriodicSpec, settings: Optional[Settings] = None) -> HeightReport:
    """Compute the heights of the value of a spec and check their bounds.

    Args:
        spec: A spec with a_0 = 0.
        settings: Settings to use, None to use those from the environment.

    Returns:
        The report.

    Raises:
        HypothesisViolated: If a_0 is not zero.
        Degenerate: See :func:`periodic_value`.
    """
    if spec.quotients[0].value != 0:
        raise HypothesisViolated(
                'Height bounds need a_0 = 0, got {}'.format(spec.quotients[0]))
    settings = resolve(settings)
    p = spec.p
    h, k = spec.h, spec.k

    value = periodic_value(spec, settings)
    primitive = primitive_height(value)
    absolute = absolute_height(value, settings)
    conv = Convergents(spec.quotients)

    if isinstance(value, RationalValue):
        if h == 1:
            lemma_bound = Fraction(p)
            lemma_holds = primitive == p
        else:
            lemma_bound = padic_abs(conv.q(h - 1), p)**2
            lemma_holds = primitive <= lemma_bound
    else:
        lemma_bound = 2 * padic_abs(conv.q(h + k - 1), p)**4
        lemma_holds = primitive <= lemma_bound

    degree = value.degree
    # every point of the enclosure must satisfy the bounds
    upper_holds = absolute.upper**2 <= (degree + 1) * primitive**2
    lower_holds = primitive <= 2**degree * absolute.lower

    coeffs = quadratic_coeffs(spec)
    scale = padic_abs(conv.q(h + k - 1), p)**2
    integrality_holds = all(
            _is_integer(scale * x) for x in (coeffs.A, coeffs.B, coeffs.C))
    for pair in conv:
        integrality_holds = integrality_holds and all(
                _is_integer(x * padic_abs(x, p)) for x in (pair.r, pair.q))

    if not (lemma_holds and upper_holds and lower_holds and integrality_holds):
        logger.info('Bounds fail for %s', spec)
    return HeightReport(spec, value, primitive, absolute, lemma_bound, lemma_holds,
                        upper_holds, lower_holds, integrality_holds)


def random_quotient(p: int, rng: Random, max_order: int = 2) -> SpElement:
    """Return a random partial quotient a with |a|_p <= p**max_order."""
    low = -rng.randint(1, max_order)
    digits = [rng.randrange(1, p)] + [rng.randrange(p) for _ in range(-low)]
    return SpElement(p, digits, low)


def random_periodic_spec(p: int, rng: Random) -> PeriodicSpec:
    """Generate a random spec with a_0 = 0, h <= 4, k <= 3, |a_i|_p <= p**2.

    One in four specs have a period of p - 1/p only, and so a rational value.
    """
    h = rng.randint(1, 4)
    k = rng.randint(1, 3)
    quotients = [SpElement.zero(p)]
    quotients.extend(random_quotient(p, rng) for _ in range(h - 1))
    if rng.randrange(4) == 0:
        quotients.extend([p_minus_quotient(p)] * k)
    else:
        quotients.extend(random_quotient(p, rng) for _ in range(k))
    return PeriodicSpec(p, h, k, quotients)
