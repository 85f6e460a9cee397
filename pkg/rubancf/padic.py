"""Exact p-adic arithmetic on rational numbers and integer square roots.

Everything in here works on :class:`fractions.Fraction` values, which are always
in lowest terms, so there is no floating point anywhere. A p-adic number is only
ever represented through one of two closed forms: a rational number, or a
Hensel-lifted square root of an integer at some finite precision.
"""
from enum import Enum
from fractions import Fraction
import logging
from math import isqrt
from typing import Any, Optional, Sequence, Tuple, Union

from sympy.ntheory import is_quad_residue, multiplicity, sqrt_mod

from rubancf.errors import InvalidQuotient, NotASquare, PerfectSquare
from rubancf.prime import Prime


logger = logging.getLogger(__name__)


Rational = Union[int, Fraction]


class Valuation:
    """The p-adic valuation of a rational number.

    This is the exponent of p in the number, or infinity for zero. Valuations
    compare with each other and with plain ints, with infinity larger than any
    int, so that you can write ``vp(x, p) >= 1`` without worrying about zero.

    Use :func:`int` to get the exponent of a nonzero number.
    """
    def __init__(self, order: Optional[int]) -> None:
        """Create a Valuation.

        Args:
            order: The exponent, or None for the valuation of zero.
        """
        self.__order = order

    @property
    def is_infinite(self) -> bool:
        """Whether this is the valuation of zero."""
        return self.__order is None

    def __int__(self) -> int:
        if self.__order is None:
            raise ValueError('The valuation of zero is infinite')
        return self.__order

    __index__ = __int__

    def abs_value(self, p: int) -> Fraction:
        """Return p**(-v), the p-adic absolute value this valuation belongs to."""
        if self.__order is None:
            return Fraction(0)
        return Fraction(p) ** -self.__order

    def __key(self, other: Any) -> Optional[Tuple[int, int]]:
        if isinstance(other, Valuation):
            if other.__order is None:
                return (1, 0)
            return (0, other.__order)
        if isinstance(other, int):
            return (0, other)
        return None

    def __eq__(self, other: object) -> bool:
        """Return True iff the valuations are equal."""
        key = self.__key(other)
        if key is None:
            return NotImplemented
        return self.__key(self) == key

    def __lt__(self, other: object) -> bool:
        key = self.__key(other)
        if key is None:
            return NotImplemented
        own = self.__key(self)
        assert own is not None
        return own < key

    def __le__(self, other: object) -> bool:
        return self < other or self == other

    def __gt__(self, other: object) -> bool:
        key = self.__key(other)
        if key is None:
            return NotImplemented
        own = self.__key(self)
        assert own is not None
        return own > key

    def __ge__(self, other: object) -> bool:
        return self > other or self == other

    def __hash__(self) -> int:
        return hash(self.__order)

    def __str__(self) -> str:
        if self.__order is None:
            return 'inf'
        return str(self.__order)

    def __repr__(self) -> str:
        return 'Valuation({})'.format(self.__order)


def vp(x: Rational, p: int) -> Valuation:
    """Return the p-adic valuation of x.

    Args:
        x: The number to take the valuation of.
        p: The prime.

    Returns:
        The exponent of p in x, infinite if x is zero.
    """
    x = Fraction(x)
    if x == 0:
        return Valuation(None)
    return Valuation(
            int(multiplicity(p, abs(x.numerator)))
            - int(multiplicity(p, x.denominator)))


def padic_abs(x: Rational, p: int) -> Fraction:
    """Return the p-adic absolute value of x, exactly.

    This is normalised so that |p|_p = 1/p, and it is zero for zero.
    """
    return vp(x, p).abs_value(p)


def hensel_digits(x: Rational, p: int, lo: int, hi: int) -> Tuple[int, ...]:
    """Return some digits of the Hensel expansion of x.

    The Hensel expansion is the unique series x = sum c_n p**n with digits c_n in
    {0, ..., p - 1}. Digits below the valuation of x are zero.

    The part of the denominator that is coprime to p is inverted modulo a power of
    p large enough for the requested window, so this is exact.

    Args:
        x: The number to expand.
        p: The prime.
        lo: Position of the first digit to return.
        hi: Position of the last digit to return.

    Returns:
        The digits (c_lo, ..., c_hi).
    """
    x = Fraction(x)
    if hi < lo:
        return ()
    width = hi - lo + 1
    if x == 0:
        return (0,) * width

    # shift so that the window starts at position 0
    num, den = x.numerator, x.denominator
    if lo >= 0:
        den *= p**lo
    else:
        num *= p**(-lo)

    e = int(multiplicity(p, den))
    unit_den = den // p**e
    modulus = p**(e + width)
    window = num * pow(unit_den, -1, modulus) % modulus // p**e

    digits = []
    for _ in range(width):
        window, digit = divmod(window, p)
        digits.append(digit)
    return tuple(digits)


class SpElement:
    """An element of S_p, the image of the p-adic floor function.

    These are the rational numbers sum_{n=m}^{0} c_n p**n with m <= 0 and digits
    c_n in {0, ..., p - 1}, so 0 <= value < p and the denominator is a power of p.
    Elements with m <= -1 and c_m != 0 form S'_p, the partial quotients at index
    one and up.

    SpElements compare equal if they have the same prime and value, and sort by
    value.

    Attributes:
        p: The prime.
        digits: The digits (c_m, ..., c_0), with c_m != 0 unless the value is 0.
        low: The index m of the lowest digit.
    """
    def __init__(self, p: int, digits: Sequence[int], low: int) -> None:
        """Create an SpElement from its digits.

        Leading zero digits are stripped, so the same value always has the same
        representation.

        Args:
            p: The prime.
            digits: Digits (c_low, ..., c_0).
            low: The position of the first digit, at most zero.

        Raises:
            InvalidQuotient: If the digits do not describe an element of S_p.
        """
        if low > 0 or len(digits) != 1 - low:
            raise InvalidQuotient(
                    'Expected {} digits for positions {}..0, got {}'.format(
                        1 - low, low, len(digits)))
        if any(not 0 <= c < p for c in digits):
            raise InvalidQuotient('Digits {} out of range for p = {}'.format(
                digits, p))

        digit_list = list(digits)
        while len(digit_list) > 1 and digit_list[0] == 0:
            digit_list.pop(0)
            low += 1

        self.p = p
        self.digits = tuple(digit_list)
        self.low = low
        self.__value = sum(
                (Fraction(c) * Fraction(p) ** (low + i)
                 for i, c in enumerate(self.digits)),
                Fraction(0))

    @staticmethod
    def from_value(value: Rational, p: int) -> 'SpElement':
        """Create an SpElement from its value.

        Args:
            value: A rational number in S_p.
            p: The prime.

        Returns:
            The corresponding SpElement.

        Raises:
            InvalidQuotient: If value is not in S_p.
        """
        value = Fraction(value)
        if not 0 <= value < p:
            raise InvalidQuotient(
                    '{} is not in S_{}, it is not in [0, {})'.format(value, p, p))
        if value.denominator != p ** int(multiplicity(p, value.denominator)):
            raise InvalidQuotient(
                    '{} is not in S_{}, its denominator is not a power of {}'.format(
                        value, p, p))
        low = min(-int(multiplicity(p, value.denominator)), 0)
        element = SpElement(p, hensel_digits(value, p, low, 0), low)
        if element.value != value:
            raise InvalidQuotient('{} is not in S_{}'.format(value, p))
        return element

    @staticmethod
    def zero(p: int) -> 'SpElement':
        """Return the zero element of S_p."""
        return SpElement(p, (0,), 0)

    @property
    def value(self) -> Fraction:
        """The value of this element as an exact rational."""
        return self.__value

    @property
    def valuation(self) -> Valuation:
        """The p-adic valuation of the value."""
        return vp(self.__value, self.p)

    @property
    def is_partial_quotient(self) -> bool:
        """Whether this element is in S'_p, i.e. nonzero with valuation <= -1."""
        return self.__value != 0 and self.low <= -1

    def abs_value(self) -> Fraction:
        """Return |value|_p."""
        return padic_abs(self.__value, self.p)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SpElement):
            return NotImplemented
        return self.p == other.p and self.__value == other.__value

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, SpElement):
            return NotImplemented
        return self.__value < other.__value

    def __hash__(self) -> int:
        return hash((self.p, self.__value))

    def __str__(self) -> str:
        return str(self.__value)

    def __repr__(self) -> str:
        return 'SpElement({}, p={})'.format(self.__value, self.p)


def pfloor(x: Rational, p: int) -> SpElement:
    """The p-adic floor function.

    This returns the part of the Hensel expansion of x with exponents at most zero,
    or zero if x has positive valuation. The remainder x - pfloor(x) is either zero
    or has valuation at least one.

    Args:
        x: The number to take the floor of.
        p: The prime.

    Returns:
        The floor of x, an element of S_p.
    """
    x = Fraction(x)
    v = vp(x, p)
    if v >= 1:
        return SpElement.zero(p)
    low = int(v)
    return SpElement(p, hensel_digits(x, p, low, 0), low)


def is_padic_square(D: int, p: int) -> bool:
    """Return whether the integer D has a square root in Q_p.

    This is the case if the valuation of D is even, and its unit part is a
    quadratic residue modulo p for odd p, or 1 modulo 8 for p = 2.

    Args:
        D: A nonzero integer.
        p: The prime.

    Returns:
        True iff D is a square in Q_p.
    """
    if D == 0:
        raise ValueError('Expected a nonzero radicand')
    e = int(multiplicity(p, abs(D)))
    if e % 2 != 0:
        return False
    unit = D // p**e
    if p == 2:
        return unit % 8 == 1
    return bool(is_quad_residue(unit % p, p))


def is_perfect_square(D: int) -> bool:
    """Return whether D is the square of an integer."""
    return D >= 0 and isqrt(D)**2 == D


class Branch(Enum):
    """Selects one of the two square roots of a p-adic square.

    Branch A is the root whose leading digit is the smaller one (for p = 2, whose
    unit part is 1 modulo 4), branch B is its negative.
    """
    A = 'a'
    B = 'b'

    def other(self) -> 'Branch':
        """Return the other branch."""
        return Branch.B if self is Branch.A else Branch.A


def _unit_sqrt(unit: int, p: int, digits: int) -> int:
    """Lift the branch A square root of a p-adic unit.

    Args:
        unit: A unit that is a square in Z_p.
        p: The prime.
        digits: Number of digits to compute; at least 3 for p = 2.

    Returns:
        The branch A root modulo p**digits.
    """
    if p == 2:
        # unit = 1 mod 8, keep root = 1 mod 4 and fix one bit per step
        root = 1
        for k in range(3, digits + 1):
            if (root * root - unit) % 2**(k + 1) != 0:
                root += 2**(k - 1)
        return root % 2**digits

    first = sqrt_mod(unit % p, p)
    root = min(first, p - first)
    precision = 1
    while precision < digits:
        precision = min(2 * precision, digits)
        modulus = p**precision
        root = (root - (root * root - unit) * pow(2 * root, -1, modulus)) % modulus
    return root % p**digits


class HenselRoot:
    """A square root of an integer in Q_p, known modulo p**precision.

    Do not create these directly, use :func:`padic_sqrt`.

    Attributes:
        D: The radicand, a non-square integer.
        p: The prime.
        precision: The number of known digits K.
        branch: Which of the two roots this is.
        residue: An integer in [0, p**K) congruent to the root modulo p**K.
    """
    def __init__(
            self, D: int, p: int, precision: int, branch: Branch, residue: int
            ) -> None:
        """Create a HenselRoot. Use :func:`padic_sqrt` instead."""
        self.D = D
        self.p = p
        self.precision = precision
        self.branch = branch
        self.residue = residue

    @property
    def modulus(self) -> int:
        """Return p**precision."""
        return self.p ** self.precision

    def refine(self, precision: int) -> 'HenselRoot':
        """Return the same root at a different precision."""
        return padic_sqrt(self.D, self.p, precision, self.branch)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HenselRoot):
            return NotImplemented
        return ((self.D, self.p, self.precision, self.branch, self.residue) ==
                (other.D, other.p, other.precision, other.branch, other.residue))

    def __hash__(self) -> int:
        return hash((self.D, self.p, self.precision, self.branch))

    def __repr__(self) -> str:
        return 'HenselRoot(D={}, p={}, K={}, branch={}, residue={})'.format(
                self.D, self.p, self.precision, self.branch.value, self.residue)


def padic_sqrt(D: int, p: int, precision: int, branch: Branch) -> HenselRoot:
    """Compute a square root of D in Q_p modulo p**precision.

    The root is obtained by Hensel (Newton) lifting, so asking for more digits
    later refines the same root.

    Args:
        D: The radicand, a nonzero integer that is not a square in Z.
        p: The prime.
        precision: The number of digits K, at least 1, at least 3 for p = 2.
        branch: Which of the two roots to compute.

    Returns:
        The requested root.

    Raises:
        PerfectSquare: If D is the square of an integer.
        NotASquare: If D has no square root in Q_p.
    """
    p = Prime(p)
    if is_perfect_square(D):
        raise PerfectSquare('{} is a perfect square'.format(D))
    if not is_padic_square(D, p):
        raise NotASquare('{} is not a square in Q_{}'.format(D, p))
    if precision < 1 or (p == 2 and precision < 3):
        raise ValueError('Precision {} too small for p = {}'.format(precision, p))

    half_order = int(multiplicity(p, abs(D))) // 2
    unit = D // p**(2 * half_order)
    unit_digits = max(precision - half_order, 3 if p == 2 else 1)
    root = _unit_sqrt(unit, p, unit_digits)
    if branch is Branch.B:
        root = -root

    modulus = p**precision
    residue = (p**half_order * root) % modulus
    logger.debug('sqrt(%s) in Q_%s branch %s: %s mod %s^%s',
                 D, p, branch.value, residue, p, precision)
    return HenselRoot(D, p, precision, branch, residue)
