from fractions import Fraction
from typing import Generator, List, Sequence, TypeVar, Union

from rubancf.errors import ZeroDenominator
from rubancf.padic import Rational, SpElement


Quotient = Union[SpElement, Fraction, int]

T = TypeVar('T', SpElement, Fraction, int)


def quotient_value(quotient: Quotient) -> Fraction:
    """Return the value of a partial quotient as a Fraction."""
    if isinstance(quotient, SpElement):
        return quotient.value
    return Fraction(quotient)


class ConvergentPair:
    """The numerator and denominator of a convergent r_n / q_n.

    Attributes:
        index: The index n, at least -1.
        r: The numerator r_n.
        q: The denominator q_n.
    """
    def __init__(self, index: int, r: Fraction, q: Fraction) -> None:
        """Create a ConvergentPair."""
        self.index = index
        self.r = r
        self.q = q

    def value(self) -> Fraction:
        """Return r_n / q_n.

        Raises:
            ZeroDenominator: For index -1, where q is zero.
        """
        if self.q == 0:
            raise ZeroDenominator('Convergent {} has q = 0'.format(self.index))
        return self.r / self.q

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ConvergentPair):
            return NotImplemented
        return (self.index, self.r, self.q) == (other.index, other.r, other.q)

    def __repr__(self) -> str:
        return 'ConvergentPair({}, r={}, q={})'.format(self.index, self.r, self.q)


class Convergents:
    """The convergents of a sequence of partial quotients.

    These are given by q_{-1} = 0, q_0 = 1, q_n = a_n q_{n-1} + q_{n-2}, and
    r_{-1} = 1, r_0 = a_0, r_n = a_n r_{n-1} + r_{n-2}. With partial quotients
    whose denominators are powers of p, these are rationals rather than integers.

    Use :meth:`r`, :meth:`q` and :meth:`pair` to look up values, they accept
    index -1. Iterating gives the pairs for n = 0, 1, ...
    """
    def __init__(self, quotients: Sequence[Quotient]) -> None:
        """Compute the convergents of the given quotients.

        Args:
            quotients: The partial quotients a_0, a_1, ...
        """
        # Both lists are offset by one, so that index -1 is at position 0.
        self.__r = [Fraction(1)]
        self.__q = [Fraction(0)]
        for n, quotient in enumerate(quotients):
            a = quotient_value(quotient)
            if n == 0:
                self.__r.append(a)
                self.__q.append(Fraction(1))
            else:
                self.__r.append(a * self.__r[-1] + self.__r[-2])
                self.__q.append(a * self.__q[-1] + self.__q[-2])

    def __len__(self) -> int:
        """Return the number of convergents, not counting index -1."""
        return len(self.__q) - 1

    def __iter__(self) -> Generator[ConvergentPair, None, None]:
        for n in range(len(self)):
            yield self.pair(n)

    def __check(self, n: int) -> None:
        if not -1 <= n < len(self):
            raise IndexError('No convergent with index {}'.format(n))

    def r(self, n: int) -> Fraction:
        """Return r_n, for -1 <= n < len(self)."""
        self.__check(n)
        return self.__r[n + 1]

    def q(self, n: int) -> Fraction:
        """Return q_n, for -1 <= n < len(self)."""
        self.__check(n)
        return self.__q[n + 1]

    def pair(self, n: int) -> ConvergentPair:
        """Return (r_n, q_n), for -1 <= n < len(self)."""
        return ConvergentPair(n, self.r(n), self.q(n))


def convergents(quotients: Sequence[Quotient]) -> Convergents:
    """Compute the convergents of a list of partial quotients.

    Args:
        quotients: The partial quotients a_0, a_1, ...

    Returns:
        The exact convergents, satisfying [a_0, ..., a_n] = r_n / q_n.
    """
    return Convergents(quotients)


def eval_with_tail(quotients: Sequence[Quotient], tail: Rational) -> Fraction:
    """Evaluate [a_0, ..., a_n, tail] exactly.

    This uses (tail r_n + r_{n-1}) / (tail q_n + q_{n-1}). An empty list of
    quotients gives the tail itself.

    Args:
        quotients: The partial quotients a_0, ..., a_n.
        tail: The final complete quotient.

    Returns:
        The value of the continued fraction.

    Raises:
        ZeroDenominator: If the denominator vanishes.
    """
    tail = Fraction(tail)
    if not quotients:
        return tail
    conv = Convergents(quotients)
    n = len(conv) - 1
    denominator = tail * conv.q(n) + conv.q(n - 1)
    if denominator == 0:
        raise ZeroDenominator(
                'Continued fraction with tail {} has a zero denominator'.format(tail))
    return (tail * conv.r(n) + conv.r(n - 1)) / denominator


def eval_finite(quotients: Sequence[Quotient]) -> Fraction:
    """Evaluate the finite continued fraction [a_0, ..., a_n] exactly.

    Raises:
        ZeroDenominator: If the quotients are empty or a denominator vanishes.
    """
    if not quotients:
        raise ZeroDenominator('An empty continued fraction has no value')
    value = quotient_value(quotients[-1])
    for quotient in reversed(quotients[:-1]):
        if value == 0:
            raise ZeroDenominator('Continued fraction has a zero denominator')
        value = quotient_value(quotient) + 1 / value
    return value


def mirror_ratio(quotients: Sequence[T], m: int) -> List[T]:
    """Return [a_m, ..., a_1], whose value is q_m / q_{m-1}.

    Args:
        quotients: The partial quotients a_0, a_1, ...
        m: The index to mirror at, 1 <= m < len(quotients).

    Returns:
        The partial quotients a_1, ..., a_m in reverse order.
    """
    if not 1 <= m < len(quotients):
        raise ValueError('Cannot mirror at index {} of {} quotients'.format(
            m, len(quotients)))
    return list(quotients[m:0:-1])
