from fractions import Fraction
import pytest

from rubancf.errors import InvalidQuotient, NotASquare, NotPrimeError, PerfectSquare
from rubancf.padic import (
        Branch, SpElement, hensel_digits, is_padic_square, is_perfect_square,
        padic_abs, padic_sqrt, pfloor, vp)
from rubancf.prime import Prime


def test_prime() -> None:
    p = Prime(5)
    assert p == 5
    assert p * p == 25
    assert Prime(p) is p

    for value in (0, 1, 4, 91, -5):
        with pytest.raises(NotPrimeError):
            Prime(value)

    with pytest.raises(NotPrimeError):
        Prime(True)

    with pytest.raises(NotPrimeError):
        Prime(7, max_prime=5)

    with pytest.raises(NotPrimeError):
        Prime(2**64 + 13)


def test_vp() -> None:
    assert vp(Fraction(1, 2), 5) == 0
    assert vp(Fraction(-2, 5), 5) == -1
    assert vp(Fraction(50, 3), 5) == 2
    assert int(vp(Fraction(3, 16), 2)) == -4

    zero = vp(0, 5)
    assert zero.is_infinite
    assert zero > 1000
    assert vp(25, 5) < zero
    with pytest.raises(ValueError):
        int(zero)


def test_padic_abs() -> None:
    assert padic_abs(Fraction(-2, 5), 5) == 5
    assert padic_abs(50, 5) == Fraction(1, 25)
    assert padic_abs(7, 5) == 1
    assert padic_abs(0, 5) == 0


def test_hensel_digits() -> None:
    assert hensel_digits(Fraction(1, 2), 5, 0, 2) == (3, 2, 2)
    assert hensel_digits(-1, 5, 0, 3) == (4, 4, 4, 4)
    assert hensel_digits(25, 5, 0, 2) == (0, 0, 1)
    assert hensel_digits(Fraction(-2, 5), 5, -1, 1) == (3, 4, 4)
    assert hensel_digits(0, 7, -2, 2) == (0, 0, 0, 0, 0)
    assert hensel_digits(3, 5, 2, 1) == ()


def test_hensel_digits_reconstruct() -> None:
    x = Fraction(-17, 40)
    digits = hensel_digits(x, 5, -1, 10)
    partial = sum(c * Fraction(5)**(i - 1) for i, c in enumerate(digits))
    assert vp(x - partial, 5) >= 11


def test_sp_element() -> None:
    element = SpElement(5, (4, 4), -1)
    assert element.value == Fraction(24, 5)
    assert element.is_partial_quotient
    assert element.abs_value() == 5
    assert int(element.valuation) == -1

    stripped = SpElement(5, (0, 1), -1)
    assert stripped.low == 0
    assert stripped.digits == (1,)
    assert not stripped.is_partial_quotient

    assert SpElement.from_value(Fraction(23, 5), 5) == SpElement(5, (3, 4), -1)
    assert SpElement.zero(3).value == 0
    assert SpElement(5, (1, 0), -1) < SpElement(5, (2, 0), -1)
    assert len({SpElement(5, (1, 0), -1), SpElement.from_value(Fraction(1, 5), 5)}) == 1

    with pytest.raises(InvalidQuotient):
        SpElement.from_value(7, 5)

    with pytest.raises(InvalidQuotient):
        SpElement.from_value(Fraction(1, 3), 5)

    with pytest.raises(InvalidQuotient):
        SpElement.from_value(Fraction(-1, 5), 5)

    with pytest.raises(InvalidQuotient):
        SpElement(5, (5, 0), -1)

    with pytest.raises(InvalidQuotient):
        SpElement(5, (1,), -1)


def test_pfloor() -> None:
    assert pfloor(Fraction(-1, 5), 5).value == Fraction(24, 5)
    assert pfloor(Fraction(25, 3), 5).value == 0
    assert pfloor(Fraction(1, 2), 5).value == 3
    assert pfloor(7, 5).value == 2
    assert pfloor(0, 5).value == 0


def test_pfloor_remainder(prime: int) -> None:
    for x in (Fraction(1, 3), Fraction(-22, 7), Fraction(99, prime**3), Fraction(-1)):
        remainder = x - pfloor(x, prime).value
        assert remainder == 0 or vp(remainder, prime) >= 1


def test_pfloor_idempotent(prime: int) -> None:
    values = [Fraction(1, 2), Fraction(-5, 3), Fraction(7, prime**2),
              Fraction(-1, prime), Fraction(prime**2 + 1, prime**4), Fraction(0)]
    for x in values:
        floor = pfloor(x, prime)
        assert pfloor(floor.value, prime) == floor
        assert all(0 <= c < prime for c in floor.digits)


def test_hensel_digits_windows(prime: int) -> None:
    for x in (Fraction(-17, 40 * prime), Fraction(2, 3), Fraction(prime**3, 11)):
        long = hensel_digits(x, prime, -3, 12)
        for lo, hi in [(-3, 0), (-1, 5), (2, 12), (0, 0)]:
            assert hensel_digits(x, prime, lo, hi) == long[lo + 3:hi + 4]


def test_is_padic_square() -> None:
    assert is_padic_square(-1, 5)
    assert not is_padic_square(2, 5)
    assert is_padic_square(17, 2)
    assert not is_padic_square(5, 2)
    assert not is_padic_square(3, 2)
    assert is_padic_square(-25, 5)
    assert not is_padic_square(10, 5)

    with pytest.raises(ValueError):
        is_padic_square(0, 5)


def test_is_perfect_square() -> None:
    assert is_perfect_square(0)
    assert is_perfect_square(49)
    assert not is_perfect_square(50)
    assert not is_perfect_square(-4)


def test_padic_sqrt() -> None:
    assert padic_sqrt(-1, 5, 2, Branch.A).residue == 7
    assert padic_sqrt(-1, 5, 1, Branch.B).residue == 3

    root = padic_sqrt(-1, 5, 20, Branch.A)
    assert (root.residue**2 + 1) % 5**20 == 0
    assert root.residue % 5 == 2
    assert root.refine(4).residue == root.residue % 5**4

    other = padic_sqrt(-1, 5, 20, Branch.B)
    assert (root.residue + other.residue) % 5**20 == 0

    with pytest.raises(PerfectSquare):
        padic_sqrt(4, 5, 4, Branch.A)

    with pytest.raises(NotASquare):
        padic_sqrt(2, 5, 4, Branch.A)

    with pytest.raises(ValueError):
        padic_sqrt(-1, 5, 0, Branch.A)


def test_padic_sqrt_two() -> None:
    for D in (17, -7, 41, -15):
        root = padic_sqrt(D, 2, 30, Branch.A)
        assert (root.residue**2 - D) % 2**30 == 0
        assert root.residue % 4 == 1

    with pytest.raises(ValueError):
        padic_sqrt(17, 2, 2, Branch.A)


def test_padic_sqrt_non_unit() -> None:
    root = padic_sqrt(-25, 5, 6, Branch.A)
    assert (root.residue**2 + 25) % 5**6 == 0
    assert root.residue % 25 == 10

    root = padic_sqrt(68, 2, 12, Branch.B)
    assert (root.residue**2 - 68) % 2**12 == 0
