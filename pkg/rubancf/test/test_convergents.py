from fractions import Fraction
from random import Random
import pytest

from rubancf.convergents import (
        ConvergentPair, Convergents, convergents, eval_finite, eval_with_tail,
        mirror_ratio)
from rubancf.errors import ZeroDenominator
from rubancf.heights import random_quotient


def test_base_case() -> None:
    conv = convergents([0])
    assert len(conv) == 1
    assert conv.pair(0) == ConvergentPair(0, Fraction(0), Fraction(1))
    assert conv.r(-1) == 1
    assert conv.q(-1) == 0


def test_recurrence() -> None:
    conv = Convergents([3, Fraction(23, 5)])
    assert conv.r(1) == Fraction(74, 5)
    assert conv.q(1) == Fraction(23, 5)
    assert [pair.index for pair in conv] == [0, 1]

    with pytest.raises(IndexError):
        conv.q(2)

    with pytest.raises(IndexError):
        conv.r(-2)

    with pytest.raises(ZeroDenominator):
        conv.pair(-1).value()


def test_eval() -> None:
    assert eval_with_tail([0], Fraction(-1, 5)) == -5
    assert eval_with_tail([], Fraction(3, 7)) == Fraction(3, 7)
    assert eval_finite([3, Fraction(23, 5)]) == Fraction(74, 23)
    assert eval_finite([Fraction(12, 5)]) == Fraction(12, 5)

    with pytest.raises(ZeroDenominator):
        eval_finite([])

    with pytest.raises(ZeroDenominator):
        eval_finite([1, 0])

    with pytest.raises(ZeroDenominator):
        eval_with_tail([0, 1], -1)


def test_eval_matches_convergents(rng: Random) -> None:
    for _ in range(20):
        quotients = [0] + [random_quotient(5, rng) for _ in range(rng.randint(1, 12))]
        conv = Convergents(quotients)
        n = len(conv) - 1
        assert eval_finite(quotients) == conv.pair(n).value()
        tail = quotients[-1].value
        assert eval_with_tail(quotients[:-1], tail) == conv.pair(n).value()


def test_mirror_ratio() -> None:
    quotients = [0, Fraction(24, 5), Fraction(23, 5)]
    assert mirror_ratio(quotients, 2) == [Fraction(23, 5), Fraction(24, 5)]
    assert eval_finite(mirror_ratio(quotients, 2)) == Fraction(577, 120)

    conv = Convergents(quotients)
    assert conv.q(2) == Fraction(577, 25)
    assert conv.q(2) / conv.q(1) == Fraction(577, 120)

    assert mirror_ratio(quotients, 1) == [Fraction(24, 5)]

    with pytest.raises(ValueError):
        mirror_ratio(quotients, 0)

    with pytest.raises(ValueError):
        mirror_ratio(quotients, 3)


def test_mirror_ratio_random(rng: Random) -> None:
    quotients = [0] + [random_quotient(7, rng) for _ in range(100)]
    conv = Convergents(quotients)
    for m in range(1, 101, 9):
        assert eval_finite(mirror_ratio(quotients, m)) == conv.q(m) / conv.q(m - 1)
