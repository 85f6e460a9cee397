from fractions import Fraction
import pytest
from typing import List

from rubancf.criteria import (
        BlockGrowthCriterion, Verdict, bound_B, bound_Bprime,
        check_thm1, check_thm2, check_thm3, telescope_check)
from rubancf.expansion import p_minus_quotient
from rubancf.padic import SpElement
from rubancf.quasi_periodic import (
        ClosedForm, GeometricBlocks, QuasiPeriodicSpec, TabulatedBlocks,
        example1, example2, inverse_power)
from rubancf.settings import Settings


def sp(value: Fraction) -> SpElement:
    return SpElement.from_value(value, 5)


def geometric(n: ClosedForm, lam: ClosedForm, p: int = 5) -> QuasiPeriodicSpec:
    generator = GeometricBlocks(
            n, lam, [[p_minus_quotient(p)], [inverse_power(p, 1)]])
    return QuasiPeriodicSpec(p, [0], generator)


def test_bounds() -> None:
    assert bound_B(5, 5) == 1
    assert bound_B(25, 5) == 3
    assert bound_Bprime(25, 5) == 7
    assert bound_Bprime(Fraction(5), 5) == 3
    for t in range(1, 6):
        assert bound_B(3**t, 3) == 2 * t - 1
        assert isinstance(bound_B(3**t, 3), Fraction)

    assert abs(float(bound_B(10, 5)) - 1.8613531) < 1e-6
    assert abs(float(bound_Bprime(10.0, 5)) - 4.7227063) < 1e-6

    with pytest.raises(ValueError):
        bound_B(4, 5)

    with pytest.raises(ValueError):
        bound_Bprime(Fraction(1, 2), 5)


def test_thm1_examples(prime: int) -> None:
    report = check_thm1(example1(prime), prime, depth=200)
    assert report.verdict == Verdict.CRITERION_SATISFIED
    assert report.bound == 1
    assert report.ratio == 2
    assert report.certain

    report = check_thm1(example2(prime), prime**2, depth=400)
    assert report.verdict == Verdict.CRITERION_SATISFIED
    assert report.bound == 3
    assert report.ratio == 8
    assert report.conclusion == 'transcendental'


def test_thm1_failures(example_specs: List[QuasiPeriodicSpec]) -> None:
    # lambda_i = n_i gives ratio 1, which is not above B = 1
    spec = geometric(ClosedForm(Fraction(1), 2), ClosedForm(Fraction(1), 2))
    report = check_thm1(spec, 5, depth=100)
    assert report.verdict == Verdict.NOT_SATISFIED
    failed = [check.name for check in report.checks if check.passed is False]
    assert failed == ['ratio']

    # |1/25|_5 = 25 exceeds A
    report = check_thm1(example_specs[1], 5, depth=100)
    assert report.verdict == Verdict.NOT_SATISFIED

    with pytest.raises(ValueError):
        check_thm1(example_specs[0], 4, depth=100)

    with pytest.raises(ValueError):
        check_thm1(example_specs[0], 5, depth=0)


def test_slow_blocks() -> None:
    # lambda_i grows slower than n_i, the gaps hold the filler
    spec = geometric(ClosedForm(Fraction(1), 3), ClosedForm(Fraction(1), 2))
    report = check_thm1(spec, 5, depth=100)
    assert report.ratio == 0
    assert report.verdict == Verdict.NOT_SATISFIED


def test_thm1_without_p_minus_blocks() -> None:
    generator = GeometricBlocks(
            ClosedForm(Fraction(1), 3), ClosedForm(Fraction(2), 3),
            [[sp(Fraction(2, 5))], [sp(Fraction(1, 5))]])
    report = check_thm1(QuasiPeriodicSpec(5, [0], generator), 5, depth=100)
    assert report.verdict == Verdict.NOT_SATISFIED
    assert [check.name for check in report.checks
            if check.passed is False] == ['p-minus-blocks']


def test_thm1_tabulated(settings: Settings) -> None:
    big, small = Fraction(24, 5), Fraction(1, 5)
    generator = TabulatedBlocks(
            [1, 3, 9, 27], [2, 6, 18, 54],
            [[sp(big)], [sp(small)], [sp(big)], [sp(small)]])
    report = check_thm1(QuasiPeriodicSpec(5, [0], generator), 5, settings=settings)
    assert report.depth == 81
    assert report.ratio == 2
    assert not report.certain
    # a long final block looks periodic in a finite prefix
    assert report.verdict == Verdict.INSUFFICIENT_EVIDENCE
    assert [check.name for check in report.checks
            if check.passed is None] == ['not-ultimately-periodic']


def test_thm2(prime: int) -> None:
    report = check_thm2(example2(prime), prime**2, depth=400)
    assert report.verdict == Verdict.CRITERION_SATISFIED
    assert report.bound == 7
    assert report.conclusion == 'quadratic irrational or transcendental'

    report = check_thm2(example1(prime), prime, depth=100)
    assert report.verdict == Verdict.NOT_SATISFIED
    assert report.bound == 3


def test_thm2_insufficient(settings: Settings) -> None:
    generator = TabulatedBlocks(
            [1, 3], [2, 2], [[sp(Fraction(1, 5))], [sp(Fraction(2, 5))]])
    spec = QuasiPeriodicSpec(5, [0], generator)
    report = check_thm2(spec, 25, settings=settings)
    assert report.depth == 5
    assert report.ratio is None
    assert report.verdict == Verdict.INSUFFICIENT_EVIDENCE


def test_thm3(prime: int) -> None:
    report = check_thm3(example2(prime), depth=400)
    assert report.verdict == Verdict.CRITERION_SATISFIED
    assert report.ratio == 17
    assert report.A is None

    report = check_thm3(example1(prime), depth=100)
    assert report.verdict == Verdict.NOT_SATISFIED
    assert report.ratio == 3


def test_thm3_slow_growth() -> None:
    spec = geometric(ClosedForm(Fraction(1), 4), ClosedForm(Fraction(3), 4))
    report = check_thm3(spec, depth=100)
    assert report.verdict == Verdict.NOT_SATISFIED
    assert [check.name for check in report.checks
            if check.passed is False] == ['ratio']

    assert not BlockGrowthCriterion.needs_A


def test_thm3_gaps() -> None:
    spec = geometric(ClosedForm(Fraction(1), 5), ClosedForm(Fraction(2), 5))
    report = check_thm3(spec, depth=200)
    assert report.verdict == Verdict.NOT_SATISFIED
    assert [check.name for check in report.checks
            if check.passed is False] == ['contiguous']


def test_thm3_tabulated(settings: Settings) -> None:
    a, b = sp(Fraction(24, 5)), sp(Fraction(1, 5))
    generator = TabulatedBlocks(
            [1, 2, 7, 32, 157], [1, 5, 25, 125, 625], [[a], [b], [a], [b], [a]])
    report = check_thm3(QuasiPeriodicSpec(5, [0], generator), settings=settings)
    assert report.depth == 782
    assert report.ratio == 5
    checks = {check.name: check.passed for check in report.checks}
    assert checks['contiguous']
    assert checks['ratio']


def test_telescope(example_specs: List[QuasiPeriodicSpec]) -> None:
    report = telescope_check(example_specs[0], depth=100)
    assert [(e.start, e.end) for e in report.entries] == [
            (1, 3), (3, 9), (9, 27), (27, 81)]
    assert report.holds
    assert all(e.mirrored == e.end - e.start for e in report.entries)

    report = telescope_check(example_specs[1], depth=300, mirror_limit=10)
    assert [(e.start, e.end) for e in report.entries] == [(1, 17), (17, 289)]
    assert report.entries[1].mirrored == 2
    assert report.holds

    assert telescope_check(example_specs[0], depth=2).entries == []


def test_telescope_primes(prime: int) -> None:
    report = telescope_check(example1(prime), depth=100)
    assert [(e.start, e.end) for e in report.entries] == [
            (1, 3), (3, 9), (9, 27), (27, 81)]
    assert report.holds

    # the next block of example2 starts at 4913, beyond any usable depth
    report = telescope_check(example2(prime), depth=300, mirror_limit=10)
    assert [(e.start, e.end) for e in report.entries] == [(1, 17), (17, 289)]
    assert report.holds
