from fractions import Fraction
import pytest
from typing import List

from rubancf.errors import InvalidQuotient, SpecInconsistent
from rubancf.expansion import p_minus_quotient
from rubancf.padic import SpElement
from rubancf.quasi_periodic import (
        ClosedForm, GeometricBlocks, QuasiPeriodicSpec, TabulatedBlocks,
        check_repetition, example1, example2, inverse_power, materialize,
        scan_period)


def sp(value: Fraction, p: int = 5) -> SpElement:
    return SpElement.from_value(value, p)


def test_closed_form() -> None:
    form = ClosedForm(Fraction(2), 3)
    assert [form(i) for i in range(4)] == [2, 6, 18, 54]
    assert form == ClosedForm(Fraction(2), 3)

    with pytest.raises(ValueError):
        ClosedForm(Fraction(1), 1)

    with pytest.raises(ValueError):
        ClosedForm(Fraction(0), 3)


def test_inverse_power() -> None:
    assert inverse_power(5, 1).value == Fraction(1, 5)
    assert inverse_power(3, 2).value == Fraction(1, 9)


def test_example1(example_specs: List[QuasiPeriodicSpec]) -> None:
    spec = example_specs[0]
    generator = spec.generator
    assert isinstance(generator, GeometricBlocks)
    assert generator.k == 1
    assert [(b.start, b.repeats) for b in spec.blocks_until(30)] == [
            (1, 2), (3, 6), (9, 18), (27, 54)]

    big, small = Fraction(24, 5), Fraction(1, 5)
    quotients = materialize(spec, 10)
    assert [q.value for q in quotients] == [0, big, big] + [small] * 6 + [big]

    assert [q.value for q in materialize(spec, 1)] == [0]


def test_example2(example_specs: List[QuasiPeriodicSpec]) -> None:
    spec = example_specs[1]
    generator = spec.generator
    assert isinstance(generator, GeometricBlocks)
    assert generator.k == 2
    blocks = spec.blocks_until(300)
    assert [(b.start, b.repeats) for b in blocks] == [(1, 8), (17, 136), (289, 2312)]
    assert blocks[0].end == blocks[1].start

    quotients = materialize(spec, 20)
    assert [q.value for q in quotients[:5]] == [
            0, Fraction(1, 5), Fraction(1, 25), Fraction(1, 5), Fraction(1, 25)]
    assert quotients[17] == p_minus_quotient(5)
    assert quotients[18] == p_minus_quotient(5)


def test_examples_other_primes(prime: int) -> None:
    for spec in (example1(prime), example2(prime)):
        quotients = materialize(spec, 400)
        assert quotients[0].value == 0
        for quotient in quotients[1:]:
            assert quotient.is_partial_quotient
        check_repetition(spec, quotients)


def test_filler() -> None:
    generator = TabulatedBlocks(
            [2, 6], [2, 1], [[sp(Fraction(2, 5))], [sp(Fraction(3, 5))]])
    spec = QuasiPeriodicSpec(5, [0], generator, sp(Fraction(4, 5)))
    quotients = [q.value for q in materialize(spec, 7)]
    assert quotients == [
            0, Fraction(4, 5), Fraction(2, 5), Fraction(2, 5), Fraction(4, 5),
            Fraction(4, 5), Fraction(3, 5)]

    with pytest.raises(ValueError):
        materialize(spec, 8)

    with pytest.raises(ValueError):
        materialize(spec, 0)

    assert generator.depth == 7


def test_prefix() -> None:
    generator = TabulatedBlocks([2], [2], [[sp(Fraction(2, 5))]])
    spec = QuasiPeriodicSpec(5, [1, Fraction(1, 5), Fraction(2, 5)], generator)
    assert [q.value for q in materialize(spec, 4)] == [
            1, Fraction(1, 5), Fraction(2, 5), Fraction(2, 5)]

    conflict = QuasiPeriodicSpec(5, [0, Fraction(1, 5), Fraction(3, 5)], generator)
    with pytest.raises(SpecInconsistent):
        materialize(conflict, 4)

    with pytest.raises(InvalidQuotient):
        QuasiPeriodicSpec(5, [0, 3], generator)

    with pytest.raises(ValueError):
        QuasiPeriodicSpec(5, [], generator)


def test_overlap() -> None:
    generator = TabulatedBlocks(
            [1, 2], [3, 1], [[sp(Fraction(1, 5))], [sp(Fraction(2, 5))]])
    spec = QuasiPeriodicSpec(5, [0], generator)
    with pytest.raises(SpecInconsistent):
        materialize(spec, 4)


def test_non_integer_closed_form() -> None:
    generator = GeometricBlocks(
            ClosedForm(Fraction(1, 2), 3), ClosedForm(Fraction(1), 3),
            [[sp(Fraction(1, 5))]])
    spec = QuasiPeriodicSpec(5, [0], generator)
    with pytest.raises(SpecInconsistent):
        materialize(spec, 5)


def test_invalid_contents() -> None:
    with pytest.raises(InvalidQuotient):
        TabulatedBlocks([1], [1], [[sp(Fraction(3))]])

    with pytest.raises(ValueError):
        TabulatedBlocks([1], [1, 2], [[sp(Fraction(1, 5))]])

    with pytest.raises(ValueError):
        GeometricBlocks(
                ClosedForm(Fraction(1), 2), ClosedForm(Fraction(1), 2),
                [[sp(Fraction(1, 5))], [sp(Fraction(1, 5)), sp(Fraction(2, 5))]])


def test_quotient_values(example_specs: List[QuasiPeriodicSpec]) -> None:
    values = {q.value for q in example_specs[1].quotient_values()}
    assert values == {Fraction(1, 5), Fraction(1, 25), Fraction(24, 5)}


def test_scan_period() -> None:
    a, b, c = sp(Fraction(1, 5)), sp(Fraction(2, 5)), sp(Fraction(0))
    assert scan_period([a, b] * 4) == (2, 0)
    assert scan_period([c] + [a, b] * 6) == (2, 1)
    assert scan_period([a, a, b, a, b, b, a, b]) is None
    assert scan_period([]) is None


def test_scan_period_evidence(example_specs: List[QuasiPeriodicSpec]) -> None:
    # a long final block looks periodic in a finite prefix
    quotients = materialize(example_specs[0], 27)
    period = scan_period(quotients)
    assert period == (1, 9)
    length, start = 1, 9
    for n in range(start, len(quotients) - length):
        assert quotients[n + length] == quotients[n]

    assert scan_period(materialize(example_specs[0], 12)) is None
