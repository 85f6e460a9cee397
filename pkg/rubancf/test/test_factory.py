from fractions import Fraction
import pytest

from rubancf.criteria import BlockGrowthCriterion, LiminfCriterion, LimsupCriterion
from rubancf.expansion import TailKind
from rubancf.factory import make_branch, make_criterion, make_example, make_expansion
from rubancf.padic import Branch
from rubancf.quasi_periodic import GeometricBlocks


def test_make_branch() -> None:
    assert make_branch('a') == Branch.A
    assert make_branch('B') == Branch.B

    with pytest.raises(ValueError):
        make_branch('c')


def test_make_expansion() -> None:
    expansion = make_expansion(5, rational=Fraction(1, 2))
    assert expansion.tail.kind == TailKind.PERIODIC_P_MINUS

    expansion = make_expansion(5, sqrt=-1, depth=3)
    assert len(expansion.quotients) == 3
    assert expansion.quotients[0].value == 2

    expansion = make_expansion(5, sqrt=-1, branch='b')
    assert len(expansion.quotients) == 10
    assert expansion.quotients[0].value == 3

    with pytest.raises(ValueError):
        make_expansion(5)

    with pytest.raises(ValueError):
        make_expansion(5, rational=Fraction(1, 2), sqrt=-1)


def test_make_example() -> None:
    spec = make_example(2, 3)
    assert spec.p == 3
    assert isinstance(spec.generator, GeometricBlocks)
    assert spec.generator.k == 2

    with pytest.raises(ValueError):
        make_example(3, 5)


def test_make_criterion() -> None:
    assert isinstance(make_criterion('1'), LiminfCriterion)
    assert isinstance(make_criterion('1.1'), LiminfCriterion)
    assert isinstance(make_criterion('4.2'), LimsupCriterion)
    assert isinstance(make_criterion('3'), BlockGrowthCriterion)

    with pytest.raises(ValueError):
        make_criterion('7')
