from typing import Optional

from rubancf.criteria import (
        BlockGrowthCriterion, Criterion, LiminfCriterion, LimsupCriterion)
from rubancf.expansion import CFExpansion
from rubancf.padic import Branch, Rational
from rubancf.quasi_periodic import QuasiPeriodicSpec, example1, example2
from rubancf.ruban import expand_rational, expand_surd
from rubancf.settings import Settings


def make_branch(name: str) -> Branch:
    """Return the branch with the given name, ``a`` or ``b``."""
    try:
        return Branch(name.lower())
    except ValueError:
        raise ValueError('Unknown branch {}, use a or b'.format(name))


def make_expansion(
        p: int, rational: Optional[Rational] = None, sqrt: Optional[int] = None,
        branch: str = 'a', depth: Optional[int] = None,
        settings: Optional[Settings] = None) -> CFExpansion:
    """Make an expansion.

    This is a factory function for expansions. It expands either a rational
    number, or a square root of an integer, depending on which you give it.

    Args:
        p: The prime.

        rational: A rational number to expand. Its expansion is computed until it
                terminates or reaches its periodic tail, within depth steps if
                given, else within the rational budget.

        sqrt: An integer whose square root to expand, to depth quotients.

        branch: Which square root to expand, ``a`` or ``b``.

        depth: The number of partial quotients to compute. Defaults to 10 for
                square roots.

        settings: Settings to use, None to use those from the environment.

    Returns:
        The expansion.
    """
    if (rational is None) == (sqrt is None):
        raise ValueError('Specify exactly one of rational or sqrt')
    if rational is not None:
        return expand_rational(rational, p, depth, settings)
    assert sqrt is not None
    return expand_surd(sqrt, p, make_branch(branch), depth or 10, settings)


def make_example(number: int, p: int) -> QuasiPeriodicSpec:
    """Make one of the built-in quasi-periodic examples.

    Args:
        number: The example, 1 or 2. Number 1 repeats single quotients
                2 * 3**i times, number 2 repeats pairs 8 * 17**i times.

        p: The prime.

    Returns:
        The spec.
    """
    if number == 1:
        return example1(p)
    elif number == 2:
        return example2(p)
    else:
        raise ValueError('Unknown example {}, expected 1 or 2'.format(number))


def make_criterion(theorem: str) -> Criterion:
    """Make a criterion object.

    Args:
        theorem: The criterion, one of ``1`` or ``1.1`` (liminf of
                lambda_i / n_i), ``2`` or ``4.2`` (limsup of lambda_i / n_i), or
                ``3`` or ``4.3`` (growth of lambda_i).

    Returns:
        The Criterion.
    """
    if theorem in ('1', '1.1'):
        return LiminfCriterion()
    elif theorem in ('2', '4.2'):
        return LimsupCriterion()
    elif theorem in ('3', '4.3'):
        return BlockGrowthCriterion()
    else:
        raise ValueError(
                'Unknown theorem {} specified, expected one of 1, 2,'
                ' or 3.'.format(theorem))
