from fractions import Fraction
from random import Random
import pytest
from typing import Any, Generator, List

from rubancf.expansion import CFExpansion
from rubancf.heights import PeriodicSpec
from rubancf.padic import Branch
from rubancf.quasi_periodic import QuasiPeriodicSpec, example1, example2
from rubancf.ruban import expand_rational, expand_surd
from rubancf.settings import BUDGET_VARIABLE, Settings


# PyTest does not export FixtureRequest or MonkeyPatch in older versions,
# so they're annotated as Any.


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch: Any) -> Generator[None, None, None]:
    monkeypatch.delenv(BUDGET_VARIABLE, raising=False)
    yield


@pytest.fixture
def settings() -> Settings:
    return Settings()


@pytest.fixture
def rng() -> Random:
    return Random(20240517)


@pytest.fixture(params=[2, 3, 5, 7])
def prime(request: Any) -> int:
    return request.param


@pytest.fixture(scope='module')
def half_in_q5() -> CFExpansion:
    return expand_rational(Fraction(1, 2), 5, settings=Settings())


@pytest.fixture(scope='module')
def sqrt_minus_one_in_q5() -> CFExpansion:
    return expand_surd(-1, 5, Branch.A, 12, Settings())


@pytest.fixture(scope='module')
def rational_expansions() -> List[CFExpansion]:
    rng = Random(7)
    expansions = []
    for p in (2, 3, 5, 7):
        for _ in range(25):
            alpha = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**4))
            expansions.append(expand_rational(alpha, p, settings=Settings()))
    return expansions


@pytest.fixture(scope='module')
def surd_expansions() -> List[CFExpansion]:
    cases = [(-1, 5), (-1, 13), (6, 5), (11, 5), (-7, 11), (2, 7), (17, 2), (-7, 2)]
    return [expand_surd(D, p, branch, 15, Settings())
            for D, p in cases for branch in (Branch.A, Branch.B)]


@pytest.fixture
def minus_five_spec() -> PeriodicSpec:
    return PeriodicSpec(5, 1, 1, [0, Fraction(24, 5)])


@pytest.fixture
def golden_spec() -> PeriodicSpec:
    return PeriodicSpec(5, 1, 1, [0, Fraction(1, 5)])


@pytest.fixture(scope='module')
def example_specs() -> Generator[List[QuasiPeriodicSpec], None, None]:
    yield [example1(5), example2(5)]
