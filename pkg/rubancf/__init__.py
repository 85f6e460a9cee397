"""The :mod:`rubancf` module is the main API for rubancf.

This module contains everything you need to expand numbers into Ruban p-adic
continued fractions, classify those expansions, compute heights of periodic
ones, and check transcendence criteria for quasi-periodic ones.

Below, you will also find documentation for submodules. That is developer
documentation, you do not need it to use rubancf.
"""

__version__ = '0.1.0.dev'


from rubancf.classify import (
        NonPeriodicityCertificate, RationalVerdict, RationalVerdictKind,
        SurdVerdict, SurdVerdictKind, classify_rational, classify_surd,
        detect_cycle_surd)
from rubancf.convergents import Convergents, eval_finite, eval_with_tail
from rubancf.criteria import (
        CriterionReport, Verdict, bound_B, bound_Bprime, check_thm1, check_thm2,
        check_thm3, telescope_check)
from rubancf.errors import (
        BudgetExceeded, Degenerate, HypothesisViolated, InvalidQuotient, NotASquare,
        NotPrimeError, PerfectSquare, PrecisionOverflow, PreconditionError,
        RubanError, SpecInconsistent, ZeroDenominator)
from rubancf.expansion import CFExpansion, Tail, TailKind
from rubancf.factory import make_branch, make_criterion, make_example, make_expansion
from rubancf.heights import (
        AbsoluteHeight, HeightReport, PeriodicSpec, absolute_height, bound_report,
        periodic_value, primitive_height)
from rubancf.padic import Branch, SpElement, padic_sqrt, pfloor, vp
from rubancf.prime import Prime
from rubancf.quasi_periodic import (
        GeometricBlocks, QuasiPeriodicSpec, TabulatedBlocks, example1, example2,
        materialize)
from rubancf.ruban import expand_rational, expand_surd, padic_error
from rubancf.settings import Settings

import logging


logger = logging.getLogger('rubancf')
"""The rubancf root logger. Use this to set rubancf's log level.

If you want to see what an expansion is doing, for example when a square root
needs a lot of precision, you can do::

    import logging

    rubancf.logger.setLevel(logging.INFO)

or for even more::

    rubancf.logger.setLevel(logging.DEBUG)
"""

__all__ = [
        'absolute_height', 'bound_B', 'bound_Bprime', 'bound_report',
        'check_thm1', 'check_thm2', 'check_thm3', 'classify_rational',
        'classify_surd', 'detect_cycle_surd', 'eval_finite', 'eval_with_tail',
        'example1', 'example2', 'expand_rational', 'expand_surd', 'logger',
        'make_branch', 'make_criterion', 'make_example', 'make_expansion',
        'materialize', 'padic_error', 'padic_sqrt', 'periodic_value', 'pfloor',
        'primitive_height', 'telescope_check', 'vp',
        'AbsoluteHeight', 'Branch', 'BudgetExceeded', 'CFExpansion', 'Convergents',
        'CriterionReport', 'Degenerate', 'GeometricBlocks', 'HeightReport',
        'HypothesisViolated', 'InvalidQuotient', 'NonPeriodicityCertificate',
        'NotASquare', 'NotPrimeError', 'PerfectSquare', 'PeriodicSpec',
        'PrecisionOverflow', 'PreconditionError', 'Prime', 'QuasiPeriodicSpec',
        'RationalVerdict', 'RationalVerdictKind', 'RubanError', 'Settings',
        'SpElement', 'SpecInconsistent', 'SurdVerdict', 'SurdVerdictKind', 'Tail',
        'TailKind', 'TabulatedBlocks', 'Verdict', 'ZeroDenominator']
