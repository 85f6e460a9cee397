"""Conversion of expansions, specs and reports to and from JSON-compatible data.

All rational numbers are written as canonical fraction strings, ``N`` or
``N/D`` in lowest terms with D > 1, never as floats.
"""
from fractions import Fraction
import json
import re
from typing import Any, Dict, List, Optional, Tuple, Union

from mpmath import mp

from rubancf.classify import RationalVerdict, SurdVerdict, SurdVerdictKind
from rubancf.criteria import CriterionReport, UNBOUNDED
from rubancf.expansion import CFExpansion, Tail, TailKind, p_minus_quotient
from rubancf.heights import (
        HeightReport, PeriodicSpec, QuadraticValue, RationalValue)
from rubancf.padic import SpElement
from rubancf.prime import Prime
from rubancf.quasi_periodic import (
        BlockGenerator, ClosedForm, GeometricBlocks, QuasiPeriodicSpec,
        TabulatedBlocks)


_FRACTION = re.compile(r'-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?')


def format_fraction(x: Union[int, Fraction]) -> str:
    """Return the canonical string for a rational number."""
    return str(Fraction(x))


def parse_fraction(text: str) -> Fraction:
    """Parse a canonical fraction string.

    Args:
        text: A string like ``-3`` or ``23/5``, in lowest terms.

    Returns:
        The number.

    Raises:
        ValueError: If the string is not canonical.
    """
    if not isinstance(text, str) or not _FRACTION.fullmatch(text) or text == '-0':
        raise ValueError('Invalid fraction string {!r}'.format(text))
    value = Fraction(text)
    if format_fraction(value) != text:
        raise ValueError('Fraction {!r} is not in lowest terms'.format(text))
    return value


def _format_tail(tail: Tail) -> Union[str, Dict[str, int]]:
    if tail.kind == TailKind.TERMINATED:
        return 'finite'
    if tail.kind == TailKind.PERIODIC_P_MINUS:
        return 'p-minus-periodic'
    if tail.kind == TailKind.PERIODIC_CYCLE:
        assert tail.preperiod is not None and tail.period is not None
        return {'preperiod': tail.preperiod, 'period': tail.period}
    return 'open'


def _parse_tail(data: Any) -> Tail:
    if isinstance(data, dict):
        return Tail(TailKind.PERIODIC_CYCLE, int(data['preperiod']),
                    int(data['period']))
    kinds = {
            'finite': TailKind.TERMINATED,
            'p-minus-periodic': TailKind.PERIODIC_P_MINUS,
            'open': TailKind.OPEN}
    if data not in kinds:
        raise ValueError('Invalid tail {!r}'.format(data))
    return Tail(kinds[data])


class CFDocument:
    """The serialised form of an expansion.

    Attributes:
        p: The prime.
        quotients: The partial quotients.
        tail: What follows them.
        convergents: Optionally, the pairs (r_n, q_n) for n >= 0.
    """
    def __init__(
            self, p: int, quotients: List[Fraction], tail: Tail,
            convergents: Optional[List[Tuple[Fraction, Fraction]]] = None
            ) -> None:
        self.p = p
        self.quotients = quotients
        self.tail = tail
        self.convergents = convergents

    @staticmethod
    def from_expansion(
            expansion: CFExpansion, with_convergents: bool = False
            ) -> 'CFDocument':
        """Create a document describing an expansion."""
        convergents = None
        if with_convergents:
            convergents = [(pair.r, pair.q) for pair in expansion.convergents]
        return CFDocument(
                int(expansion.p), [q.value for q in expansion.quotients],
                expansion.tail, convergents)

    def to_expansion(self) -> CFExpansion:
        """Recreate the expansion, without any source information."""
        return CFExpansion(self.p, [SpElement.from_value(q, self.p)
                                    for q in self.quotients], self.tail)

    def to_dict(self) -> Dict[str, Any]:
        result = {
                'p': self.p,
                'quotients': [format_fraction(q) for q in self.quotients],
                'tail': _format_tail(self.tail)}  # type: Dict[str, Any]
        if self.convergents is not None:
            result['convergents'] = [[format_fraction(r), format_fraction(q)]
                                     for r, q in self.convergents]
        return result

    @staticmethod
    def from_dict(data: Dict[str, Any]) -> 'CFDocument':
        """Parse a document.

        Raises:
            ValueError: If the data is not a valid document.
            KeyError: If a required field is missing.
        """
        convergents = None
        if 'convergents' in data:
            convergents = [(parse_fraction(r), parse_fraction(q))
                           for r, q in data['convergents']]
        return CFDocument(
                int(data['p']), [parse_fraction(q) for q in data['quotients']],
                _parse_tail(data['tail']), convergents)

    def to_json(self) -> str:
        return dumps(self.to_dict())

    @staticmethod
    def from_json(text: str) -> 'CFDocument':
        return CFDocument.from_dict(json.loads(text))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CFDocument):
            return NotImplemented
        return self.to_dict() == other.to_dict()


def dumps(data: Any) -> str:
    """Serialise data to JSON deterministically."""
    return json.dumps(data, indent=2)


def _quotients(values: List[str], p: int) -> List[SpElement]:
    return [SpElement.from_value(parse_fraction(value), p) for value in values]


def load_periodic_spec(data: Dict[str, Any]) -> PeriodicSpec:
    """Create a PeriodicSpec from a document.

    The document has the CFDocument layout, with a tail that is either
    ``{"preperiod": h, "period": k}`` with h + k quotients, or
    ``"p-minus-periodic"``, in which case the quotients are the preperiod.

    Raises:
        ValueError: If the document does not describe a periodic fraction.
    """
    document = CFDocument.from_dict(data)
    p = Prime(document.p)
    quotients = [SpElement.from_value(q, p) for q in document.quotients]
    tail = document.tail
    if tail.kind == TailKind.PERIODIC_P_MINUS:
        return PeriodicSpec(p, len(quotients), 1, quotients + [p_minus_quotient(p)])
    if tail.kind != TailKind.PERIODIC_CYCLE:
        raise ValueError('A periodic spec needs a periodic tail')
    assert tail.preperiod is not None and tail.period is not None
    if tail.preperiod + tail.period != len(quotients):
        raise ValueError('Expected {} quotients, got {}'.format(
            tail.preperiod + tail.period, len(quotients)))
    return PeriodicSpec(p, tail.preperiod, tail.period, quotients)


def periodic_spec_to_dict(spec: PeriodicSpec) -> Dict[str, Any]:
    return {
            'p': int(spec.p),
            'quotients': [format_fraction(q.value) for q in spec.quotients],
            'tail': {'preperiod': spec.h, 'period': spec.k}}


def _closed_form(data: Dict[str, Any]) -> ClosedForm:
    return ClosedForm(parse_fraction(str(data['c'])), int(data['g']))


def _generator(data: Dict[str, Any], p: int) -> BlockGenerator:
    blocks = [_quotients(block, p) for block in data['blocks']]
    if data['kind'] == 'geometric':
        return GeometricBlocks(_closed_form(data['n']), _closed_form(data['lambda']),
                               blocks)
    if data['kind'] == 'tabulated':
        return TabulatedBlocks([int(n) for n in data['n']],
                               [int(lam) for lam in data['lambda']], blocks)
    raise ValueError('Unknown generator kind {!r}'.format(data['kind']))


def load_quasi_periodic_spec(data: Dict[str, Any]) -> QuasiPeriodicSpec:
    """Create a QuasiPeriodicSpec from a document.

    The document looks like

    .. code-block:: json

      {
        "p": 5,
        "quotients": ["0"],
        "generator": {
          "kind": "geometric",
          "n": {"c": "1", "g": 3},
          "lambda": {"c": "2", "g": 3},
          "blocks": [["24/5"], ["1/5"]]
        },
        "filler": "1/5"
      }

    where a ``tabulated`` generator has lists of integers for ``n`` and
    ``lambda`` and one block per entry, and ``filler`` is optional.

    Raises:
        ValueError: If the document is invalid.
        KeyError: If a required field is missing.
    """
    p = Prime(int(data['p']))
    prefix = _quotients(data['quotients'], p)
    filler = None
    if 'filler' in data:
        filler = SpElement.from_value(parse_fraction(data['filler']), p)
    return QuasiPeriodicSpec(p, prefix, _generator(data['generator'], p), filler)


def rational_verdict_to_dict(verdict: RationalVerdict) -> Dict[str, Any]:
    quotients = [format_fraction(q.value) for q in verdict.quotients]
    if verdict.kind.value == 'finite':
        return {'kind': verdict.kind.value, 'quotients': quotients}
    return {'kind': verdict.kind.value, 'preperiod': quotients}


def surd_verdict_to_dict(verdict: SurdVerdict) -> Dict[str, Any]:
    result = {'kind': verdict.kind.value}     # type: Dict[str, Any]
    if verdict.kind == SurdVerdictKind.PERIODIC:
        assert verdict.cycle is not None
        result['preperiod'] = verdict.preperiod
        result['period'] = verdict.period
        result['cycle'] = [{'R': format_fraction(state.R),
                            'Q': format_fraction(state.Q)}
                           for state in verdict.cycle]
    elif verdict.kind == SurdVerdictKind.CERTIFIED_NON_PERIODIC:
        certificate = verdict.certificate
        assert certificate is not None
        result['certificate'] = {
                'm': certificate.m,
                'R': format_fraction(certificate.R),
                'Q': format_fraction(certificate.Q),
                'Rnext': format_fraction(certificate.R_next)}
    else:
        result['steps'] = verdict.steps
    return result


def _format_real(x: Any) -> str:
    if x == UNBOUNDED:
        return 'inf'
    if isinstance(x, (int, Fraction)):
        return format_fraction(x)
    return mp.nstr(x, 15)


def height_report_to_dict(report: HeightReport) -> Dict[str, Any]:
    value = report.value
    result = {
            'spec': periodic_spec_to_dict(report.spec),
            'degree': value.degree,
            'polynomial': list(value.minimal_polynomial),
            'H': report.primitive,
            'Hbar': {
                'lower': format_fraction(report.absolute.lower),
                'upper': format_fraction(report.absolute.upper),
                'approx': mp.nstr(report.absolute.approximate(), 15)},
            'bounds': {
                'lemma': format_fraction(report.lemma_bound),
                'lemma_holds': report.lemma_holds,
                'upper_holds': report.upper_holds,
                'lower_holds': report.lower_holds,
                'integrality_holds': report.integrality_holds}
            }   # type: Dict[str, Any]
    if isinstance(value, RationalValue):
        result['value'] = format_fraction(value.value)
    elif isinstance(value, QuadraticValue):
        result['branch'] = value.branch.value
    return result


def criterion_report_to_dict(report: CriterionReport) -> Dict[str, Any]:
    result = {'theorem': report.theorem}    # type: Dict[str, Any]
    if report.A is not None:
        result['A'] = _format_real(report.A)
    if report.bound is not None:
        names = {'1.1': 'B', '4.2': 'Bprime'}
        result[names.get(report.theorem, 'bound')] = _format_real(report.bound)
    if report.ratio is not None:
        result['ratio'] = _format_real(report.ratio)
    result['verdict'] = report.verdict.value
    result['conclusion'] = report.conclusion
    result['certain'] = report.certain
    result['depth'] = report.depth
    result['checks'] = [{
            'name': check.name, 'passed': check.passed, 'certain': check.certain,
            'detail': check.detail} for check in report.checks]
    result['justification'] = report.justification
    return result
