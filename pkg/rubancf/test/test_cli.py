import json
import pytest
from typing import Any, Dict, List

from rubancf.cli import EXIT_EXHAUSTED, EXIT_INVALID, EXIT_OK, main
from rubancf.settings import BUDGET_VARIABLE


def run(capsys: Any, argv: List[str]) -> Dict[str, Any]:
    assert main(argv) == EXIT_OK
    return json.loads(capsys.readouterr().out)


def test_expand(capsys: Any) -> None:
    result = run(capsys, ['expand', '--prime', '5', '--rational', '1/2'])
    assert result == {'p': 5, 'quotients': ['3', '23/5'], 'tail': 'p-minus-periodic'}

    result = run(capsys, ['expand', '-p', '5', '--rational', '1/2', '--convergents',
                          '--json'])
    assert result['convergents'] == [['3', '1'], ['74/5', '23/5']]

    result = run(capsys, ['expand', '-p', '5', '--sqrt=-1', '--depth', '4'])
    assert result['quotients'][0] == '2'
    assert len(result['quotients']) == 4
    assert result['tail'] == 'open'


def test_classify(capsys: Any) -> None:
    result = run(capsys, ['classify', '-p', '5', '--rational', '3'])
    assert result == {'kind': 'finite', 'quotients': ['3']}

    result = run(capsys, ['classify', '-p', '5', '--sqrt=-1'])
    assert result == {
            'kind': 'certified-non-periodic',
            'certificate': {'m': 0, 'R': '0', 'Q': '1', 'Rnext': '2'}}


def test_criterion(capsys: Any) -> None:
    result = run(capsys, ['criterion', '--theorem', '1', '--example', '1',
                          '--prime', '5', '--depth', '200'])
    assert result['verdict'] == 'criterion-satisfied'
    assert result['A'] == '5'
    assert result['B'] == '1'
    assert result['ratio'] == '2'
    assert result['certain'] is True

    result = run(capsys, ['criterion', '--theorem', '4.3', '--example', '2',
                          '--prime', '3', '--depth', '300'])
    assert result['verdict'] == 'criterion-satisfied'
    assert 'A' not in result


def test_criterion_spec_file(capsys: Any, tmpdir: Any) -> None:
    path = tmpdir.join('spec.json')
    path.write(json.dumps({
            'p': 5,
            'quotients': ['0'],
            'generator': {
                'kind': 'geometric',
                'n': {'c': '1', 'g': 17},
                'lambda': {'c': '8', 'g': 17},
                'blocks': [['1/5', '1/25'], ['24/5', '24/5']]}}))
    result = run(capsys, ['criterion', '--theorem', '4.2', '--spec', str(path),
                          '--depth', '300'])
    assert result['A'] == '25'
    assert result['Bprime'] == '7'
    assert result['verdict'] == 'criterion-satisfied'


def test_height(capsys: Any, tmpdir: Any) -> None:
    path = tmpdir.join('spec.json')
    path.write(json.dumps({'p': 5, 'quotients': ['0', '24/5'],
                           'tail': {'preperiod': 1, 'period': 1}}))
    result = run(capsys, ['height', '--spec', str(path)])
    assert result['value'] == '-5'
    assert result['degree'] == 1
    assert result['H'] == 5
    assert result['bounds']['lemma'] == '5'
    assert result['bounds']['lemma_holds'] is True

    assert main(['height', '--spec', str(path), '--prime', '3']) == EXIT_INVALID
    capsys.readouterr()


def test_height_sweep(capsys: Any) -> None:
    argv = ['height', '--sweep', '20', '--seed', '3', '--prime', '7']
    result = run(capsys, argv)
    assert result['p'] == 7
    assert result['count'] == 20
    assert result['rational'] + result['quadratic'] == 20
    assert result['all_hold'] is True
    assert result['failures'] == []

    assert run(capsys, argv) == result


def test_exhausted(capsys: Any, monkeypatch: Any) -> None:
    argv = ['expand', '-p', '5', '--rational', '1/2', '--depth', '1']
    assert main(argv) == EXIT_EXHAUSTED
    assert 'did not finish' in capsys.readouterr().err

    monkeypatch.setenv(BUDGET_VARIABLE, '1')
    assert main(['classify', '-p', '5', '--rational', '1/2']) == EXIT_EXHAUSTED


def test_invalid(capsys: Any, monkeypatch: Any) -> None:
    assert main(['expand', '-p', '4', '--rational', '1/2']) == EXIT_INVALID
    assert main(['expand', '-p', '5', '--sqrt', '4']) == EXIT_INVALID
    assert main(['expand', '-p', '5', '--sqrt', '2']) == EXIT_INVALID
    err = capsys.readouterr().err
    assert 'NotPrimeError' in err
    assert 'PerfectSquare' in err

    assert main(['criterion', '--theorem', '1', '--example', '1']) == EXIT_INVALID

    monkeypatch.setenv(BUDGET_VARIABLE, 'x')
    assert main(['classify', '-p', '5', '--rational', '3']) == EXIT_INVALID


def test_usage(capsys: Any) -> None:
    with pytest.raises(SystemExit):
        main(['expand', '-p', '5'])

    with pytest.raises(SystemExit):
        main(['expand', '-p', '5', '--rational', '1/0'])

    with pytest.raises(SystemExit):
        main([])
