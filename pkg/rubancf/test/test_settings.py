import pytest
from typing import Any

from rubancf.settings import BUDGET_VARIABLE, Settings, resolve


def test_defaults() -> None:
    settings = Settings.from_environment()
    assert settings.rational_budget == Settings().rational_budget
    assert settings.initial_precision <= settings.precision_cap


def test_budget_from_environment(monkeypatch: Any) -> None:
    monkeypatch.setenv(BUDGET_VARIABLE, '7')
    settings = resolve(None)
    assert settings.rational_budget == 7
    assert settings.surd_budget == 7

    explicit = Settings()
    assert resolve(explicit) is explicit


def test_invalid_budget(monkeypatch: Any) -> None:
    monkeypatch.setenv(BUDGET_VARIABLE, 'x')
    with pytest.raises(ValueError):
        Settings.from_environment()

    monkeypatch.setenv(BUDGET_VARIABLE, '0')
    with pytest.raises(ValueError):
        Settings.from_environment()
