"""Tests for LabConfig and exception behaviour."""

import pickle

import pytest

from modplab.config import BUDGET_ENV_VAR, LabConfig
from modplab.exceptions import (
    BudgetExceededError,
    HomomorphismError,
    ParameterError,
    ProfileRangeError,
)


def test_defaults(monkeypatch):
    monkeypatch.delenv(BUDGET_ENV_VAR, raising=False)
    config = LabConfig.from_env()
    assert config.instance_budget == LabConfig.DEFAULT_INSTANCE_BUDGET
    assert config.workers >= 1


def test_environment_budget(monkeypatch):
    monkeypatch.setenv(BUDGET_ENV_VAR, "5")
    assert LabConfig.from_env().instance_budget == 5
    assert LabConfig.from_env(budget=7).instance_budget == 7


def test_invalid_values(monkeypatch):
    monkeypatch.setenv(BUDGET_ENV_VAR, "lots")
    with pytest.raises(ParameterError):
        LabConfig.from_env()
    monkeypatch.delenv(BUDGET_ENV_VAR)
    with pytest.raises(ParameterError):
        LabConfig.from_env(budget=0)
    with pytest.raises(ParameterError):
        LabConfig.from_env(workers=0)


@pytest.mark.parametrize(
    "error",
    [
        BudgetExceededError("too many", reached=12, cap=10),
        HomomorphismError("conflict", failed=["homomorphism"], witness=[[1]]),
        ProfileRangeError("out of range", index=0, value=-6),
    ],
)
def test_exceptions_survive_pickling(error):
    restored = pickle.loads(pickle.dumps(error))
    assert type(restored) is type(error)
    assert str(restored) == str(error)
    assert vars(restored) == vars(error)
