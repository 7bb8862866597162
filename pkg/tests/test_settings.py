import os

import pytest

from xmodcat.exceptions import InvalidSettingError, SettingNotFound
from xmodcat.settings import SEED, Settings, set_flag, unset_flag, with_flag


def test_defaults():
    settings = Settings()
    assert settings["seed"] == 0
    assert settings["tolerance"] == 1e-8
    assert settings["rounding_guard"] == 1e-6
    assert settings["retry_budget"] == 20
    assert settings["log_level"] == "WARNING"


def test_precedence():
    with with_flag("seed", 5):
        assert Settings()["seed"] == 5
        assert Settings(seed=9)["seed"] == 9
        assert Settings(seed=None)["seed"] == 5
    assert Settings()["seed"] == 0
    assert SEED.envvar not in os.environ


def test_set_and_unset():
    set_flag(SEED, 3)
    assert Settings().to_dict()["seed"] == 3
    assert unset_flag("seed") == "3"
    assert unset_flag("seed") is None


def test_with_flag_restores_previous_value():
    with with_flag("tolerance", 1e-6):
        with with_flag("tolerance", 1e-4):
            assert Settings()["tolerance"] == 1e-4
        assert Settings()["tolerance"] == 1e-6


def test_invalid_settings():
    with pytest.raises(InvalidSettingError):
        Settings(tolerance=2.0)
    with pytest.raises(InvalidSettingError):
        Settings(retry_budget=0)
    with with_flag("seed", "abc"):
        with pytest.raises(InvalidSettingError):
            Settings()
    with pytest.raises(SettingNotFound):
        set_flag("precision", 3)
    with pytest.raises(KeyError):
        Settings(precision=3)
    with pytest.raises(KeyError):
        Settings()["precision"]
