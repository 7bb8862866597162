import contextlib
import os
import typing

from collections import namedtuple

from xmodcat.exceptions import SettingNotFound, InvalidSettingError
from xmodcat.utils import empty


_setting = namedtuple("_setting", ("name", "type", "envvar", "valid", "default"))


_PREFIX = "XMODCAT"

_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

SEED = _setting(name="seed", type=int, envvar=f"{_PREFIX}_SEED", valid=lambda value: value >= 0, default=0)
""" Seed of the random generator used by the character-table and commutant-splitting methods. """

TOLERANCE = _setting(
    name="tolerance", type=float, envvar=f"{_PREFIX}_TOLERANCE", valid=lambda value: 0 < value < 1, default=1e-8
)
""" Absolute tolerance for matrix and character comparisons. """

ROUNDING_GUARD = _setting(
    name="rounding_guard",
    type=float,
    envvar=f"{_PREFIX}_ROUNDING_GUARD",
    valid=lambda value: 0 < value < 0.5,
    default=1e-6,
)
""" Maximum distance to the nearest integer when recovering degrees, dimensions and multiplicities. """

RETRY_BUDGET = _setting(
    name="retry_budget", type=int, envvar=f"{_PREFIX}_RETRY_BUDGET", valid=lambda value: value >= 1, default=20
)
""" Number of random resamples before an eigenvalue collision is reported as :class:`NumericalDegeneracy`. """

LOG_LEVEL = _setting(
    name="log_level",
    type=str,
    envvar=f"{_PREFIX}_LOG_LEVEL",
    valid=lambda value: value in _LOG_LEVELS,
    default="WARNING",
)
""" Level used by the command line when configuring the root logger. """

_SETTINGS: dict[str, _setting] = {
    setting.name: setting for setting in (SEED, TOLERANCE, ROUNDING_GUARD, RETRY_BUDGET, LOG_LEVEL)
}


def _resolve(setting: typing.Union[str, _setting]) -> _setting:
    if isinstance(setting, str):
        if setting not in _SETTINGS:
            raise SettingNotFound(setting)
        setting = _SETTINGS[setting]
    return setting


def set_flag(setting: typing.Union[str, _setting], value: typing.Any):
    """
    Arguments:
      setting (str): The setting name to set
      value (Any): The value to set
    """
    setting = _resolve(setting)
    os.environ[setting.envvar] = str(value)


def unset_flag(setting: typing.Union[str, _setting]):
    """
    Arguments:
      setting (str): The setting name to unset
    Returns:
        str | None: The previously set value or None
    """
    setting = _resolve(setting)
    return os.environ.pop(setting.envvar, None)


@contextlib.contextmanager
def with_flag(setting: typing.Union[str, _setting], value: typing.Any):
    setting = _resolve(setting)
    old_value = os.getenv(setting.envvar, empty)

    set_flag(setting, value)
    try:
        yield
    finally:
        if old_value is not empty:
            set_flag(setting, old_value)
        else:
            unset_flag(setting)


class Settings:
    """
    Snapshot of the :code:`XMODCAT_*` environment. Keyword arguments that are not None take precedence over the
    environment, which takes precedence over the defaults.
    """

    __slots__ = tuple(_SETTINGS.keys())

    def __init__(self, **kwargs):
        self.merge(kwargs)

    def __getitem__(self, key):
        if key not in _SETTINGS:
            raise KeyError(key)
        return getattr(self, key)

    def to_dict(self):
        return {key: getattr(self, key) for key in _SETTINGS}

    def merge(self, data):
        for key in data:
            if key not in _SETTINGS:
                raise KeyError(f"{key} is not a valid setting.")

        for key, (_, type_, envvar, valid, default) in _SETTINGS.items():
            value = data.get(key)
            if value is None:
                value = os.getenv(envvar, default)
            try:
                value = type_(value)
            except (TypeError, ValueError) as err:
                raise InvalidSettingError(f"Invalid value {value!r} for setting {key}, expected {type_.__name__}") from err
            if not valid(value):
                raise InvalidSettingError(f"Invalid setting value {value!r} for setting {key}")
            setattr(self, key, value)
