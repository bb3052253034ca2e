"""Configuration settings test suite.

Validate environment loading, defaults and range checks of the
application configuration module.
"""
import os
from unittest import mock

import pytest
from pydantic import ValidationError

from zappatic.config import Settings, get_settings


def test_defaults_keep_stdout_quiet():
    """Verify the default log level only lets warnings through."""
    settings = Settings(_env_file=None)
    assert settings.LOG_LEVEL == "warning"
    assert settings.ENVIRONMENT == "development"


def test_environment_prefix():
    """Verify that ZAP_-prefixed environment variables override the defaults."""
    env_vars = {"ZAP_JSON_INDENT": "4", "ZAP_RANDOM_MAX_RETRIES": "3"}
    with mock.patch.dict(os.environ, env_vars, clear=True):
        settings = Settings(_env_file=None)
    assert settings.JSON_INDENT == 4
    assert settings.RANDOM_MAX_RETRIES == 3


def test_unprefixed_variables_are_ignored():
    """Verify that variables without the prefix do not leak into the settings."""
    with mock.patch.dict(os.environ, {"JSON_INDENT": "8"}, clear=True):
        settings = Settings(_env_file=None)
    assert settings.JSON_INDENT == 2


@pytest.mark.parametrize("field", ["JSON_INDENT", "RANDOM_MAX_RETRIES"])
def test_non_positive_values_rejected(field):
    """Verify that indentation and retry budgets must be at least 1."""
    with pytest.raises(ValidationError):
        Settings(**{field: 0}, _env_file=None)


@pytest.mark.parametrize("ratio", [-0.1, 1.5, float("nan")])
def test_edge_ratio_must_be_a_fraction(ratio):
    """Verify that the extra edge ratio stays in [0, 1]."""
    with pytest.raises(ValidationError):
        Settings(RANDOM_EXTRA_EDGE_RATIO=ratio, _env_file=None)


def test_get_settings_is_cached():
    """Verify that the settings singleton is built once."""
    assert get_settings() is get_settings()
