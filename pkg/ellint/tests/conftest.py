"""
Pytest configuration and fixtures for the numerics tests.
"""
import os
from unittest.mock import patch

import pytest

from ellint.config import TOL_ENV_VAR, NumericsSettings, get_settings


@pytest.fixture(autouse=True)
def isolated_settings():
    """Keep a tolerance exported in the shell from leaking into cached settings."""
    with patch.dict("os.environ"):
        os.environ.pop(TOL_ENV_VAR, None)
        get_settings.cache_clear()
        yield
    get_settings.cache_clear()


@pytest.fixture
def settings():
    """Default numerics settings."""
    return NumericsSettings()


@pytest.fixture
def tight_settings():
    """Settings for reference values that must be good to near machine precision."""
    return NumericsSettings(tol=1e-13)


@pytest.fixture
def mock_env_vars():
    """Mock environment variables for testing."""
    env_vars = {TOL_ENV_VAR: "1e-12"}

    with patch.dict("os.environ", env_vars):
        get_settings.cache_clear()
        yield env_vars
    get_settings.cache_clear()
