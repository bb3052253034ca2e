"""Test configuration and shared fixtures.

Provide isolated settings, a CLI runner and the golden data directory.
No fixture reads the developer's environment or `.env` file.
"""
from pathlib import Path

import pytest
from typer.testing import CliRunner

from zappatic.config import Settings

DATA_DIR = Path(__file__).parent / "data"

# ==============================================================================
# CONFIGURATION FIXTURES
# ==============================================================================

@pytest.fixture(scope="session")
def mock_settings() -> Settings:
    """Provide isolated test configuration without external dependencies.

    Returns:
        Settings: Development configuration, quiet logging and the default
            random generator budget, with `.env` loading disabled.
    """
    return Settings(
        ENVIRONMENT="development",
        LOG_LEVEL="warning",
        _env_file=None  # Bypass any local environment file
    )


@pytest.fixture
def isolated_cli(mocker, mock_settings: Settings) -> CliRunner:
    """Provide a CLI runner whose commands see the isolated settings.

    Args:
        mocker: pytest-mock fixture.
        mock_settings: Isolated test configuration.

    Returns:
        CliRunner: Typer test runner.
    """
    mocker.patch("zappatic.cli.get_settings", return_value=mock_settings)
    return CliRunner()

# ==============================================================================
# GOLDEN DATA
# ==============================================================================

@pytest.fixture(scope="session")
def data_dir() -> Path:
    """Directory of the golden JSON graph documents."""
    return DATA_DIR
