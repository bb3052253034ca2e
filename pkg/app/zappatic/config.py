"""Application configuration management via pydantic-settings.

Centralize all runtime parameters of the zappatic toolkit. Load settings from
environment variables (prefix ``ZAP_``) and/or a `.env` file and validate them
before any command runs.
"""

from functools import lru_cache
from typing import Literal

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from zappatic.core.primitives import UnitFraction


class Settings(BaseSettings):
    """Application-wide configuration settings.

    Attributes:
        PROJECT_NAME: Display name for the application.
        VERSION: Semantic version string.
        ENVIRONMENT: Deployment environment identifier; selects the log renderer.
        LOG_LEVEL: Minimum logging verbosity level.
        LOGGING_NOISY_MODULES: Third-party loggers pinned to WARNING.
        JSON_INDENT: Indentation used for ``--pretty`` output.
        RANDOM_MAX_RETRIES: Attempts made by the random configuration generator.
        RANDOM_EXTRA_EDGE_RATIO: Share of extra (non-tree) edges drawn by the
            random configuration generator, relative to the vertex count.
    """

    model_config = SettingsConfigDict(
        env_prefix="ZAP_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore"
    )

    # ==========================================================================
    # PROJECT METADATA
    # ==========================================================================
    PROJECT_NAME: str = "zappatic"
    VERSION: str = "0.1.0"

    # ==========================================================================
    # ENVIRONMENT & LOGGING
    # ==========================================================================
    ENVIRONMENT: Literal["development", "staging", "production"] = "development"
    # stdout carries the JSON contract, so the default stays quiet.
    LOG_LEVEL: Literal["debug", "info", "warning", "error", "critical"] = "warning"
    LOGGING_NOISY_MODULES: list[str] = [
        "asyncio",
        "markdown_it",
    ]

    # ==========================================================================
    # OUTPUT
    # ==========================================================================
    JSON_INDENT: int = 2

    # ==========================================================================
    # RANDOM CONFIGURATIONS
    # ==========================================================================
    RANDOM_MAX_RETRIES: int = 25
    RANDOM_EXTRA_EDGE_RATIO: UnitFraction = 0.5

    @field_validator("JSON_INDENT", "RANDOM_MAX_RETRIES")
    @classmethod
    def validate_positive(cls, v: int) -> int:
        """Reject non-positive indentation and retry budgets.

        Args:
            v: The integer value to validate.

        Returns:
            The validated value.

        Raises:
            ValueError: If the value is lower than 1.
        """
        if v < 1:
            raise ValueError(f"Value must be at least 1 (got {v}).")
        return v


# ==============================================================================
# DEPENDENCY INJECTION
# ==============================================================================


@lru_cache()
def get_settings() -> Settings:
    """Return a cached singleton instance of the application settings.

    Returns:
        The singleton Settings instance.
    """
    return Settings()
