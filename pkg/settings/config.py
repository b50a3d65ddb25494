"""
Toolkit Configuration Management

This module provides configuration for the algebra toolkit, integrating with
environment variables and .env files and providing validation.
"""

from pathlib import Path
from typing import Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
REPORT_FORMATS = ("text", "json")


class ToolkitConfig(BaseSettings):
    """
    Toolkit configuration with validation and environment variable support.

    All settings can be overridden via environment variables with the DIALG_
    prefix, e.g. DIALG_MAX_DIM=8.
    """

    model_config = SettingsConfigDict(
        env_prefix="DIALG_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Input limits
    max_dim: int = Field(32, description="Largest accepted algebra dimension")

    # Reporting
    violation_prefix: int = Field(10, description="Violations listed per axiom in reports")
    report_format: str = Field("text", description="Report format: text or json")
    log_level: str = Field("INFO", description="Logging level for the CLI")

    # Generation
    generate_max_attempts: int = Field(64, description="Attempts per generated instance before giving up")

    @field_validator('max_dim')
    @classmethod
    def validate_max_dim(cls, v: int) -> int:
        """Validate the dimension bound is in a workable range."""
        if not (1 <= v <= 64):
            raise ValueError('max_dim must be between 1 and 64')
        return v

    @field_validator('violation_prefix')
    @classmethod
    def validate_violation_prefix(cls, v: int) -> int:
        if v < 0:
            raise ValueError('violation_prefix must be non-negative')
        return v

    @field_validator('generate_max_attempts')
    @classmethod
    def validate_attempts(cls, v: int) -> int:
        if v < 1:
            raise ValueError('generate_max_attempts must be at least 1')
        return v

    @field_validator('report_format')
    @classmethod
    def validate_report_format(cls, v: str) -> str:
        v = v.lower()
        if v not in REPORT_FORMATS:
            raise ValueError(f'report_format must be one of {", ".join(REPORT_FORMATS)}')
        return v

    @field_validator('log_level')
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        v = v.upper()
        if v not in LOG_LEVELS:
            raise ValueError(f'log_level must be one of {", ".join(LOG_LEVELS)}')
        return v

    @classmethod
    def from_env_file(cls, env_file_path: Optional[Path] = None) -> "ToolkitConfig":
        """
        Create configuration from an environment file.

        Args:
            env_file_path: Optional path to a .env file. Defaults to ./.env

        Returns:
            ToolkitConfig: Configured instance
        """
        if env_file_path is None:
            env_file_path = Path.cwd() / ".env"

        if Path(env_file_path).exists():
            return cls(_env_file=str(env_file_path))
        # Fall back to environment variables only
        return cls(_env_file=None)


# Global configuration instance
_config: Optional[ToolkitConfig] = None


def get_toolkit_config(env_file_path: Optional[Path] = None) -> ToolkitConfig:
    """
    Get or create the global toolkit configuration instance.

    Args:
        env_file_path: Optional path to environment file

    Returns:
        ToolkitConfig: Global configuration instance
    """
    global _config
    if _config is None:
        _config = ToolkitConfig.from_env_file(env_file_path)
    return _config


def reset_toolkit_config() -> None:
    """Reset the global configuration (useful for testing)."""
    global _config
    _config = None
