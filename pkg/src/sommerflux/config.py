"""Application configuration.

Configuration is loaded from environment variables. For local work, you can provide a
`.env` file and set `SOMMERFLUX_ENV_FILE` to point to it.
"""

from __future__ import annotations

import os
from pathlib import Path
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

OutputFormat = Literal["table", "csv", "json"]


class Settings(BaseSettings):
    """sommerflux settings.

    All fields are environment-configurable. Prefix is `SOMMERFLUX_`.
    """

    model_config = SettingsConfigDict(
        env_prefix="SOMMERFLUX_",
        env_file=None,
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Core
    log_level: str = Field(default="WARNING")

    # Physical constants: "model" (g_s = 2), "codata" or a positive number
    g_s: str = Field(default="model")
    constants_file: Path | None = Field(default=None)

    # Reference data (packaged defaults are always loaded first)
    species_file: Path | None = Field(default=None)
    experimental_file: Path | None = Field(default=None)

    # Numerical oracles
    quad_tol: float = Field(default=1e-10, gt=0.0, le=1e-2)
    action_tol: float = Field(default=1e-9, gt=0.0)
    dipole_tol: float = Field(default=1e-6, gt=0.0)
    # allowed deviation of the fitted remainder exponent from 2
    linearization_tol: float = Field(default=0.05, gt=0.0)
    dipole_samples: int = Field(default=100, ge=1, le=10_000)
    random_seed: int = Field(default=0)

    # Output
    output_format: OutputFormat = Field(default="table")
    digits: int = Field(default=10, ge=1, le=17)


def load_settings() -> Settings:
    """Load settings from env.

    Returns:
        Settings: Parsed settings.
    """

    env_file_override = os.getenv("SOMMERFLUX_ENV_FILE")
    if env_file_override:
        env_path = Path(env_file_override)
        return Settings(_env_file=env_path)

    default_env = Path.cwd() / ".env"
    if default_env.exists():
        return Settings(_env_file=default_env)

    return Settings()
