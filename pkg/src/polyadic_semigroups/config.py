"""Configuration management for polyadic-semigroups."""

import os
from functools import lru_cache
from pathlib import Path
from typing import Any

from platformdirs import user_config_dir, user_data_dir
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

# Desk-scale guarantees
DEFAULT_CELL_CAP = 10**8
DEFAULT_IDENTITY_CAP = 10**9
DEFAULT_TIMEOUT_SECS = 60.0

# Config directory - for config.json
# Defaults to platform-specific user config directory, can be overridden with ALG_CONFIG_DIR
# Examples: ~/.config/polyadic-semigroups (Linux),
#           ~/Library/Application Support/polyadic-semigroups (macOS)
CONFIG_DIR = Path(
    os.environ.get("ALG_CONFIG_DIR", user_config_dir("polyadic-semigroups", appauthor=False))
)
CONFIG_FILE = CONFIG_DIR / "config.json"

# Data directory - for emitted catalogs
# Defaults to platform-specific user data directory, can be overridden with ALG_DATA_DIR
DATA_DIR = Path(
    os.environ.get("ALG_DATA_DIR", user_data_dir("polyadic-semigroups", appauthor=False))
)
CATALOG_DIR = DATA_DIR / "catalogs"


class AlgebraConfig(BaseSettings):
    """Caps, timeouts and parallelism for the library and the `alg` CLI."""

    model_config = SettingsConfigDict(
        env_prefix="ALG_",
        env_file=".env",
        extra="ignore",
    )

    # Search settings
    timeout_secs: float = Field(default=DEFAULT_TIMEOUT_SECS, gt=0)
    first_fail: bool = False
    jobs: int = Field(default=1, ge=1)

    # Storage caps
    cell_cap: int = Field(default=DEFAULT_CELL_CAP, ge=1)
    identity_cap: int = Field(default=DEFAULT_IDENTITY_CAP, ge=1)

    # Enumeration caps (orders)
    oracle_max_order: int = 3
    semigroup_max_order: int = 4
    monoid_max_order: int = 5
    w_monoid_max_order: int = 6
    bitranslation_max_order: int = 6

    # Where `alg enumerate --out` writes when given a bare file name
    catalog_dir: Path | None = None

    def save(self) -> None:
        """Save configuration to file."""
        CONFIG_DIR.mkdir(parents=True, exist_ok=True)
        CONFIG_FILE.write_text(self.model_dump_json(indent=2))

    @classmethod
    def load(cls) -> "AlgebraConfig":
        """Load configuration from file and environment.

        Priority (highest to lowest):
        1. Environment variables / .env file
        2. Config file (CONFIG_DIR/config.json)
        3. Default values
        """
        import json

        from dotenv import dotenv_values

        file_settings: dict[str, Any] = {}
        if CONFIG_FILE.exists():
            file_settings = json.loads(CONFIG_FILE.read_text())

        # Env vars take priority over file settings
        env_vars = {**dotenv_values(".env"), **os.environ}
        for field_name in cls.model_fields:
            if f"ALG_{field_name.upper()}" in env_vars:
                file_settings.pop(field_name, None)

        return cls(**file_settings)

    def resolved_catalog_dir(self) -> Path:
        """Directory for catalogs, falling back to the user data directory."""
        return self.catalog_dir or CATALOG_DIR


@lru_cache(maxsize=1)
def get_config() -> AlgebraConfig:
    """Process-wide configuration used when a caller passes no explicit value."""
    return AlgebraConfig.load()
