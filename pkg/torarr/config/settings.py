"""
Settings loader for torarr.
Reads defaults.yaml, then applies environment overrides (a .env file is
honoured through python-dotenv).
"""

import logging
import os
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional

import yaml
from dotenv import load_dotenv

logger = logging.getLogger(__name__)

ENV_PREFIX = "TORARR_"


@dataclass(frozen=True)
class Settings:
    """Guards and logging options shared by the library and the CLI."""
    max_subsets: int = 20
    max_generators: int = 10000
    hilbert_scan_limit: Optional[int] = None
    log_level: str = "INFO"
    log_file: Optional[str] = None

    def with_overrides(self, **changes) -> "Settings":
        """Return a copy with the non-None keyword values applied."""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


class SettingsLoader:
    """Loads Settings from a YAML file plus environment variables."""

    def __init__(self, config_path: str = None, use_env: bool = True):
        """
        Args:
            config_path: Path to a YAML settings file. If None, uses the
                packaged defaults.yaml.
            use_env: Apply TORARR_* environment overrides.
        """
        explicit = config_path is not None
        if config_path is None:
            config_path = Path(__file__).parent / "defaults.yaml"

        self.config_path = Path(config_path)
        self.explicit = explicit
        self.use_env = use_env
        self.config = self._load_config()

    def _load_config(self) -> dict:
        """Load the YAML document."""
        if not self.config_path.exists():
            raise FileNotFoundError(f"Configuration file not found: {self.config_path}")

        with open(self.config_path, "r") as f:
            config = yaml.safe_load(f) or {}

        logger.debug(f"Loaded configuration from {self.config_path}")
        return config

    def _env_overrides(self) -> dict:
        """Collect TORARR_* overrides from the environment."""
        load_dotenv()
        overrides = {}
        for key, cast in (
            ("max_subsets", int),
            ("max_generators", int),
            ("hilbert_scan_limit", int),
            ("log_level", str),
            ("log_file", str),
        ):
            raw = os.getenv(ENV_PREFIX + key.upper())
            if raw is None or raw == "":
                continue
            try:
                overrides[key] = cast(raw)
            except ValueError as e:
                raise ValueError(f"{ENV_PREFIX}{key.upper()}={raw!r} is not valid: {e}") from e
        return overrides

    def settings(self) -> Settings:
        """Build the Settings object."""
        guards = self.config.get("guards", {}) or {}
        log_cfg = self.config.get("logging", {}) or {}

        values = {
            "max_subsets": guards.get("max_subsets", Settings.max_subsets),
            "max_generators": guards.get("max_generators", Settings.max_generators),
            "hilbert_scan_limit": guards.get("hilbert_scan_limit"),
            "log_level": log_cfg.get("level", Settings.log_level),
            "log_file": log_cfg.get("file"),
        }
        if self.use_env:
            values.update(self._env_overrides())

        settings = Settings(**values)
        validate_settings(settings)
        return settings


def validate_settings(settings: Settings):
    """Validate settings and log warnings for unusual values."""
    for name in ("max_subsets", "max_generators"):
        value = getattr(settings, name)
        if not isinstance(value, int) or isinstance(value, bool):
            raise ValueError(f"{name} must be an integer, got {value!r}")
        if value <= 0:
            raise ValueError(f"{name} must be positive, got {value}")

    limit = settings.hilbert_scan_limit
    if limit is not None and (not isinstance(limit, int) or limit <= 0):
        raise ValueError(f"hilbert_scan_limit must be a positive integer or null, got {limit!r}")

    if settings.max_subsets > 24:
        logger.warning(
            f"max_subsets={settings.max_subsets}: enumerating 2^{settings.max_subsets} subsets"
        )


def load_settings(config_path: str = None, use_env: bool = True) -> Settings:
    """
    Convenience function to load settings.

    Args:
        config_path: Optional path to a YAML settings file
        use_env: Apply environment overrides

    Returns:
        Settings object
    """
    return SettingsLoader(config_path, use_env=use_env).settings()


_current: Optional[Settings] = None


def get_settings() -> Settings:
    """Process-wide settings, loaded on first use."""
    global _current
    if _current is None:
        _current = load_settings()
    return _current
