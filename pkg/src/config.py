"""Configuration loader for grobfan."""

from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

PRETEST_MODES = ("none", "quick", "full")
ALGORITHMS = ("reverse-search", "bfs", "symmetric-bfs")


class AlgebraConfig(BaseSettings):
    """Polynomial arithmetic and Buchberger settings."""

    reduction_step_limit: int = Field(default=2 ** 20, alias="GROBFAN_REDUCTION_STEP_LIMIT")
    chain_criterion: bool = Field(default=False, alias="GROBFAN_CHAIN_CRITERION")

    model_config = SettingsConfigDict(env_file=".env", extra="allow")

    @field_validator("reduction_step_limit")
    @classmethod
    def _positive_limit(cls, value: int) -> int:
        if value <= 0:
            raise ValueError("GROBFAN_REDUCTION_STEP_LIMIT must be positive")
        return value


class FanConfig(BaseSettings):
    """Fan traversal settings."""

    group_element_cap: int = Field(default=10 ** 6, alias="GROBFAN_GROUP_ELEMENT_CAP")
    facet_pretest: str = Field(default="quick", alias="GROBFAN_FACET_PRETEST")
    default_algorithm: str = Field(default="reverse-search", alias="GROBFAN_DEFAULT_ALGORITHM")

    model_config = SettingsConfigDict(env_file=".env", extra="allow")

    @field_validator("facet_pretest")
    @classmethod
    def _known_pretest(cls, value: str) -> str:
        if value not in PRETEST_MODES:
            raise ValueError(f"GROBFAN_FACET_PRETEST must be one of {PRETEST_MODES}")
        return value

    @field_validator("default_algorithm")
    @classmethod
    def _known_algorithm(cls, value: str) -> str:
        if value not in ALGORITHMS:
            raise ValueError(f"GROBFAN_DEFAULT_ALGORITHM must be one of {ALGORITHMS}")
        return value


class AppConfig(BaseSettings):
    """Application configuration."""

    app_name: str = Field(default="grobfan", alias="GROBFAN_APP_NAME")
    environment: str = Field(default="development", alias="GROBFAN_ENVIRONMENT")
    log_level: str = Field(default="WARNING", alias="GROBFAN_LOG_LEVEL")
    log_file: Optional[str] = Field(default=None, alias="GROBFAN_LOG_FILE")
    log_json: bool = Field(default=False, alias="GROBFAN_LOG_JSON")

    model_config = SettingsConfigDict(env_file=".env", extra="allow")


class Config:
    """Main configuration class that loads all settings."""

    def __init__(self, config_path: Optional[Path] = None):
        """
        Initialize configuration.

        Args:
            config_path: Path to config.yaml file. Defaults to ./config.yaml
        """
        self.config_path = config_path or Path("config.yaml")

        # Load environment-based configs
        self.algebra = AlgebraConfig()
        self.fan = FanConfig()
        self.app = AppConfig()

        # Load YAML config
        self.yaml_config = self._load_yaml_config()

    def _load_yaml_config(self) -> Dict[str, Any]:
        """Load configuration from YAML file."""
        if not self.config_path.exists():
            return {}

        with open(self.config_path, "r", encoding="utf-8") as f:
            return yaml.safe_load(f) or {}

    def get(self, key: str, default: Any = None) -> Any:
        """
        Get configuration value from YAML.

        Args:
            key: Dot-separated key path (e.g., "render.canvas_size")
            default: Default value if key not found

        Returns:
            Configuration value
        """
        keys = key.split(".")
        value = self.yaml_config

        for k in keys:
            if isinstance(value, dict):
                value = value.get(k)
            else:
                return default

        return value if value is not None else default

    def validate(self) -> bool:
        """
        Validate cross-field settings.

        Returns:
            True if valid, raises ValueError otherwise
        """
        if self.fan.group_element_cap < 1:
            raise ValueError("GROBFAN_GROUP_ELEMENT_CAP must be at least 1")

        canvas = self.get("render.canvas_size", 600)
        if not isinstance(canvas, int) or canvas <= 0:
            raise ValueError("render.canvas_size must be a positive integer")

        output = self.get("output.default_format", "text")
        if output not in ("text", "json"):
            raise ValueError("output.default_format must be 'text' or 'json'")

        return True

    def __repr__(self) -> str:
        """String representation of config."""
        return (
            f"Config(\n"
            f"  Reduction step limit: {self.algebra.reduction_step_limit}\n"
            f"  Facet pretest: {self.fan.facet_pretest}\n"
            f"  Default algorithm: {self.fan.default_algorithm}\n"
            f"  Environment: {self.app.environment}\n"
            f")"
        )


# Global config instance
_config: Optional[Config] = None


def get_config() -> Config:
    """
    Get global configuration instance (singleton).

    Returns:
        Config instance
    """
    global _config
    if _config is None:
        _config = Config()
        _config.validate()
    return _config


def reload_config(config_path: Optional[Path] = None) -> Config:
    """
    Reload configuration from files.

    Args:
        config_path: Optional alternative YAML file

    Returns:
        New Config instance
    """
    global _config
    _config = Config(config_path)
    _config.validate()
    return _config


if __name__ == "__main__":
    config = get_config()
    print(config)
