"""
Configuration for mufgl: default truncation orders, verification ranges, logging
"""

import logging
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from errors import UsageError

logger = logging.getLogger(__name__)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


@dataclass(frozen=True)
class MufglConfig:
    """Defaults used when a command does not name an order or range explicitly"""

    # Truncation orders
    univariate_order: int = 10
    bivariate_order: int = 8

    # Verification ranges
    max_n: int = 10
    max_k: int = 12
    oracle_max_n: int = 8
    twist_max_n: int = 6
    symfunc_degree: int = 12
    roundtrip_order: int = 12

    # Logging and output
    log_level: str = "info"
    output_format: str = "text"

    def __post_init__(self):
        for name in ("univariate_order", "bivariate_order", "max_n", "max_k", "oracle_max_n",
                     "twist_max_n", "symfunc_degree", "roundtrip_order"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise ValueError(f"{name} must be a positive integer, got {value!r}")
        if self.output_format not in ("text", "json"):
            raise ValueError(f"output_format must be text or json, got {self.output_format!r}")
        if str(self.log_level).upper() not in LOG_LEVELS:
            raise ValueError(f"unknown log level {self.log_level!r}")


# YAML section -> {yaml key: config field}
YAML_LAYOUT = {
    "orders": {"univariate": "univariate_order", "bivariate": "bivariate_order",
               "roundtrip": "roundtrip_order"},
    "verify": {"max_n": "max_n", "max_k": "max_k", "oracle_max_n": "oracle_max_n",
               "twist_max_n": "twist_max_n", "symfunc_degree": "symfunc_degree"},
    "logging": {"level": "log_level"},
    "output": {"format": "output_format"},
}


def config_from_mapping(data: Dict[str, Any], base: Optional[MufglConfig] = None) -> MufglConfig:
    """Overlay a parsed YAML document onto `base`, ignoring unknown keys"""
    base = base or DEFAULT_CONFIG
    known = {f.name for f in fields(MufglConfig)}
    updates: Dict[str, Any] = {}
    for section, values in (data or {}).items():
        layout = YAML_LAYOUT.get(section)
        if layout is None or not isinstance(values, dict):
            logger.warning("Ignoring unknown configuration section %r", section)
            continue
        for key, value in values.items():
            target = layout.get(key)
            if target is None or target not in known:
                logger.warning("Ignoring unknown configuration key %s.%s", section, key)
                continue
            updates[target] = value
    return replace(base, **updates)


def load_config(path: Optional[str] = None) -> MufglConfig:
    if path is None:
        return DEFAULT_CONFIG
    config_path = Path(path)
    if not config_path.is_file():
        raise UsageError(f"configuration file not found: {path}")
    try:
        data = yaml.safe_load(config_path.read_text()) or {}
        config = config_from_mapping(data)
    except (yaml.YAMLError, ValueError, TypeError) as exc:
        raise UsageError(f"invalid configuration in {path}: {exc}") from exc
    logger.debug("Loaded configuration from %s", path)
    return config


# Default configuration instance
DEFAULT_CONFIG = MufglConfig()
