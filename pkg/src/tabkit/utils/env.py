import os
from typing import Optional, Tuple

from tabkit.exception import ConfigError


def read_from_env(attr_name, raise_exception=False):
    attr_value = os.environ.get(attr_name)
    if not attr_value and raise_exception:
        raise ConfigError(f"Unable to get config {attr_name}")
    return attr_value


def read_int_from_env(attr_name, default: Optional[int] = None) -> Optional[int]:
    attr_value = read_from_env(attr_name)
    if attr_value is None or not attr_value.strip():
        return default
    try:
        return int(attr_value)
    except ValueError:
        raise ConfigError(f"{attr_name} must be an integer, got {attr_value!r}")


def parse_pair(text: str, name: str = "value") -> Tuple[int, int]:
    """Parses `"D,E"` into a pair of integers."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 2:
        raise ConfigError(f"{name} must look like 'D,E', got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise ConfigError(f"{name} must hold two integers, got {text!r}")


def read_pair_from_env(attr_name, default: Tuple[int, int]) -> Tuple[int, int]:
    attr_value = read_from_env(attr_name)
    if not attr_value:
        return default
    return parse_pair(attr_value, attr_name)
