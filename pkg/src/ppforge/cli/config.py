"""Flat ``key = value`` configuration."""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace
from pathlib import Path

from ..repsearch.search import ORDERS
from ..series import DIGITS_CAP


class ConfigError(ValueError):
    pass


def default_cache_path() -> str:
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return os.path.join(base, "ppforge", "values.txt")


@dataclass(frozen=True)
class Config:
    default_digits: int = 50
    digits_cap: int = 2000
    k_max_default: int = 13
    coeff_bound_default: int = 0  # 0: scale with the target
    cache_path: str = ""
    output_format: str = "text"
    scan_order: str = "sum"

    def __post_init__(self):
        if self.default_digits < 10:
            raise ConfigError("default_digits must be >= 10")
        if self.digits_cap < self.default_digits:
            raise ConfigError("digits_cap must be >= default_digits")
        if self.digits_cap > DIGITS_CAP:
            raise ConfigError(f"digits_cap must be <= {DIGITS_CAP}")
        if self.k_max_default < 5 or self.k_max_default % 2 == 0:
            raise ConfigError("k_max_default must be odd and >= 5")
        if self.coeff_bound_default < 0:
            raise ConfigError("coeff_bound_default must be >= 0")
        if self.output_format not in ("text", "json"):
            raise ConfigError("output_format must be text or json")
        if self.scan_order not in ORDERS:
            raise ConfigError(f"scan_order must be one of {', '.join(ORDERS)}")


_TYPES = {f.name: f.type for f in fields(Config)}


def parse_config(text: str, base: Config | None = None) -> Config:
    values = {}
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"config line {i}: expected key = value")
        key, value = (x.strip() for x in line.split("=", 1))
        if key not in _TYPES:
            raise ConfigError(f"config line {i}: unknown key {key!r}")
        if _TYPES[key] in (int, "int"):
            try:
                values[key] = int(value)
            except ValueError:
                raise ConfigError(f"config line {i}: {key} needs an integer") from None
        else:
            values[key] = value
    try:
        return replace(base or Config(), **values)
    except ConfigError as exc:
        raise ConfigError(f"config: {exc}") from None


def load_config(path: str | os.PathLike | None) -> Config:
    if path is None:
        return Config()
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc.strerror}") from None
    return parse_config(text)
