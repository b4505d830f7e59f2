"""Runtime settings: command-line flags > SATLAB_* environment > TOML file > defaults."""
from __future__ import annotations

import os
from pathlib import Path

DEFAULTS = {"max_n": 9, "jobs": 1}
ENV_PREFIX = "SATLAB_"

_overrides: dict[str, int] = {}


def _load_toml(path: Path) -> dict:
    try:
        import tomllib
    except ModuleNotFoundError:  # Python < 3.11
        import tomli as tomllib
    with open(path, "rb") as fh:
        data = tomllib.load(fh)
    return data.get("satlab", data)


def config_path() -> Path | None:
    explicit = os.environ.get(ENV_PREFIX + "CONFIG")
    if explicit:
        return Path(explicit)
    local = Path("satlab.toml")
    return local if local.is_file() else None


def setting(name: str) -> int:
    if name in _overrides:
        return _overrides[name]
    env = os.environ.get(ENV_PREFIX + name.upper())
    if env is not None:
        return int(env)
    path = config_path()
    if path is not None:
        file_cfg = _load_toml(path)
        if name in file_cfg:
            return int(file_cfg[name])
    return DEFAULTS[name]


def override(**values: int) -> None:
    """Apply command-line flag values (highest precedence)."""
    _overrides.update({k: v for k, v in values.items() if v is not None})


def clear_overrides() -> None:
    _overrides.clear()


def max_enumeration_order() -> int:
    return setting("max_n")
