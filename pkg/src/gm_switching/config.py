from __future__ import annotations

from dataclasses import asdict, dataclass
import os
from pathlib import Path

import yaml

from gm_switching.errors import ConfigError

DEFAULT_THREADS = os.cpu_count() or 1
DEFAULT_MAX_SET_SIZE = 4
DEFAULT_SEED = 20240501
DEFAULT_SWEEP_GRAPHS = 200
THREADS_ENV_VAR = "GM_THREADS"
MAX_SET_SIZE_ENV_VAR = "GM_MAX_SET_SIZE"
SEED_ENV_VAR = "GM_SEED"
SWEEP_GRAPHS_ENV_VAR = "GM_SWEEP_GRAPHS"
CONFIG_DIR_NAME = "gm-switching"
CONFIG_FILE_NAME = "config.yaml"


@dataclass(frozen=True)
class Config:
    threads: int
    max_set_size: int
    seed: int
    sweep_graphs: int


@dataclass(frozen=True)
class PersistentConfig:
    threads: int | None = None
    max_set_size: int | None = None
    seed: int | None = None
    sweep_graphs: int | None = None


def load_config(
    threads: int | None = None,
    max_set_size: int | None = None,
    seed: int | None = None,
    sweep_graphs: int | None = None,
) -> Config:
    persistent = load_persistent_config() or PersistentConfig()
    config = Config(
        threads=_first(threads, _env_int(THREADS_ENV_VAR), persistent.threads, DEFAULT_THREADS),
        max_set_size=_first(
            max_set_size, _env_int(MAX_SET_SIZE_ENV_VAR), persistent.max_set_size, DEFAULT_MAX_SET_SIZE
        ),
        seed=_first(seed, _env_int(SEED_ENV_VAR), persistent.seed, DEFAULT_SEED),
        sweep_graphs=_first(
            sweep_graphs, _env_int(SWEEP_GRAPHS_ENV_VAR), persistent.sweep_graphs, DEFAULT_SWEEP_GRAPHS
        ),
    )
    if config.threads < 1:
        raise ConfigError(f"threads must be at least 1, got {config.threads}")
    if config.max_set_size < 2:
        raise ConfigError(f"max_set_size must be at least 2, got {config.max_set_size}")
    return config


def _first(*values: int | None) -> int:
    for value in values:
        if value is not None:
            return value
    raise ConfigError("no configuration value resolved")


def _env_int(name: str) -> int | None:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return None
    try:
        return int(raw)
    except ValueError as exc:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from exc


def config_path() -> Path:
    base_dir = os.getenv("XDG_CONFIG_HOME")
    if base_dir:
        return Path(base_dir) / CONFIG_DIR_NAME / CONFIG_FILE_NAME
    return Path.home() / ".config" / CONFIG_DIR_NAME / CONFIG_FILE_NAME


def load_persistent_config() -> PersistentConfig | None:
    path = config_path()
    if not path.exists():
        return None
    data = yaml.safe_load(path.read_text(encoding="utf-8"))
    if not isinstance(data, dict):
        return None
    return PersistentConfig(
        threads=_yaml_int(data, "threads"),
        max_set_size=_yaml_int(data, "max_set_size"),
        seed=_yaml_int(data, "seed"),
        sweep_graphs=_yaml_int(data, "sweep_graphs"),
    )


def _yaml_int(data: dict[str, object], key: str) -> int | None:
    value = data.get(key)
    if value is None:
        return None
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{config_path()}: {key} must be an integer, got {value!r}")
    return value


def save_persistent_config(config: PersistentConfig) -> None:
    path = config_path()
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(yaml.safe_dump(asdict(config), sort_keys=False), encoding="utf-8")
