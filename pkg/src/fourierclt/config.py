from __future__ import annotations

import json
import sys
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any

from fourierclt.constants import (
    CURRENT_SCHEMA_VERSION,
    DEFAULT_A_VALUES,
    DEFAULT_JOBS,
    DEFAULT_N_SAMPLES,
    DEFAULT_S,
    DEFAULT_SEED,
    DEFAULT_TRUNC_TOL,
)
from fourierclt.distributions import parse_distribution
from fourierclt.errors import ConfigError, DomainError
from fourierclt.grid import GridSpec

DEFAULT_DISTRIBUTION = "rademacher"


@dataclass(frozen=True)
class SweepConfig:
    distribution: str = DEFAULT_DISTRIBUTION
    s: float = DEFAULT_S
    a_values: tuple[float, ...] = DEFAULT_A_VALUES
    n_samples: int = DEFAULT_N_SAMPLES
    trunc_tol: float = DEFAULT_TRUNC_TOL
    seed: int = DEFAULT_SEED
    grid: GridSpec = field(default_factory=GridSpec)
    # execution-only settings; not part of the reproducible meta
    csv_path: str | None = None
    json_path: str | None = None
    jobs: int = DEFAULT_JOBS

    def __post_init__(self) -> None:
        if not self.a_values:
            raise ConfigError("a_values must not be empty")
        for a in self.a_values:
            if not 0.0 < a < 1.0:
                raise ConfigError(f"invalid a range: {a} is outside (0, 1)")
        if any(b <= a for a, b in zip(self.a_values, self.a_values[1:])):
            raise ConfigError("a_values must be strictly increasing")
        if not 2.0 <= self.s <= 3.0:
            raise ConfigError(f"s must lie in [2, 3], got {self.s}")
        if self.n_samples < 1:
            raise ConfigError(f"n_samples must be >= 1, got {self.n_samples}")
        if not 0.0 < self.trunc_tol < 1.0:
            raise ConfigError(f"trunc_tol must lie in (0, 1), got {self.trunc_tol}")
        if self.seed < 0:
            raise ConfigError(f"seed must be non-negative, got {self.seed}")
        if self.jobs < 1:
            raise ConfigError(f"jobs must be >= 1, got {self.jobs}")

        try:
            dist = parse_distribution(self.distribution)
        except DomainError as e:
            raise ConfigError(str(e))
        if self.s >= dist.abs_moment_order:
            raise ConfigError(
                f"{dist.name} has no finite absolute moment of order {self.s:g}; "
                f"pick s < {dist.abs_moment_order:g}"
            )

    def to_dict(self) -> dict[str, Any]:
        """Computational settings only; jobs and output paths never change results."""
        return {
            "distribution": self.distribution,
            "s": self.s,
            "a_values": list(self.a_values),
            "n_samples": self.n_samples,
            "trunc_tol": self.trunc_tol,
            "seed": self.seed,
            "grid": self.grid.to_dict(),
        }


def _number(data: dict[str, Any], key: str, kind: type, source: str) -> Any:
    value = data[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{key} must be a number in {source}")
    if kind is int:
        if isinstance(value, float) and not value.is_integer():
            raise ConfigError(f"{key} must be an integer in {source}")
        return int(value)
    return float(value)


def _grid_from(raw: Any, source: str) -> GridSpec:
    if not isinstance(raw, dict):
        raise ConfigError(f"grid must be a JSON object in {source}")
    kwargs: dict[str, Any] = {}
    for key, kind in (("xi_min", float), ("xi_max", float), ("points", int), ("refine_tol", float)):
        if key in raw:
            kwargs[key] = _number(raw, key, kind, source)
    try:
        return GridSpec(**kwargs)
    except DomainError as e:
        raise ConfigError(f"invalid grid in {source}: {e}")


def config_from_dict(data: dict[str, Any], source: str = "config") -> SweepConfig:
    kwargs: dict[str, Any] = {}

    if "distribution" in data:
        if not isinstance(data["distribution"], str):
            raise ConfigError(f"distribution must be a string in {source}")
        kwargs["distribution"] = data["distribution"]
    if "s" in data:
        kwargs["s"] = _number(data, "s", float, source)
    if "a_values" in data:
        raw = data["a_values"]
        if not isinstance(raw, list):
            raise ConfigError(f"a_values must be a list in {source}")
        kwargs["a_values"] = tuple(
            _number({"a_values": v}, "a_values", float, source) for v in raw
        )
    for key in ("n_samples", "seed", "jobs"):
        if key in data:
            kwargs[key] = _number(data, key, int, source)
    if "trunc_tol" in data:
        kwargs["trunc_tol"] = _number(data, "trunc_tol", float, source)
    if "grid" in data:
        kwargs["grid"] = _grid_from(data["grid"], source)
    for key, attr in (("csv", "csv_path"), ("json", "json_path")):
        value = data.get(key)
        if value is not None:
            if not isinstance(value, str):
                raise ConfigError(f"{key} must be a path string in {source}")
            kwargs[attr] = value

    return SweepConfig(**kwargs)


def load_sweep_config(path: Path) -> SweepConfig:
    if not path.exists():
        raise ConfigError(f"config file not found: {path}")

    try:
        raw_text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise ConfigError(f"failed to read config file: {path} ({e})")

    try:
        data = json.loads(raw_text)
    except json.JSONDecodeError as e:
        raise ConfigError(f"config file is not valid JSON: {path} ({e})")

    if not isinstance(data, dict):
        raise ConfigError(f"config file must be a JSON object: {path}")

    try:
        schema_version = int(data.get("schema_version", CURRENT_SCHEMA_VERSION))
    except (TypeError, ValueError) as e:
        raise ConfigError(f"invalid schema_version in config file: {path} ({e})")
    if schema_version != CURRENT_SCHEMA_VERSION:
        print(
            f"warning: config schema_version={schema_version}, expected {CURRENT_SCHEMA_VERSION}",
            file=sys.stderr,
        )

    return config_from_dict(data, source=str(path))


def apply_overrides(cfg: SweepConfig, **updates: Any) -> SweepConfig:
    """Return ``cfg`` with every non-None update applied; flags win over the file."""
    changes = {k: v for k, v in updates.items() if v is not None}
    if "a_values" in changes:
        changes["a_values"] = tuple(float(a) for a in changes["a_values"])
    if not changes:
        return cfg
    try:
        return replace(cfg, **changes)
    except TypeError as e:
        raise ConfigError(f"unknown config setting ({e})")
