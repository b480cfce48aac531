import json

import pytest

from fourierclt.config import (
    SweepConfig,
    apply_overrides,
    config_from_dict,
    load_sweep_config,
)
from fourierclt.errors import ConfigError
from fourierclt.grid import GridSpec


def _write(tmp_path, payload) -> object:
    path = tmp_path / "sweep.json"
    text = payload if isinstance(payload, str) else json.dumps(payload)
    path.write_text(text, encoding="utf-8")
    return path


def test_defaults():
    cfg = SweepConfig()
    assert cfg.distribution == "rademacher"
    assert cfg.s == 3.0
    assert cfg.a_values == (0.9, 0.99, 0.999)
    assert cfg.n_samples == 100_000
    assert cfg.trunc_tol == 1e-8
    assert cfg.seed == 0
    assert cfg.jobs == 1
    assert cfg.grid == GridSpec()


def test_load_full_config(tmp_path):
    path = _write(
        tmp_path,
        {
            "schema_version": 1,
            "distribution": "exponential",
            "s": 2.5,
            "a_values": [0.5, 0.9],
            "n_samples": 5000,
            "trunc_tol": 1e-10,
            "seed": 12,
            "grid": {"xi_min": 0.01, "xi_max": 50, "points": 101},
            "csv": "out.csv",
            "json": "out.json",
            "jobs": 2,
            "comment": "ignored",
        },
    )
    cfg = load_sweep_config(path)

    assert cfg.distribution == "exponential"
    assert cfg.a_values == (0.5, 0.9)
    assert cfg.n_samples == 5000
    assert cfg.grid == GridSpec(0.01, 50.0, 101)
    assert cfg.csv_path == "out.csv"
    assert cfg.json_path == "out.json"
    assert cfg.jobs == 2


def test_missing_file(tmp_path):
    with pytest.raises(ConfigError, match=r"not found"):
        load_sweep_config(tmp_path / "nope.json")


def test_corrupt_file(tmp_path):
    with pytest.raises(ConfigError, match=r"not valid JSON"):
        load_sweep_config(_write(tmp_path, "{oops"))


def test_non_object_file(tmp_path):
    with pytest.raises(ConfigError, match=r"JSON object"):
        load_sweep_config(_write(tmp_path, [1, 2]))


def test_schema_mismatch_warns(tmp_path, capsys):
    load_sweep_config(_write(tmp_path, {"schema_version": 7}))
    assert "schema_version=7" in capsys.readouterr().err


@pytest.mark.parametrize(
    ("payload", "match"),
    [
        ({"a_values": [0.9, 1.0]}, r"invalid a range"),
        ({"a_values": [0.0]}, r"invalid a range"),
        ({"a_values": [0.99, 0.9]}, r"strictly increasing"),
        ({"a_values": []}, r"must not be empty"),
        ({"a_values": 0.9}, r"must be a list"),
        ({"s": 3.5}, r"\[2, 3\]"),
        ({"s": "3"}, r"must be a number"),
        ({"n_samples": 10.5}, r"integer"),
        ({"n_samples": 0}, r"n_samples"),
        ({"trunc_tol": 2.0}, r"trunc_tol"),
        ({"jobs": 0}, r"jobs"),
        ({"distribution": "cauchy"}, r"unknown distribution"),
        ({"distribution": "student_t:1.5"}, r"nu > 2"),
        ({"distribution": "student_t:2.5", "s": 3.0}, r"no finite absolute moment"),
        ({"grid": {"points": 1}}, r"invalid grid"),
        ({"grid": [1, 2]}, r"grid must be"),
        ({"csv": 5}, r"path string"),
    ],
)
def test_invalid_values(payload, match):
    with pytest.raises(ConfigError, match=match):
        config_from_dict(payload)


def test_apply_overrides():
    cfg = SweepConfig()
    assert apply_overrides(cfg) is cfg
    assert apply_overrides(cfg, seed=None) is cfg

    updated = apply_overrides(cfg, seed=5, a_values=[0.5, 0.8], distribution="uniform")
    assert updated.seed == 5
    assert updated.a_values == (0.5, 0.8)
    assert updated.distribution == "uniform"
    assert cfg.seed == 0

    with pytest.raises(ConfigError, match=r"invalid a range"):
        apply_overrides(cfg, a_values=[1.5])
    with pytest.raises(ConfigError, match=r"unknown config setting"):
        apply_overrides(cfg, colour="red")


def test_to_dict_round_trips_computational_settings():
    cfg = SweepConfig(
        distribution="bernoulli:0.3",
        s=2.5,
        a_values=(0.5, 0.75),
        n_samples=1234,
        trunc_tol=1e-9,
        seed=9,
        grid=GridSpec(1e-2, 10.0, 50, 1e-7),
    )
    data = json.loads(json.dumps(cfg.to_dict()))

    assert config_from_dict(data) == cfg


def test_to_dict_leaves_out_execution_settings():
    data = SweepConfig(csv_path="x.csv", json_path="y.json", jobs=3).to_dict()
    assert "jobs" not in data
    assert "csv" not in data
    assert "csv_path" not in data
    assert "json_path" not in data
