import json
import math

import pytest

from fourierclt import __version__
from fourierclt.errors import FourierCltError
from fourierclt.report import (
    FIELDS,
    BoundReport,
    build_meta,
    emit_report,
    render_csv,
    render_json,
)


def _row(**overrides) -> BoundReport:
    values = {
        "a": 0.99,
        "s": 3.0,
        "ds_F_Phi": 0.0753,
        "d2_measured": 0.001,
        "lemma2_bound": 0.002,
        "theorem3_bound": 0.006508,
        "kolmogorov_measured": 0.01,
        "gerber_bound": 0.54,
        "kolmogorov_from_d2": 0.50052,
        "n_samples": 1000,
        "seed": 0,
        "trunc_tol": 1e-8,
        "epsilon": 1e-7,
    }
    values.update(overrides)
    return BoundReport(**values)


def test_csv_header_follows_field_order():
    text = render_csv([_row()])
    lines = text.splitlines()

    assert len(lines) == 2
    assert lines[0].split(",") == list(FIELDS)
    assert FIELDS[0] == "a"
    assert FIELDS[-1] == "epsilon"
    assert text.endswith("\n")
    assert "\r" not in text


def test_csv_uses_round_trip_floats():
    line = render_csv([_row(a=0.1, trunc_tol=1e-8)]).splitlines()[1].split(",")
    assert line[0] == "0.1"
    assert float(line[FIELDS.index("trunc_tol")]) == 1e-8
    assert line[FIELDS.index("n_samples")] == "1000"


def test_unavailable_bounds():
    row = _row(gerber_bound=None, theorem3_bound=None)
    cells = render_csv([row]).splitlines()[1].split(",")
    assert cells[FIELDS.index("gerber_bound")] == "unavailable"
    assert cells[FIELDS.index("theorem3_bound")] == "unavailable"

    payload = json.loads(render_json([row], build_meta({})))
    assert payload["rows"][0]["gerber_bound"] is None


def test_json_meta():
    meta = build_meta({"seed": 3})
    payload = json.loads(render_json([_row()], meta))

    assert payload["meta"]["tool"] == "fourierclt"
    assert payload["meta"]["version"] == __version__
    assert payload["meta"]["schema_version"] == 1
    assert payload["meta"]["config"] == {"seed": 3}
    assert payload["rows"][0]["a"] == 0.99


def test_json_rejects_non_finite_values():
    with pytest.raises(FourierCltError, match=r"non-finite"):
        render_json([_row(d2_measured=math.nan)], build_meta({}))


def test_emit_report_is_byte_stable(tmp_path):
    rows = [_row(a=0.9), _row(a=0.99)]
    meta = build_meta({"seed": 0})

    first = emit_report(rows, "json", tmp_path / "a.json", meta)
    second = emit_report(rows, "json", tmp_path / "b.json", meta)
    assert first.read_bytes() == second.read_bytes()

    csv_a = emit_report(rows, "csv", tmp_path / "a.csv")
    csv_b = emit_report(rows, "csv", tmp_path / "sub" / "b.csv")
    assert csv_a.read_bytes() == csv_b.read_bytes()


def test_emit_report_errors(tmp_path):
    with pytest.raises(FourierCltError, match=r"no report rows"):
        emit_report([], "csv", tmp_path / "x.csv")
    with pytest.raises(FourierCltError, match=r"unknown report format"):
        emit_report([_row()], "xml", tmp_path / "x.xml")  # type: ignore[arg-type]


def test_emit_report_wraps_io_failures(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x", encoding="utf-8")
    with pytest.raises(FourierCltError, match=r"failed to write report"):
        emit_report([_row()], "csv", blocker / "report.csv")


def test_chain_holds():
    assert _row().chain_holds()
    assert not _row(d2_measured=0.01).chain_holds()
    assert not _row(lemma2_bound=0.007, d2_measured=0.001).chain_holds()
    assert _row(theorem3_bound=None).chain_holds()
