from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Any, Literal, Sequence

from fourierclt import __version__
from fourierclt.constants import APP_NAME, CURRENT_SCHEMA_VERSION
from fourierclt.errors import FourierCltError
from fourierclt.fs import atomic_write_text

ReportFormat = Literal["csv", "json"]

UNAVAILABLE = "unavailable"


@dataclass(frozen=True)
class BoundReport:
    a: float
    s: float
    ds_F_Phi: float
    d2_measured: float
    lemma2_bound: float
    theorem3_bound: float | None
    kolmogorov_measured: float
    gerber_bound: float | None
    kolmogorov_from_d2: float
    n_samples: int
    seed: int
    trunc_tol: float
    # aggregated error estimate for the ordering checks
    epsilon: float

    def chain_holds(self) -> bool:
        """d2_measured <= lemma2_bound + eps (<= theorem3_bound + eps when available)."""
        if self.d2_measured > self.lemma2_bound + self.epsilon:
            return False
        if self.theorem3_bound is not None:
            return self.lemma2_bound <= self.theorem3_bound + self.epsilon
        return True


FIELDS: tuple[str, ...] = tuple(f.name for f in fields(BoundReport))


def _csv_cell(value: Any) -> str:
    if value is None:
        return UNAVAILABLE
    if isinstance(value, float):
        return repr(value)
    return str(value)


def render_csv(rows: Sequence[BoundReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(FIELDS)
    for row in rows:
        data = asdict(row)
        writer.writerow([_csv_cell(data[name]) for name in FIELDS])
    return buf.getvalue()


def build_meta(config: dict[str, Any]) -> dict[str, Any]:
    return {
        "tool": APP_NAME,
        "version": __version__,
        "schema_version": CURRENT_SCHEMA_VERSION,
        "config": config,
    }


def render_json(rows: Sequence[BoundReport], meta: dict[str, Any]) -> str:
    payload = {"meta": meta, "rows": [asdict(r) for r in rows]}
    try:
        text = json.dumps(payload, indent=2, sort_keys=True, allow_nan=False)
    except ValueError as e:
        raise FourierCltError(f"report contains non-finite values ({e})")
    return text + "\n"


def emit_report(
    rows: Sequence[BoundReport],
    fmt: ReportFormat,
    path: Path,
    meta: dict[str, Any] | None = None,
) -> Path:
    if not rows:
        raise FourierCltError("no report rows to write")

    if fmt == "csv":
        text = render_csv(rows)
    elif fmt == "json":
        text = render_json(rows, meta or build_meta({}))
    else:
        raise FourierCltError(f"unknown report format: {fmt} (expected csv or json)")

    try:
        atomic_write_text(path, text)
    except OSError as e:
        raise FourierCltError(f"failed to write report: {path} ({e})")
    return path
