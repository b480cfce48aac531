from __future__ import annotations

import os
import uuid
from pathlib import Path

from fourierclt.constants import OUTPUT_DIR_ENV


def output_dir() -> Path:
    raw = os.environ.get(OUTPUT_DIR_ENV, "").strip()
    return Path(raw) if raw else Path.cwd()


def resolve_output_path(path: str | Path | None, default_name: str) -> Path:
    """Resolve a report path; relative paths land in the output directory."""
    if path is None or str(path) == "":
        return output_dir() / default_name
    p = Path(path)
    if p.is_absolute():
        return p
    return output_dir() / p


def atomic_write_text(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)

    tmp = path.with_name(f".{path.name}.{uuid.uuid4().hex}.tmp")

    try:
        # newline="" keeps CSV line endings identical across platforms
        with open(tmp, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    finally:
        try:
            tmp.unlink()
        except FileNotFoundError:
            pass
