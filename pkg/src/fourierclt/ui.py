"""Terminal output: colored status lines on stdout, progress lines on stderr.

Colors are applied only when stdout is a TTY, so redirected output and the
report files stay byte-stable.
"""

from __future__ import annotations

import sys
import time
from typing import Sequence


class Colors:
    RED = "\033[91m"
    GREEN = "\033[92m"
    YELLOW = "\033[93m"
    CYAN = "\033[96m"
    BOLD = "\033[1m"
    DIM = "\033[2m"
    RESET = "\033[0m"


MARK_OK = "✓"
MARK_FAIL = "✗"
MARK_WARN = "⚠"

_LABEL_WIDTH = 22
_CELL_WIDTH = 19


def paint(text: str, *styles: str) -> str:
    if not sys.stdout.isatty():
        return text
    return "".join(styles) + text + Colors.RESET


def _mark(ok: bool | None) -> str:
    if ok is None:
        return paint(MARK_WARN, Colors.YELLOW)
    return paint(MARK_OK, Colors.GREEN) if ok else paint(MARK_FAIL, Colors.RED)


def header(title: str) -> None:
    print(f"\n{paint(title, Colors.BOLD)}\n")


def subheader(title: str) -> None:
    print(f"\n{paint(title, Colors.BOLD)}")


def status_line(label: str, value: str) -> None:
    print(f"  {label + ':':<{_LABEL_WIDTH}} {value}")


def status_ok(label: str, value: str) -> None:
    status_line(label, f"{_mark(True)} {value}")


def status_warn(label: str, value: str) -> None:
    status_line(label, f"{_mark(None)} {value}")


def check_item(ok: bool, text: str) -> None:
    print(f"  {_mark(ok)} {text}")


def summary(failures: int) -> None:
    if failures == 0:
        print(f"\n{_mark(True)} All checks passed")
    else:
        print(f"\n{_mark(False)} {failures} check(s) failed")


def fmt(value: float | int | None, digits: int = 6) -> str:
    if value is None:
        return paint("unavailable", Colors.DIM)
    return f"{value:.{digits}g}"


def table(columns: Sequence[str], rows: Sequence[Sequence[float | int | None]]) -> None:
    """Right-aligned numeric table; None renders as a dim "unavailable"."""
    print("  " + "  ".join(f"{c:>{_CELL_WIDTH}}" for c in columns))
    for row in rows:
        print("  " + "  ".join(f"{fmt(v):>{_CELL_WIDTH}}" for v in row))


def log(message: str) -> None:
    """Timestamped progress line on stderr."""
    ts = time.strftime("%Y-%m-%d %H:%M:%S")
    print(f"[{ts}] {message}", file=sys.stderr, flush=True)
