from __future__ import annotations

import json
import sys
from dataclasses import replace
from pathlib import Path
from typing import Any, Callable

import numpy as np
from scipy import special

from fourierclt import __version__, ui
from fourierclt.charfn import discounted_product_cf, from_distribution
from fourierclt.config import SweepConfig, apply_overrides, load_sweep_config
from fourierclt.constants import (
    DEFAULT_CSV_NAME,
    DEFAULT_JOBS,
    DEFAULT_JSON_NAME,
    DEFAULT_N_SAMPLES,
    DEFAULT_S,
    DEFAULT_SEED,
    DEFAULT_TRUNC_TOL,
)
from fourierclt.discounted import SimConfig, simulate
from fourierclt.distributions import parse_distribution
from fourierclt.errors import ConfigError, DomainError, FourierCltError, UsageError
from fourierclt.fs import atomic_write_text, resolve_output_path
from fourierclt.grid import GridSpec, standard_grid
from fourierclt.help import show_command_help, show_main_help
from fourierclt.metrics import dkw_radius, fourier_distance, kolmogorov_distance
from fourierclt.report import BoundReport, build_meta, emit_report
from fourierclt.sweep import run_sweep
from fourierclt.verify import run_verification


def _has_help_flag(args: list[str]) -> bool:
    return "-h" in args or "--help" in args


def _float_list(text: str) -> list[float]:
    return [float(part) for part in text.split(",") if part.strip()]


_GRID_FLAGS: dict[str, tuple[str, Callable[[str], Any]]] = {
    "--xi-min": ("xi_min", float),
    "--xi-max": ("xi_max", float),
    "--grid-points": ("points", int),
    "--refine-tol": ("refine_tol", float),
}

# flag -> (args key, converter) per command
_FLAGS: dict[str, dict[str, tuple[str, Callable[[str], Any]]]] = {
    "sweep": {
        "--config": ("config", str),
        "--dist": ("distribution", str),
        "--s": ("s", float),
        "--a-values": ("a_values", _float_list),
        "--n-samples": ("n_samples", int),
        "--trunc-tol": ("trunc_tol", float),
        "--seed": ("seed", int),
        "--jobs": ("jobs", int),
        "--csv": ("csv_path", str),
        "--json": ("json_path", str),
        **_GRID_FLAGS,
    },
    "metric": {
        "--dist": ("distribution", str),
        "--against": ("against", str),
        "--s": ("s", float),
        "--a": ("a", float),
        "--trunc-tol": ("trunc_tol", float),
        "--json": ("json_path", str),
        **_GRID_FLAGS,
    },
    "simulate": {
        "--dist": ("distribution", str),
        "--a": ("a", float),
        "--n-samples": ("n_samples", int),
        "--method": ("method", str),
        "--steps": ("steps", int),
        "--initial": ("initial", str),
        "--trunc-tol": ("trunc_tol", float),
        "--seed": ("seed", int),
        "--jobs": ("jobs", int),
        "--output": ("output", str),
    },
    "verify": {},
}


def _parse_args(argv: list[str]) -> tuple[str | None, dict]:
    """Simple argument parser.

    Returns (command, args_dict). Help requests come back as command "_help"
    with the command name under "_help_context".
    """
    args: dict = {}

    if not argv:
        return None, args

    if "--version" in argv or "-V" in argv:
        print(f"fourierclt {__version__}")
        sys.exit(0)

    if _has_help_flag(argv):
        rest = [a for a in argv if a not in ("-h", "--help")]
        args["_help_context"] = rest[0] if rest else None
        return "_help", args

    if argv[0] == "help":
        args["_help_context"] = argv[1] if len(argv) > 1 else None
        return "_help", args

    cmd = argv[0]
    if cmd not in _FLAGS:
        raise UsageError(f"unknown command: {cmd} (run 'fourierclt --help')")

    flags = _FLAGS[cmd]
    rest = argv[1:]
    i = 0
    while i < len(rest):
        token = rest[i]
        if token not in flags:
            if token.startswith("-"):
                raise UsageError(
                    f"unknown flag for {cmd}: {token} (run 'fourierclt {cmd} --help')"
                )
            raise UsageError(
                f"unexpected argument for {cmd}: {token} (run 'fourierclt {cmd} --help')"
            )
        if i + 1 >= len(rest):
            raise UsageError(f"{token} requires a value")
        key, convert = flags[token]
        try:
            args[key] = convert(rest[i + 1])
        except ValueError:
            raise UsageError(f"invalid value for {token}: {rest[i + 1]}")
        i += 2

    return cmd, args


def _grid_from_args(args: dict, base: GridSpec) -> GridSpec:
    changes = {key: args[key] for key, _ in _GRID_FLAGS.values() if key in args}
    if not changes:
        return base
    try:
        return replace(base, **changes)
    except DomainError as e:
        raise ConfigError(str(e))


_TABLE_COLUMNS = (
    "a",
    "d2_measured",
    "lemma2_bound",
    "theorem3_bound",
    "kolmogorov_measured",
    "gerber_bound",
    "kolmogorov_from_d2",
)


def _print_rows(rows: list[BoundReport]) -> None:
    ui.subheader("Bounds")
    ui.table(_TABLE_COLUMNS, [[getattr(r, c) for c in _TABLE_COLUMNS] for r in rows])
    print()


def _cmd_sweep(args: dict) -> int:
    config_path = args.get("config")
    cfg = load_sweep_config(Path(config_path)) if config_path else SweepConfig()
    cfg = apply_overrides(
        cfg,
        distribution=args.get("distribution"),
        s=args.get("s"),
        a_values=args.get("a_values"),
        n_samples=args.get("n_samples"),
        trunc_tol=args.get("trunc_tol"),
        seed=args.get("seed"),
        jobs=args.get("jobs"),
        csv_path=args.get("csv_path"),
        json_path=args.get("json_path"),
        grid=_grid_from_args(args, cfg.grid),
    )

    ui.header(f"Discounted CLT sweep: {cfg.distribution}")
    ui.status_line("s", f"{cfg.s:g}")
    ui.status_line("a values", ", ".join(f"{a:g}" for a in cfg.a_values))
    ui.status_line("samples", str(cfg.n_samples))

    rows = run_sweep(cfg)
    _print_rows(rows)

    failed = [r.a for r in rows if not r.chain_holds()]
    if failed:
        ui.status_warn("bound ordering", "violated at a = " + ", ".join(f"{a:g}" for a in failed))
    else:
        ui.status_ok("bound ordering", "d2 <= lemma2 <= theorem3 within error estimates")

    if cfg.csv_path is not None:
        path = emit_report(rows, "csv", resolve_output_path(cfg.csv_path, DEFAULT_CSV_NAME))
        ui.status_ok("csv", str(path))
    if cfg.json_path is not None:
        meta = build_meta(cfg.to_dict())
        path = emit_report(rows, "json", resolve_output_path(cfg.json_path, DEFAULT_JSON_NAME), meta)
        ui.status_ok("json", str(path))
    return 0


def _cmd_metric(args: dict) -> int:
    if "distribution" not in args:
        raise UsageError("metric requires --dist (run 'fourierclt metric --help')")

    g_dist = parse_distribution(args["distribution"])
    h_dist = parse_distribution(args.get("against", "normal"))
    s = float(args.get("s", DEFAULT_S))
    for dist in (g_dist, h_dist):
        if s >= dist.abs_moment_order:
            raise DomainError(
                f"d_{s:g} is infinite for {dist.name}: no finite absolute moment of order {s:g}"
            )

    grid = _grid_from_args(args, standard_grid())
    g = from_distribution(g_dist)
    label = g_dist.name
    a = args.get("a")
    trunc_tol = float(args.get("trunc_tol", DEFAULT_TRUNC_TOL))
    if a is not None:
        g = discounted_product_cf(g, a, trunc_tol)
        label = f"{g_dist.name} (a={a:g})"

    result = fourier_distance(g, from_distribution(h_dist), s, grid)

    ui.header(f"d_{s:g}({label}, {h_dist.name})")
    ui.status_line("value", f"{result.value:.10g}")
    ui.status_line("argmax xi", f"{result.argmax_xi:.6g}")
    ui.status_line("error estimate", f"{result.error_estimate:.3g}")
    ui.status_line("grid points", str(result.grid_points))
    ui.status_line("refinement steps", str(result.refinement_steps))

    json_path = args.get("json_path")
    if json_path is not None:
        meta = build_meta(
            {
                "distribution": g_dist.name,
                "against": h_dist.name,
                "s": s,
                "a": a,
                "trunc_tol": trunc_tol,
                "grid": grid.to_dict(),
            }
        )
        text = json.dumps({"meta": meta, "result": result.to_dict()}, indent=2, sort_keys=True)
        path = resolve_output_path(json_path, DEFAULT_JSON_NAME)
        try:
            atomic_write_text(path, text + "\n")
        except OSError as e:
            raise FourierCltError(f"failed to write result: {path} ({e})")
        ui.status_ok("json", str(path))
    print()
    return 0


def _cmd_simulate(args: dict) -> int:
    if "distribution" not in args or "a" not in args:
        raise UsageError("simulate requires --dist and --a (run 'fourierclt simulate --help')")

    dist = parse_distribution(args["distribution"])
    cfg = SimConfig(
        a=args["a"],
        n_samples=int(args.get("n_samples", DEFAULT_N_SAMPLES)),
        trunc_tol=float(args.get("trunc_tol", DEFAULT_TRUNC_TOL)),
        seed=int(args.get("seed", DEFAULT_SEED)),
        method=args.get("method", "direct_truncation"),
        steps=int(args.get("steps", 0)),
        initial=args.get("initial", "normal"),
    )
    jobs = int(args.get("jobs", DEFAULT_JOBS))
    if jobs < 1:
        raise ConfigError(f"jobs must be >= 1, got {jobs}")

    samples = simulate(dist, cfg, jobs=jobs)
    km = kolmogorov_distance(samples, special.ndtr)

    ui.header(f"Discounted sum of {dist.name}, a={cfg.a:g}")
    ui.status_line("method", cfg.method)
    ui.status_line("samples", str(samples.size))
    ui.status_line("mean", f"{float(np.mean(samples)):.6g}")
    ui.status_line("variance", f"{float(np.var(samples)):.6g}")
    ui.status_line("kolmogorov to Phi", f"{km:.6g}")
    ui.status_line("DKW radius (99%)", f"{dkw_radius(samples.size):.6g}")

    output = args.get("output")
    if output is not None:
        path = resolve_output_path(output, "samples.csv")
        text = "x\n" + "".join(f"{v!r}\n" for v in samples.tolist())
        try:
            atomic_write_text(path, text)
        except OSError as e:
            raise FourierCltError(f"failed to write samples: {path} ({e})")
        ui.status_ok("samples", str(path))
    print()
    return 0


def _report_error(e: BaseException, exit_code: int) -> None:
    message = str(e)
    print(f"error: {message}", file=sys.stderr)
    record = {"error": message, "kind": type(e).__name__, "exit_code": exit_code}
    print(json.dumps(record, sort_keys=True), file=sys.stderr)


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)

    try:
        cmd, args = _parse_args(argv)

        if cmd is None:
            show_main_help()
            return 0

        if cmd == "_help":
            context = args.get("_help_context")
            if context:
                show_command_help(context)
            else:
                show_main_help()
            return 0

        if cmd == "sweep":
            return _cmd_sweep(args)
        if cmd == "metric":
            return _cmd_metric(args)
        if cmd == "simulate":
            return _cmd_simulate(args)
        if cmd == "verify":
            return run_verification()

        raise UsageError(f"unknown command: {cmd}")

    except UsageError as e:
        _report_error(e, 2)
        return 2
    except FourierCltError as e:
        _report_error(e, 1)
        return 1
    except Exception as e:
        _report_error(e, 1)
        return 1

