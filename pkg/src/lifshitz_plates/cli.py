"""Command-line front end.

    lifshitz-plates energy|pressure|entropy|sweep|verify|nernst
        [--config FILE] [--set key=value ...] [--format csv|json] [--out PATH]

The table commands emit one row per (a, T) pair with a fixed column order
and 17-significant-digit floats, so identical configs produce
byte-identical output.  Exit codes: 0 ok, 1 verification failure,
2 configuration error, 3 numerical failure (partial rows are still
flushed, marked in the method column).

The only environment variable honored is LIFSHITZ_PLATES_OUTDIR, which
redirects the directory part of --out / output.path.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import csv
import io
import json
import math
import os
import sys
from pathlib import Path
from typing import Optional

from .acceptance import CRITERIA, run_criteria
from .config import RunConfig, build_run_config, parse_config_file, parse_overrides
from .errors import ConfigError, LifshitzError
from .permittivity import Model
from .thermo import ThermoSettings, full_report, nernst_diagnose
from .units import PlateConfig, tau_from

COLUMNS = ["a_m", "T_K", "tau", "E_Jm2", "dF_Jm2", "F_Jm2", "P0_Pa", "dP_Pa",
           "P_Pa", "S_JKm2", "err_F", "err_P", "err_S", "method"]

ENV_OUTDIR = "LIFSHITZ_PLATES_OUTDIR"

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3


def _format_float(value: float) -> str:
    return format(value, ".17g")


def _compute_row(task: tuple[Model, float, float, ThermoSettings]) -> dict:
    """One (a, T) table row; numerical failures are captured, not raised."""
    model, a, T, settings = task
    row = {"a_m": a, "T_K": T, "tau": tau_from(a, T)}
    try:
        report = full_report(model, PlateConfig(a, T), settings)
    except LifshitzError as exc:
        for key in COLUMNS[3:-1]:
            row[key] = math.nan
        row["method"] = f"FAILED:{type(exc).__name__}"
        return row
    row.update({
        "E_Jm2": report.E, "dF_Jm2": report.dF, "F_Jm2": report.F,
        "P0_Pa": report.P0, "dP_Pa": report.dP, "P_Pa": report.P,
        "S_JKm2": report.S,
        "err_F": report.error["F"], "err_P": report.error["P"],
        "err_S": report.error["S"],
        "method": (f"dF={report.method['dF']};dP={report.method['dP']};"
                   f"S={report.method['S']}"),
    })
    return row


def _rows_for(config: RunConfig) -> list[dict]:
    tasks = [(config.model, a, T, config.thermo)
             for a in config.a_values
             for T in sorted(config.T_values)]
    if config.workers > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=config.workers) as pool:
            return list(pool.map(_compute_row, tasks))
    return [_compute_row(task) for task in tasks]


def _render_csv(rows: list[dict]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(COLUMNS)
    for row in rows:
        writer.writerow([
            row[c] if c == "method" else _format_float(row[c]) for c in COLUMNS
        ])
    return buffer.getvalue()


def _render_json(rows: list[dict]) -> str:
    def clean(value):
        if isinstance(value, float) and math.isnan(value):
            return None
        return value

    payload = [{c: clean(row[c]) for c in COLUMNS} for row in rows]
    return json.dumps(payload, indent=2) + "\n"


def _resolve_out_path(path: Optional[str]) -> Optional[Path]:
    if path is None:
        return None
    resolved = Path(path)
    outdir = os.environ.get(ENV_OUTDIR)
    if outdir:
        resolved = Path(outdir) / resolved.name
    return resolved


def _emit(text: str, path: Optional[str]) -> None:
    resolved = _resolve_out_path(path)
    if resolved is None:
        sys.stdout.write(text)
        return
    resolved.parent.mkdir(parents=True, exist_ok=True)
    resolved.write_text(text)
    print(f"wrote {resolved}")


def _cmd_table(config: RunConfig) -> int:
    rows = _rows_for(config)
    text = _render_csv(rows) if config.out_format == "csv" else _render_json(rows)
    _emit(text, config.out_path)
    failed = any(str(row["method"]).startswith("FAILED") for row in rows)
    return EXIT_NUMERICAL if failed else EXIT_OK


def _cmd_verify(config: RunConfig) -> int:
    names = list(config.criteria) if config.criteria is not None else None
    if names is not None:
        unknown = [n for n in names if n not in CRITERIA]
        if unknown:
            raise ConfigError(f"unknown verify criteria: {', '.join(unknown)}")
    results = run_criteria(names)
    for result in results:
        print(result.line())
    if config.out_path is not None:
        payload = [{"name": r.name, "description": r.description,
                    "measured": r.measured, "reference": r.reference,
                    "tolerance": r.tolerance, "passed": r.passed,
                    "details": r.details} for r in results]
        if config.out_format == "json":
            text = json.dumps(payload, indent=2) + "\n"
        else:
            buffer = io.StringIO()
            writer = csv.DictWriter(buffer, fieldnames=list(payload[0]),
                                    lineterminator="\n")
            writer.writeheader()
            writer.writerows(payload)
            text = buffer.getvalue()
        _emit(text, config.out_path)
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY_FAILED


def _cmd_nernst(config: RunConfig) -> int:
    a = config.a_values[0]
    if "sweep.T" in config.explicit_keys:
        grid = sorted(config.T_values, reverse=True)
    else:
        # default extrapolation grid: tau = 0.2 .. 0.05 at this separation
        per_K = tau_from(a, 1.0)
        grid = [t / per_K for t in (0.2, 0.15, 0.1, 0.05)]
    if len(grid) < 4:
        raise ConfigError(f"nernst needs >= 4 temperatures in sweep.T, got {len(grid)}")
    if any(T <= 0 for T in grid):
        raise ConfigError("nernst grid temperatures must be positive")
    if tau_from(a, grid[0]) > 0.2 + 1e-12:
        raise ConfigError(
            f"nernst grid must stay inside tau <= 0.2; tau({grid[0]} K) = "
            f"{tau_from(a, grid[0]):.3f}"
        )
    try:
        verdict = nernst_diagnose(config.model, a, grid, config.thermo)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc

    s0, s2, s3 = verdict.coefficients
    r0, r2, r3 = verdict.references
    lines = [
        f"classification: {verdict.classification}",
        f"expected_zero: {verdict.expected_zero}",
        f"limit_estimate_JKm2: {_format_float(verdict.limit_estimate)}",
        f"expected_value_JKm2: {_format_float(verdict.expected_value)}",
        f"fit_s0_JKm2: {_format_float(s0)}   reference: {_format_float(r0)}",
        f"fit_s2_JKm2: {_format_float(s2)}   reference: {_format_float(r2)}",
        f"fit_s3_JKm2: {_format_float(s3)}   reference: {_format_float(r3)}",
    ]
    text = "\n".join(lines) + "\n"
    if config.out_format == "json":
        text = json.dumps({
            "classification": verdict.classification,
            "expected_zero": verdict.expected_zero,
            "limit_estimate_JKm2": verdict.limit_estimate,
            "expected_value_JKm2": verdict.expected_value,
            "fit": {"s0": s0, "s2": s2, "s3": s3},
            "reference": {"s0": r0, "s2": r2, "s3": r3},
        }, indent=2) + "\n"
    _emit(text, config.out_path)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lifshitz-plates",
        description="Dispersion free energy, pressure and entropy between "
                    "dielectric plates (Lifshitz theory).",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in [
        ("energy", "free energy table over the (a, T) sweep"),
        ("pressure", "pressure table over the (a, T) sweep"),
        ("entropy", "entropy table over the (a, T) sweep"),
        ("sweep", "full table over the (a, T) sweep"),
        ("verify", "run the verification criteria"),
        ("nernst", "T -> 0 entropy extrapolation and Nernst verdict"),
    ]:
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--config", metavar="FILE", help="key = value config file")
        cmd.add_argument("--set", metavar="KEY=VALUE", action="append", default=[],
                         dest="overrides", help="override one config key")
        cmd.add_argument("--format", choices=("csv", "json"), help="output format")
        cmd.add_argument("--out", metavar="PATH", help="output file (default stdout)")
    return parser


def _load_config(args: argparse.Namespace) -> RunConfig:
    sources = []
    if args.config:
        sources.append(parse_config_file(args.config))
    sources.append(parse_overrides(args.overrides))
    extra: dict[str, str] = {}
    if args.format:
        extra["output.format"] = args.format
    if args.out:
        extra["output.path"] = args.out
    sources.append(extra)
    return build_run_config(sources)


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        config = _load_config(args)
        if args.command in ("energy", "pressure", "entropy", "sweep"):
            return _cmd_table(config)
        if args.command == "verify":
            return _cmd_verify(config)
        return _cmd_nernst(config)
    except (ConfigError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except LifshitzError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
