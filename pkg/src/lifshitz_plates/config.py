"""Run configuration for the command-line front end.

Configs are flat ``key = value`` text files with sectioned keys
(``model.*``, ``sweep.*``, ``numerics.*``, ``output.*``, ``verify.*``);
``#`` starts a comment.  Command-line ``--set key=value`` entries override
file values.  Unknown keys are rejected.

Sweep values accept three spellings: a single number (``1e-6``), a comma
list (``1e-6,2e-6``) or an inclusive linear range ``start:stop:count``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .abelplana import QuadratureSettings
from .errors import ConfigError
from .matsubara import SummationSettings
from .permittivity import DcConductivityModel, Model, OscillatorModel, StaticModel
from .thermo import ThermoSettings

_DEFAULTS: dict[str, str] = {
    "model.kind": "static",
    "model.eps0": "2.0",
    "model.osc_strengths": "",
    "model.osc_frequencies": "",
    "model.dc_sigma_ref": "",
    "model.dc_b": "0.0",
    "sweep.a": "1e-6",
    "sweep.T": "300.0",
    "numerics.rel_tol": "1e-10",
    "numerics.abs_tol": "1e-18",
    "numerics.max_depth": "200",
    "numerics.sum_rel_tol": "1e-9",
    "numerics.max_terms": "200000",
    "numerics.fd_rel_step": "1e-4",
    "numerics.nernst_tol": "0.05",
    "numerics.workers": "1",
    "output.format": "csv",
    "output.path": "",
    "verify.criteria": "all",
}


@dataclass(frozen=True)
class RunConfig:
    """Validated run parameters shared by all CLI commands."""

    model: Model
    a_values: tuple[float, ...]
    T_values: tuple[float, ...]
    thermo: ThermoSettings
    out_format: str
    out_path: Optional[str]
    criteria: Optional[tuple[str, ...]]   # None = all
    workers: int = 1
    explicit_keys: frozenset[str] = frozenset()

    @property
    def summation(self) -> SummationSettings:
        return self.thermo.summation


def parse_config_file(path: str | Path) -> dict[str, str]:
    """Read ``key = value`` lines; later duplicates win."""
    mapping: dict[str, str] = {}
    text = Path(path).read_text()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        key, value = line.split("=", 1)
        mapping[key.strip()] = value.strip()
    return mapping


def parse_overrides(pairs: list[str]) -> dict[str, str]:
    mapping: dict[str, str] = {}
    for pair in pairs:
        if "=" not in pair:
            raise ConfigError(f"--set expects key=value, got {pair!r}")
        key, value = pair.split("=", 1)
        mapping[key.strip()] = value.strip()
    return mapping


def _parse_float(key: str, value: str) -> float:
    try:
        result = float(value)
    except ValueError as exc:
        raise ConfigError(f"{key}: not a number: {value!r}") from exc
    if not math.isfinite(result):
        raise ConfigError(f"{key}: must be finite, got {value!r}")
    return result


def _parse_int(key: str, value: str) -> int:
    try:
        return int(value)
    except ValueError as exc:
        raise ConfigError(f"{key}: not an integer: {value!r}") from exc


def _parse_sweep(key: str, value: str) -> tuple[float, ...]:
    value = value.strip()
    if not value:
        raise ConfigError(f"{key}: sweep set must not be empty")
    if ":" in value:
        parts = value.split(":")
        if len(parts) != 3:
            raise ConfigError(f"{key}: range syntax is start:stop:count, got {value!r}")
        start = _parse_float(key, parts[0])
        stop = _parse_float(key, parts[1])
        count = _parse_int(key, parts[2])
        if count < 1:
            raise ConfigError(f"{key}: range count must be >= 1, got {count}")
        if count == 1:
            return (start,)
        step = (stop - start) / (count - 1)
        return tuple(start + i * step for i in range(count))
    return tuple(_parse_float(key, item) for item in value.split(","))


def _parse_float_list(key: str, value: str) -> tuple[float, ...]:
    if not value.strip():
        return ()
    return tuple(_parse_float(key, item) for item in value.split(","))


def _build_model(mapping: dict[str, str]) -> Model:
    kind = mapping["model.kind"]
    base: Model
    if kind == "static":
        base = StaticModel(eps0=_parse_float("model.eps0", mapping["model.eps0"]))
    elif kind == "oscillator":
        strengths = _parse_float_list("model.osc_strengths", mapping["model.osc_strengths"])
        frequencies = _parse_float_list("model.osc_frequencies",
                                        mapping["model.osc_frequencies"])
        if not strengths or len(strengths) != len(frequencies):
            raise ConfigError(
                "oscillator model needs matching non-empty model.osc_strengths "
                "and model.osc_frequencies lists"
            )
        base = OscillatorModel(oscillators=tuple(zip(strengths, frequencies)))
    else:
        raise ConfigError(f"model.kind must be 'static' or 'oscillator', got {kind!r}")
    sigma_text = mapping["model.dc_sigma_ref"].strip()
    if sigma_text:
        return DcConductivityModel(
            base=base,
            sigma_ref=_parse_float("model.dc_sigma_ref", sigma_text),
            b=_parse_float("model.dc_b", mapping["model.dc_b"]),
        )
    return base


def build_run_config(sources: list[dict[str, str]]) -> RunConfig:
    """Merge defaults with config-file and override mappings, then validate."""
    mapping = dict(_DEFAULTS)
    explicit: set[str] = set()
    for source in sources:
        for key, value in source.items():
            if key not in _DEFAULTS:
                raise ConfigError(f"unknown configuration key: {key!r}")
            mapping[key] = value
            explicit.add(key)

    try:
        model = _build_model(mapping)
        a_values = _parse_sweep("sweep.a", mapping["sweep.a"])
        T_values = _parse_sweep("sweep.T", mapping["sweep.T"])
        quad = QuadratureSettings(
            rel_tol=_parse_float("numerics.rel_tol", mapping["numerics.rel_tol"]),
            abs_tol=_parse_float("numerics.abs_tol", mapping["numerics.abs_tol"]),
            max_depth=_parse_int("numerics.max_depth", mapping["numerics.max_depth"]),
        )
        summation = SummationSettings(
            rel_tol=_parse_float("numerics.sum_rel_tol", mapping["numerics.sum_rel_tol"]),
            max_terms=_parse_int("numerics.max_terms", mapping["numerics.max_terms"]),
            quad=quad,
        )
        thermo_settings = ThermoSettings(
            summation=summation,
            rel_step=_parse_float("numerics.fd_rel_step", mapping["numerics.fd_rel_step"]),
            nernst_tol=_parse_float("numerics.nernst_tol", mapping["numerics.nernst_tol"]),
        )
    except (ValueError, TypeError) as exc:
        raise ConfigError(str(exc)) from exc

    if any(a <= 0 for a in a_values):
        raise ConfigError("all sweep.a values must be positive")
    if any(T < 0 for T in T_values):
        raise ConfigError("all sweep.T values must be nonnegative")

    out_format = mapping["output.format"]
    if out_format not in ("csv", "json"):
        raise ConfigError(f"output.format must be 'csv' or 'json', got {out_format!r}")

    criteria_text = mapping["verify.criteria"].strip()
    criteria: Optional[tuple[str, ...]]
    if criteria_text in ("", "all"):
        criteria = None
    else:
        criteria = tuple(item.strip() for item in criteria_text.split(","))

    workers = _parse_int("numerics.workers", mapping["numerics.workers"])
    if workers < 1:
        raise ConfigError(f"numerics.workers must be >= 1, got {workers}")

    return RunConfig(
        model=model,
        a_values=a_values,
        T_values=T_values,
        thermo=thermo_settings,
        out_format=out_format,
        out_path=mapping["output.path"].strip() or None,
        criteria=criteria,
        workers=workers,
        explicit_keys=frozenset(explicit),
    )
