"""Thermodynamic derivatives, Nernst diagnostics and asymptote comparison.

The entropy per unit area is S(a,T) = -dF(a,T)/dT and the pressure is
P(a,T) = -dF(a,T)/da.  Both are computed with central differences plus one
Richardson extrapolation level.  For non-dispersive models the temperature
derivative acts on the contour-route thermal correction (the
temperature-independent E(a) cancels identically in the difference), which
removes the cancellation penalty of differentiating two nearly equal free
energies at small tau.

:func:`nernst_diagnose` extrapolates S(T) to T = 0 with the basis
{1, tau^2, tau^3} -- the low-temperature law has no linear term, and
fitting a spurious one would destabilize the intercept.  The intercept is
then classified against zero (Nernst satisfied) or against the
dc-conductivity value of :func:`asymptotics.nernst_entropy_dc` (Nernst
violated).  For activated conductivity the grid must stay at temperatures
where sigma0(T) = sigma_ref exp(-b/T) is still representable; below
T ~ b/700 the wrapper silently degenerates to its base model.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from . import asymptotics
from .abelplana import (
    MethodValue,
    QuadratureSettings,
    reduced_contour_correction_F,
    reduced_zero_temperature_energy,
    reduced_zero_temperature_pressure,
    thermal_correction_F,
    thermal_correction_P,
)
from .errors import FitError, StepSizeError
from .matsubara import SummationSettings, reduced_free_energy
from .permittivity import DcConductivityModel, Model, is_dispersive, static_limit
from .units import C_LIGHT, HBAR, K_B, PlateConfig, tau_from

_PREF32 = 32.0 * math.pi ** 2
_MACH_EPS = 2.22e-16
_ERR_FLOOR = 1e-300


@dataclass(frozen=True)
class ThermoSettings:
    """Settings for derivatives and diagnostics."""

    summation: SummationSettings = field(default_factory=SummationSettings)
    rel_step: float = 1e-4       # finite-difference step as a fraction of T (or a)
    nernst_tol: float = 0.05     # relative tolerance of the verdict classification

    def __post_init__(self):
        if not (0.0 < self.rel_step < 0.1):
            raise ValueError(f"rel_step must be in (0, 0.1), got {self.rel_step}")
        if not (0.0 < self.nernst_tol < 1.0):
            raise ValueError(f"nernst_tol must be in (0, 1), got {self.nernst_tol}")


@dataclass
class ThermoReport:
    """Free energy, pressure and entropy with error estimates and provenance.

    Invariants: F = E + dF and P = P0 + dP hold exactly by construction;
    every entry of ``error`` is finite and positive.
    """

    E: float
    dF: float
    F: float
    P0: float
    dP: float
    P: float
    S: float
    error: dict[str, float]
    method: dict[str, str]


@dataclass(frozen=True)
class NernstVerdict:
    """T -> 0 entropy extrapolation versus the expected limit."""

    limit_estimate: float        # fitted S(T -> 0) intercept, J/(K m^2)
    expected_zero: bool
    expected_value: float        # 0 or the dc-conductivity entropy
    classification: str          # 'satisfies' | 'violates' | 'inconclusive'
    coefficients: tuple[float, float, float]   # fitted (s0, s2, s3)
    references: tuple[float, float, float]     # expected (s0, s2, s3)


def _richardson_derivative(f: Callable[[float], float], x0: float, h: float,
                           eval_error: float) -> tuple[float, float]:
    """Central difference with one Richardson level at steps (h, h/2, h/4).

    ``eval_error`` is the absolute error of a single f evaluation; it sets
    the noise floor below which stencil disagreement is not meaningful.
    Raises :class:`StepSizeError` when the two extrapolants disagree by
    more than 10x the truncation scale the extrapolation removes.
    """
    values = [f(x0 + s * h) for s in (1.0, -1.0, 0.5, -0.5, 0.25, -0.25)]
    d1 = (values[0] - values[1]) / (2.0 * h)
    d2 = (values[2] - values[3]) / h
    d3 = (values[4] - values[5]) / (0.5 * h)
    r21 = (4.0 * d2 - d1) / 3.0
    r32 = (4.0 * d3 - d2) / 3.0
    scale = max(abs(v) for v in values)
    noise = (4.0 * eval_error + 8.0 * _MACH_EPS * scale) / h
    predicted = abs(d3 - d2) / 3.0
    disagreement = abs(r32 - r21)
    if disagreement > 10.0 * (predicted + noise):
        raise StepSizeError(
            f"finite-difference step h={h:.3e} inconsistent: extrapolants "
            f"differ by {disagreement:.3e} against truncation scale {predicted:.3e}"
        )
    return r32, disagreement + noise


def _fd_step(settings: ThermoSettings, x0: float) -> float:
    return max(math.sqrt(_MACH_EPS) * x0, settings.rel_step * x0)


def entropy_numeric(model: Model, a: float, T: float,
                    settings: Optional[ThermoSettings] = None) -> MethodValue:
    """Entropy per unit area S = -dF/dT in J/(K m^2), by central differences.

    Non-dispersive models differentiate the contour-route thermal
    correction (E(a) drops out of the difference exactly); dispersive
    models differentiate the full Matsubara sum.
    """
    settings = settings or ThermoSettings()
    h = _fd_step(settings, T)
    if T <= h:
        raise ValueError(f"temperature {T} must exceed the step {h}")
    quad_settings = settings.summation.quad

    if not is_dispersive(model):
        eps0 = static_limit(model)
        prefactor = HBAR * C_LIGHT / (_PREF32 * a ** 3)

        def g(Tp: float) -> float:
            value, _ = reduced_contour_correction_F(eps0, tau_from(a, Tp), quad_settings)
            return prefactor * value

        _, ref_err = reduced_contour_correction_F(eps0, tau_from(a, T), quad_settings)
        derivative, err = _richardson_derivative(g, T, h, prefactor * ref_err)
        return MethodValue(-derivative, max(err, _ERR_FLOOR), "fd-contour")

    prefactor = HBAR * C_LIGHT / (_PREF32 * a ** 3)

    def g(Tp: float) -> float:
        value, _ = reduced_free_energy(model, PlateConfig(a, Tp), settings.summation)
        return prefactor * value

    _, ref_err = reduced_free_energy(model, PlateConfig(a, T), settings.summation)
    derivative, err = _richardson_derivative(g, T, h, prefactor * ref_err)
    return MethodValue(-derivative, max(err, _ERR_FLOOR), "fd-sum")


def pressure_from_energy(model: Model, a: float, T: float,
                         settings: Optional[ThermoSettings] = None) -> MethodValue:
    """Pressure P = -dF/da in Pa by central differences in the separation."""
    settings = settings or ThermoSettings()
    h = _fd_step(settings, a)
    if a <= h:
        raise ValueError(f"separation {a} must exceed the step {h}")

    def g(ap: float) -> float:
        value, _ = reduced_free_energy(model, PlateConfig(ap, T), settings.summation)
        return HBAR * C_LIGHT / (_PREF32 * ap ** 3) * value

    _, ref_err = reduced_free_energy(model, PlateConfig(a, T), settings.summation)
    prefactor = HBAR * C_LIGHT / (_PREF32 * a ** 3)
    derivative, err = _richardson_derivative(g, a, h, prefactor * ref_err)
    return MethodValue(-derivative, max(err, _ERR_FLOOR), "fd-separation")


def _entropy_fit(taus: np.ndarray, entropies: np.ndarray) -> tuple[float, float, float]:
    """Least-squares fit of S(tau) on the basis {1, tau^2, tau^3}."""
    design = np.column_stack([np.ones_like(taus), taus ** 2, taus ** 3])
    norms = np.linalg.norm(design, axis=0)
    scaled = design / norms
    cond = np.linalg.cond(scaled)
    if cond > 1e8:
        raise FitError(f"entropy grid too narrow for the intercept fit (cond={cond:.2e})")
    coef, *_ = np.linalg.lstsq(scaled, entropies, rcond=None)
    s0, s2, s3 = coef / norms
    return float(s0), float(s2), float(s3)


def nernst_diagnose(model: Model, a: float, T_grid: Sequence[float],
                    settings: Optional[ThermoSettings] = None) -> NernstVerdict:
    """Extrapolate the entropy to T = 0 and classify the Nernst limit.

    ``T_grid`` must be strictly decreasing with at least 4 points, all of
    them with tau <= 0.2.
    """
    settings = settings or ThermoSettings()
    grid = [float(T) for T in T_grid]
    if len(grid) < 4:
        raise ValueError(f"need at least 4 grid temperatures, got {len(grid)}")
    if any(t2 >= t1 for t1, t2 in zip(grid, grid[1:])):
        raise ValueError("temperature grid must be strictly decreasing")
    taus = np.array([tau_from(a, T) for T in grid])
    if taus[0] > 0.2 + 1e-12:
        raise ValueError(f"grid extends beyond the fit domain: tau_max={taus[0]:.3f} > 0.2")

    entropies = np.array([entropy_numeric(model, a, T, settings).value for T in grid])
    s0, s2, s3 = _entropy_fit(taus, entropies)

    eps0 = static_limit(model)
    dc_value = asymptotics.nernst_entropy_dc(eps0, a)
    coeffs = asymptotics.coefficients(eps0)
    entropy_unit = K_B / (8.0 * math.pi * a ** 2)

    tol = settings.nernst_tol
    s_scale = float(np.max(np.abs(entropies)))
    if abs(s0) <= tol * s_scale:
        classification = "satisfies"
    elif abs(s0 - dc_value) <= tol * dc_value:
        classification = "violates"
    else:
        classification = "inconclusive"

    expected_zero = not (isinstance(model, DcConductivityModel) and model.sigma_ref > 0)
    return NernstVerdict(
        limit_estimate=s0,
        expected_zero=expected_zero,
        expected_value=0.0 if expected_zero else dc_value,
        classification=classification,
        coefficients=(s0, s2, s3),
        references=(0.0 if expected_zero else dc_value,
                    entropy_unit * coeffs.s2_S,
                    entropy_unit * coeffs.s3_S),
    )


def asymptote_error(model: Model, a: float, T: float,
                    settings: Optional[ThermoSettings] = None) -> float:
    """Relative deviation |dF_numeric - dF_asymptotic| / |dF_numeric|.

    The asymptote uses the static limit eps(i0) of the model; the numeric
    correction uses the contour route for non-dispersive models and the
    (sum minus E) difference otherwise.
    """
    settings = settings or ThermoSettings()
    if T <= 0:
        raise ValueError(f"temperature must be positive, got T={T}")
    quad_settings = settings.summation.quad
    eps0 = static_limit(model)
    asym = asymptotics.free_energy_lowT(eps0, a, T)
    prefactor = HBAR * C_LIGHT / (_PREF32 * a ** 3)
    if not is_dispersive(model):
        reduced, _ = reduced_contour_correction_F(eps0, tau_from(a, T), quad_settings)
        numeric = prefactor * reduced
    else:
        config = PlateConfig(a, T)
        sum_red, _ = reduced_free_energy(model, config, settings.summation)
        zero_red, _ = reduced_zero_temperature_energy(model, a, quad_settings)
        numeric = prefactor * (sum_red - zero_red)
    if numeric == 0.0:
        return 0.0 if asym == 0.0 else math.inf
    return abs(numeric - asym) / abs(numeric)


def full_report(model: Model, config: PlateConfig,
                settings: Optional[ThermoSettings] = None) -> ThermoReport:
    """Assemble E, dF, F, P0, dP, P and S for one (a, T) point."""
    settings = settings or ThermoSettings()
    quad_settings = settings.summation.quad
    a = config.a

    e_red, e_err = reduced_zero_temperature_energy(model, a, quad_settings)
    pref3 = HBAR * C_LIGHT / (_PREF32 * a ** 3)
    E = pref3 * e_red
    err_E = max(pref3 * e_err, _ERR_FLOOR)

    p_red, p_err = reduced_zero_temperature_pressure(model, a, quad_settings)
    pref4 = HBAR * C_LIGHT / (_PREF32 * a ** 4)
    P0 = pref4 * p_red
    err_P0 = max(pref4 * p_err, _ERR_FLOOR)

    if config.T == 0.0:
        error = {"E": err_E, "dF": _ERR_FLOOR, "F": err_E,
                 "P0": err_P0, "dP": _ERR_FLOOR, "P": err_P0, "S": _ERR_FLOOR}
        method = {"E": "quadrature", "dF": "zero-T", "F": "E+dF",
                  "P0": "quadrature", "dP": "zero-T", "P": "P0+dP", "S": "zero-T"}
        return ThermoReport(E=E, dF=0.0, F=E, P0=P0, dP=0.0, P=P0, S=0.0,
                            error=error, method=method)

    dF = thermal_correction_F(model, config, quad_settings, settings.summation)
    dP = thermal_correction_P(model, config, quad_settings, settings.summation)
    S = entropy_numeric(model, a, config.T, settings)

    error = {
        "E": err_E,
        "dF": max(dF.error, _ERR_FLOOR),
        "F": max(err_E + dF.error, _ERR_FLOOR),
        "P0": err_P0,
        "dP": max(dP.error, _ERR_FLOOR),
        "P": max(err_P0 + dP.error, _ERR_FLOOR),
        "S": max(S.error, _ERR_FLOOR),
    }
    method = {"E": "quadrature", "dF": dF.method, "F": "E+dF",
              "P0": "quadrature", "dP": dP.method, "P": "P0+dP", "S": S.method}
    return ThermoReport(E=E, dF=dF.value, F=E + dF.value,
                        P0=P0, dP=dP.value, P=P0 + dP.value,
                        S=S.value, error=error, method=method)
