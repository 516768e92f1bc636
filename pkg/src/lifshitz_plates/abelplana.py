"""Zero-temperature integrals and thermal corrections via the sum/integral split.

The Matsubara sum of the free energy equals the zero-temperature double
integral E(a) plus a thermal correction given by a contour integral over
the Bose-like kernel 1/(e^{2 pi t} - 1):

    F(a,T) = E(a) + dF(a,T)

    E(a)  = hbar c / (32 pi^2 a^3) * Int_0^inf dzeta Int_zeta^inf dy f(zeta, y)
    dF    = hbar c tau / (32 pi^2 a^3) * i Int_0^inf dt [F(i t tau) - F(-i t tau)] / (e^{2 pi t} - 1)

with F(x) = Int_x^inf f(x, y) dy evaluated on the shifted straight path
y = x + u, u in (0, inf).  The pressure has the same structure with the
pressure integrand Phi(x) and an a^-4 prefactor.

Because f(conj x, conj y) = conj f(x, y), the contour difference equals
2 i Im F(i t tau), so only the imaginary part is ever integrated and the
correction carries no cancellation penalty at small tau.  The difference
route dF = F_sum - E is computed as well for non-dispersive models and
cross-checked against the contour route; disagreement far beyond the
combined error estimates raises :class:`MethodDisagreementError`.

All quadrature is delegated to QUADPACK (scipy.integrate.quad): globally
adaptive bisection with an embedded Gauss/Kronrod rule pair, with infinite
ranges mapped internally.  ``QuadratureSettings`` translates directly to
(epsabs, epsrel, limit).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

from scipy.integrate import IntegrationWarning, quad

from .errors import MethodDisagreementError, QuadratureError
from .kernel import (
    free_energy_integrand,
    free_energy_integrand_complex,
    pressure_integrand,
    pressure_integrand_complex,
)
from .permittivity import (
    DcConductivityModel,
    Model,
    eval_at_imaginary,
    is_dispersive,
    static_limit,
)
from .units import C_LIGHT, HBAR, PlateConfig, xi_characteristic

# QUADPACK rejects relative tolerances below ~50 machine epsilons.
_EPSREL_FLOOR = 1.2e-14
_PREF32 = 32.0 * math.pi ** 2


@dataclass(frozen=True)
class QuadratureSettings:
    """Adaptive-quadrature knobs, mapped onto QUADPACK (epsabs, epsrel, limit)."""

    rel_tol: float = 1e-10
    abs_tol: float = 1e-18
    max_depth: int = 200

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise ValueError("quadrature tolerances must be positive")
        if self.max_depth < 10:
            raise ValueError(f"max_depth must be >= 10, got {self.max_depth}")


@dataclass(frozen=True)
class MethodValue:
    """A computed quantity with its error estimate and method provenance."""

    value: float
    error: float
    method: str


def integrate(func: Callable[[float], float], lo: float, hi: float,
              settings: QuadratureSettings) -> tuple[float, float]:
    """Adaptive quadrature of ``func`` on (lo, hi); hi may be +inf.

    Returns (value, error estimate).  QUADPACK roundoff complaints are
    tolerated as long as the reported error stays within 100x the
    requested tolerance; anything worse raises :class:`QuadratureError`.
    """
    epsrel = max(settings.rel_tol, _EPSREL_FLOOR)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IntegrationWarning)
        out = quad(func, lo, hi, epsabs=settings.abs_tol, epsrel=epsrel,
                   limit=settings.max_depth, full_output=True)
    value, abserr = out[0], out[1]
    if len(out) > 3:
        tol = max(settings.abs_tol, epsrel * abs(value))
        if not math.isfinite(value) or abserr > 100.0 * tol:
            raise QuadratureError(
                f"quadrature on ({lo}, {hi}) failed: {out[3]} "
                f"(value={value:.6e}, abserr={abserr:.3e})"
            )
    return value, abserr


def _inner_settings(settings: QuadratureSettings) -> QuadratureSettings:
    """Tighter settings for the inner integral of a nested quadrature."""
    return QuadratureSettings(
        rel_tol=max(settings.rel_tol / 10.0, _EPSREL_FLOOR),
        abs_tol=settings.abs_tol,
        max_depth=settings.max_depth,
    )


def _zero_temperature_model(model: Model) -> Model:
    """T -> 0 limit of the response: activated dc conductivity switches off."""
    if isinstance(model, DcConductivityModel) and model.b > 0:
        return model.base
    return model


# ---------------------------------------------------------------------------
# zero-temperature double integrals (reduced = in units of hbar c / 32 pi^2 a^3,
# respectively hbar c / 32 pi^2 a^4 for the pressure)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=128)
def reduced_zero_temperature_energy(model: Model, a: float,
                                    settings: QuadratureSettings) -> tuple[float, float]:
    """(32 pi^2 a^3 / hbar c) * E(a) and its error estimate."""
    model = _zero_temperature_model(model)
    xic = xi_characteristic(a)
    inner = _inner_settings(settings)

    def outer(zeta: float) -> float:
        eps = eval_at_imaginary(model, zeta * xic)
        value, _ = integrate(lambda y: free_energy_integrand(eps, zeta, y),
                             zeta, math.inf, inner)
        return value

    value, err = integrate(outer, 0.0, math.inf, settings)
    return value, err + inner.rel_tol * abs(value)


@lru_cache(maxsize=128)
def reduced_zero_temperature_pressure(model: Model, a: float,
                                      settings: QuadratureSettings) -> tuple[float, float]:
    """(32 pi^2 a^4 / hbar c) * P0(a) and its error estimate (value <= 0)."""
    model = _zero_temperature_model(model)
    xic = xi_characteristic(a)
    inner = _inner_settings(settings)

    def outer(zeta: float) -> float:
        eps = eval_at_imaginary(model, zeta * xic)
        value, _ = integrate(lambda y: pressure_integrand(eps, zeta, y),
                             zeta, math.inf, inner)
        return value

    value, err = integrate(outer, 0.0, math.inf, settings)
    return -value, err + inner.rel_tol * abs(value)


def zero_temperature_energy(model: Model, a: float,
                            quad_settings: Optional[QuadratureSettings] = None) -> float:
    """Dispersion interaction energy per unit area at T = 0, in J/m^2.

    The model is evaluated at xi = zeta * xi_c along the continuous
    frequency axis; an activated dc wrapper reduces to its base response
    because sigma0(T) -> 0 at T -> 0.
    """
    settings = quad_settings or QuadratureSettings()
    value, _ = reduced_zero_temperature_energy(model, a, settings)
    return HBAR * C_LIGHT / (_PREF32 * a ** 3) * value


def zero_temperature_pressure(model: Model, a: float,
                              quad_settings: Optional[QuadratureSettings] = None) -> float:
    """Pressure at T = 0 in Pa (negative = attractive); the continuous-
    frequency limit of the direct pressure sum, which equals -dE/da."""
    settings = quad_settings or QuadratureSettings()
    value, _ = reduced_zero_temperature_pressure(model, a, settings)
    return HBAR * C_LIGHT / (_PREF32 * a ** 4) * value


# ---------------------------------------------------------------------------
# contour functions F(x), Phi(x) and the thermal corrections
# ---------------------------------------------------------------------------

def _check_contour_argument(x: complex) -> complex:
    x = complex(x)
    if x.real < 0 and x.imag == 0:
        raise ValueError(f"contour argument needs Re(x) >= 0 or imaginary x, got {x}")
    return x


def contour_F(eps0: float, x: complex,
              quad_settings: Optional[QuadratureSettings] = None) -> complex:
    """F(x) = Int_x^inf f(x, y) dy on the shifted path y = x + u (static model)."""
    settings = quad_settings or QuadratureSettings()
    x = _check_contour_argument(x)
    re, _ = integrate(lambda u: free_energy_integrand_complex(eps0, x, u + x).real,
                      0.0, math.inf, settings)
    im, _ = integrate(lambda u: free_energy_integrand_complex(eps0, x, u + x).imag,
                      0.0, math.inf, settings)
    return complex(re, im)


def contour_Phi(eps0: float, x: complex,
                quad_settings: Optional[QuadratureSettings] = None) -> complex:
    """Phi(x) = Int_x^inf y^2 [r^2/(e^y - r^2)] dy, both polarizations summed."""
    settings = quad_settings or QuadratureSettings()
    x = _check_contour_argument(x)
    re, _ = integrate(lambda u: pressure_integrand_complex(eps0, x, u + x).real,
                      0.0, math.inf, settings)
    im, _ = integrate(lambda u: pressure_integrand_complex(eps0, x, u + x).imag,
                      0.0, math.inf, settings)
    return complex(re, im)


def _im_on_axis(integrand_complex, eps0: float, xv: float,
                settings: QuadratureSettings) -> float:
    """Im G(i xv) for G in {F, Phi}; vanishes at xv = 0."""
    if xv == 0.0:
        return 0.0
    x = complex(0.0, xv)
    value, _ = integrate(lambda u: integrand_complex(eps0, x, u + x).imag,
                         0.0, math.inf, settings)
    return value


def _t_cutoff(settings: QuadratureSettings) -> float:
    return max(10.0, -math.log(settings.abs_tol) / (2.0 * math.pi))


def reduced_contour_correction_F(eps0: float, tau: float,
                                 settings: QuadratureSettings) -> tuple[float, float]:
    """(32 pi^2 a^3 / hbar c) * dF via the contour route: -2 tau Int Im F/(e^{2 pi t}-1)."""
    if tau < 0:
        raise ValueError(f"tau must be nonnegative, got {tau}")
    if tau == 0.0 or eps0 == 1.0:
        return 0.0, 0.0
    inner = _inner_settings(settings)

    def g(t: float) -> float:
        if t <= 0.0:
            return 0.0
        return (_im_on_axis(free_energy_integrand_complex, eps0, t * tau, inner)
                / math.expm1(2.0 * math.pi * t))

    value, err = integrate(g, 0.0, _t_cutoff(settings), settings)
    total_err = 2.0 * tau * (err + inner.rel_tol * abs(value) + settings.abs_tol)
    return -2.0 * tau * value, total_err


def reduced_contour_correction_P(eps0: float, tau: float,
                                 settings: QuadratureSettings) -> tuple[float, float]:
    """(32 pi^2 a^4 / hbar c) * dP via the contour route: +2 tau Int Im Phi/(e^{2 pi t}-1)."""
    if tau < 0:
        raise ValueError(f"tau must be nonnegative, got {tau}")
    if tau == 0.0 or eps0 == 1.0:
        return 0.0, 0.0
    inner = _inner_settings(settings)

    def g(t: float) -> float:
        if t <= 0.0:
            return 0.0
        return (_im_on_axis(pressure_integrand_complex, eps0, t * tau, inner)
                / math.expm1(2.0 * math.pi * t))

    value, err = integrate(g, 0.0, _t_cutoff(settings), settings)
    total_err = 2.0 * tau * (err + inner.rel_tol * abs(value) + settings.abs_tol)
    return 2.0 * tau * value, total_err


def _summation_for(settings: QuadratureSettings):
    """Difference-route sum settings whose tail keeps up with the quadrature."""
    from .matsubara import SummationSettings

    return SummationSettings(rel_tol=min(max(settings.rel_tol, _EPSREL_FLOOR), 1e-4),
                             quad=settings)


def _thermal_correction(model: Model, config: PlateConfig,
                        settings: QuadratureSettings,
                        summation, reduced_sum, reduced_zero, reduced_contour,
                        power: int) -> MethodValue:
    if config.T <= 0:
        raise ValueError("thermal correction requires T > 0")
    if summation is None:
        summation = _summation_for(settings)
    prefactor = HBAR * C_LIGHT / (_PREF32 * config.a ** power)

    sum_red, sum_err = reduced_sum(model, config, summation)
    zero_red, zero_err = reduced_zero(model, config.a, settings)
    diff = sum_red - zero_red
    diff_err = sum_err + zero_err + 4e-16 * (abs(sum_red) + abs(zero_red))

    if not is_dispersive(model):
        cont, cont_err = reduced_contour(static_limit(model), config.tau, settings)
        combined = diff_err + cont_err
        if abs(diff - cont) > 100.0 * combined:
            raise MethodDisagreementError(
                f"difference route {diff:.9e} and contour route {cont:.9e} "
                f"disagree beyond 100x combined tolerance {combined:.3e}"
            )
        return MethodValue(prefactor * cont, prefactor * cont_err, "contour")
    return MethodValue(prefactor * diff, prefactor * diff_err, "difference")


def thermal_correction_F(model: Model, config: PlateConfig,
                         quad_settings: Optional[QuadratureSettings] = None,
                         summation=None) -> MethodValue:
    """Thermal correction dF(a,T) = F(a,T) - E(a) in J/m^2.

    For non-dispersive models both the difference route (Matsubara sum
    minus E) and the contour route are evaluated; they must agree within
    100x their combined error estimates and the contour value is returned.
    Dispersive models use the difference route only.
    """
    from . import matsubara  # deferred: matsubara imports settings types from here

    settings = quad_settings or QuadratureSettings()
    return _thermal_correction(
        model, config, settings, summation,
        matsubara.reduced_free_energy, reduced_zero_temperature_energy,
        reduced_contour_correction_F, power=3,
    )


def thermal_correction_P(model: Model, config: PlateConfig,
                         quad_settings: Optional[QuadratureSettings] = None,
                         summation=None) -> MethodValue:
    """Thermal correction dP(a,T) = P(a,T) - P0(a) in Pa (dual-route checked)."""
    from . import matsubara

    settings = quad_settings or QuadratureSettings()
    return _thermal_correction(
        model, config, settings, summation,
        matsubara.reduced_pressure, reduced_zero_temperature_pressure,
        reduced_contour_correction_P, power=4,
    )
