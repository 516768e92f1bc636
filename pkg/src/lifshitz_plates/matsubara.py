"""Direct evaluation of the finite-temperature Lifshitz sums.

Free energy and pressure per unit area between two thick plates:

    F(a,T) =  hbar c tau / (32 pi^2 a^3) * Sum'_l Int_{tau l}^inf f(zeta_l, y) dy
    P(a,T) = -hbar c tau / (32 pi^2 a^4) * Sum'_l Int_{tau l}^inf p(zeta_l, y) dy

where Sum' halves the l = 0 term and zeta_l = l tau.  Terms are summed in
ascending l (deterministic, bit-reproducible) and truncated once the
geometric-envelope tail bound drops below ``rel_tol`` of the running sum:
the integrands decay like e^{-y} with lower limit tau*l, so term
magnitudes fall off at least like e^{-tau l} for l >= 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .abelplana import QuadratureSettings, integrate
from .errors import NoConvergenceError
from .kernel import free_energy_integrand, pressure_integrand
from .permittivity import DcConductivityModel, Model, eval_at_matsubara
from .units import C_LIGHT, HBAR, PlateConfig

_PREF32 = 32.0 * math.pi ** 2


@dataclass(frozen=True)
class SummationSettings:
    """Truncation policy for the Matsubara sums."""

    rel_tol: float = 1e-9
    max_terms: int = 200_000
    quad: QuadratureSettings = field(default_factory=QuadratureSettings)

    def __post_init__(self):
        if not (0.0 < self.rel_tol <= 1e-4):
            raise ValueError(f"rel_tol must be in (0, 1e-4], got {self.rel_tol}")
        if self.max_terms < 10:
            raise ValueError(f"max_terms must be >= 10, got {self.max_terms}")


def free_energy_term(model: Model, l: int, config: PlateConfig,
                     quad_settings: Optional[QuadratureSettings] = None) -> tuple[float, float]:
    """Dimensionless l-th free-energy term Int_{tau l}^inf f(zeta_l, y) dy.

    Returns (value, quadrature error estimate); the half-weight of l = 0
    is *not* applied here.
    """
    settings = quad_settings or QuadratureSettings()
    zeta = l * config.tau
    eps = eval_at_matsubara(model, l, config.T)
    return integrate(lambda y: free_energy_integrand(eps, zeta, y),
                     zeta, math.inf, settings)


def pressure_term(model: Model, l: int, config: PlateConfig,
                  quad_settings: Optional[QuadratureSettings] = None) -> tuple[float, float]:
    """Dimensionless l-th pressure term Int_{tau l}^inf p(zeta_l, y) dy."""
    settings = quad_settings or QuadratureSettings()
    zeta = l * config.tau
    eps = eval_at_matsubara(model, l, config.T)
    return integrate(lambda y: pressure_integrand(eps, zeta, y),
                     zeta, math.inf, settings)


def _reduced_sum(term, model: Model, config: PlateConfig,
                 settings: SummationSettings) -> tuple[float, float]:
    """tau * Sum'_l term_l with the geometric-tail truncation rule."""
    if config.T <= 0:
        raise ValueError("Matsubara summation requires T > 0")
    tau = config.tau
    damping = -math.expm1(-tau)  # 1 - e^-tau
    value0, err0 = term(model, 0, config, settings.quad)
    total = 0.5 * value0
    err = 0.5 * err0
    l = 1
    while True:
        value_l, err_l = term(model, l, config, settings.quad)
        total += value_l
        err += err_l
        if l >= 8 and abs(value_l) <= settings.rel_tol * abs(total) * damping:
            tail = abs(value_l) * math.exp(-tau) / damping
            return tau * total, tau * (err + tail)
        l += 1
        if l > settings.max_terms:
            raise NoConvergenceError(
                f"Matsubara sum not converged after {settings.max_terms} terms "
                f"(tau={tau:.3e}, last term {value_l:.3e})"
            )


def reduced_free_energy(model: Model, config: PlateConfig,
                        settings: SummationSettings) -> tuple[float, float]:
    """(32 pi^2 a^3 / hbar c) * F(a,T) and its error estimate (value <= 0)."""
    return _reduced_sum(free_energy_term, model, config, settings)


def reduced_pressure(model: Model, config: PlateConfig,
                     settings: SummationSettings) -> tuple[float, float]:
    """(32 pi^2 a^4 / hbar c) * P(a,T) and its error estimate (value <= 0)."""
    value, err = _reduced_sum(pressure_term, model, config, settings)
    return -value, err


def free_energy(model: Model, config: PlateConfig,
                settings: Optional[SummationSettings] = None) -> float:
    """Free energy of the dispersion interaction per unit area, in J/m^2.

    Nonpositive for any valid model; exactly zero for vacuum (eps = 1).
    Raises :class:`NoConvergenceError` when the tail criterion is not met
    within ``max_terms`` and propagates quadrature failures.
    """
    settings = settings or SummationSettings()
    value, _ = reduced_free_energy(model, config, settings)
    return HBAR * C_LIGHT / (_PREF32 * config.a ** 3) * value


def pressure(model: Model, config: PlateConfig,
             settings: Optional[SummationSettings] = None) -> float:
    """Pressure between the plates in Pa, negative = attractive."""
    settings = settings or SummationSettings()
    value, _ = reduced_pressure(model, config, settings)
    return HBAR * C_LIGHT / (_PREF32 * config.a ** 4) * value


def free_energy_dc(model: DcConductivityModel, config: PlateConfig,
                   settings: Optional[SummationSettings] = None) -> float:
    """Free energy with the dc-conductivity response eps_l + beta(T)/l.

    The l = 0 term goes through the divergent-permittivity path of the
    kernel (r_par^2 = 1, r_perp^2 = 0).  With sigma_ref = 0 this is
    identical to the free energy of the base model.
    """
    if not isinstance(model, DcConductivityModel):
        raise TypeError("free_energy_dc expects a DcConductivityModel")
    return free_energy(model, config, settings)
