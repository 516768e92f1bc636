"""Dispersion (van der Waals/Casimir) interaction between dielectric plates.

Finite-temperature Lifshitz free energy, pressure and entropy for two
thick parallel plates, their zero-temperature limits, the universal
low-temperature asymptotics, and Nernst-heat-theorem diagnostics for
dielectric-response models with and without dc conductivity.
"""

from .abelplana import (
    MethodValue,
    QuadratureSettings,
    contour_F,
    contour_Phi,
    thermal_correction_F,
    thermal_correction_P,
    zero_temperature_energy,
    zero_temperature_pressure,
)
from .asymptotics import (
    AsymptoticCoefficients,
    coeff_C4,
    coeff_c3,
    coefficients,
    dc_shift,
    entropy_lowT,
    free_energy_lowT,
    li3,
    nernst_entropy_dc,
    pressure_lowT,
    zeta3,
)
from .errors import (
    ConfigError,
    DomainError,
    FitError,
    LifshitzError,
    MethodDisagreementError,
    NoConvergenceError,
    QuadratureError,
    StepSizeError,
)
from .kernel import (
    ReflectionSquares,
    free_energy_integrand,
    pressure_integrand,
    reflection_squares,
    reflection_squares_complex,
)
from .matsubara import SummationSettings, free_energy, free_energy_dc, pressure
from .permittivity import (
    DIVERGENT,
    DcConductivityModel,
    OscillatorModel,
    StaticModel,
    eval_at_imaginary,
    eval_at_matsubara,
    static_limit,
)
from .thermo import (
    NernstVerdict,
    ThermoReport,
    ThermoSettings,
    asymptote_error,
    entropy_numeric,
    full_report,
    nernst_diagnose,
    pressure_from_energy,
)
from .units import CODATA, PhysicalConstants, PlateConfig, matsubara_xi, matsubara_zeta, tau_from

__version__ = "0.1.0"

__all__ = [
    "CODATA",
    "DIVERGENT",
    "AsymptoticCoefficients",
    "ConfigError",
    "DcConductivityModel",
    "DomainError",
    "FitError",
    "LifshitzError",
    "MethodDisagreementError",
    "MethodValue",
    "NernstVerdict",
    "NoConvergenceError",
    "OscillatorModel",
    "PhysicalConstants",
    "PlateConfig",
    "QuadratureError",
    "QuadratureSettings",
    "ReflectionSquares",
    "StaticModel",
    "StepSizeError",
    "SummationSettings",
    "ThermoReport",
    "ThermoSettings",
    "asymptote_error",
    "coeff_C4",
    "coeff_c3",
    "coefficients",
    "contour_F",
    "contour_Phi",
    "dc_shift",
    "entropy_lowT",
    "entropy_numeric",
    "eval_at_imaginary",
    "eval_at_matsubara",
    "free_energy",
    "free_energy_dc",
    "free_energy_integrand",
    "free_energy_lowT",
    "full_report",
    "li3",
    "matsubara_xi",
    "matsubara_zeta",
    "nernst_diagnose",
    "nernst_entropy_dc",
    "pressure",
    "pressure_from_energy",
    "pressure_integrand",
    "pressure_lowT",
    "reflection_squares",
    "reflection_squares_complex",
    "static_limit",
    "tau_from",
    "thermal_correction_F",
    "thermal_correction_P",
    "zero_temperature_energy",
    "zero_temperature_pressure",
    "zeta3",
]
