"""Physical constants and the dimensionless variables used everywhere else.

All internal computation happens in the dimensionless variables

    tau  = 4 pi k_B a T / (hbar c)      thermal parameter
    zeta_l = l tau                      Matsubara frequency in units of xi_c
    y                                   rescaled transverse wavenumber, y >= zeta

with the characteristic frequency xi_c = c / (2 a).  SI values enter and
leave only at the API boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class PhysicalConstants:
    """SI constants (CODATA-2018 exact values), immutable by construction."""

    hbar: float = 1.054571817e-34  # J s
    c: float = 299792458.0         # m / s
    k_B: float = 1.380649e-23      # J / K

    def __post_init__(self):
        if not (self.hbar > 0 and self.c > 0 and self.k_B > 0):
            raise ValueError("physical constants must be strictly positive")


CODATA = PhysicalConstants()

HBAR = CODATA.hbar
C_LIGHT = CODATA.c
K_B = CODATA.k_B


def _require_finite(**values: float) -> None:
    for name, value in values.items():
        if not math.isfinite(value):
            raise ValueError(f"{name} must be finite, got {value!r}")


def tau_from(a: float, T: float) -> float:
    """Dimensionless thermal parameter 4 pi k_B a T / (hbar c).

    Parameters
    ----------
    a : float
        plate separation in m, a > 0
    T : float
        temperature in K, T >= 0
    """
    _require_finite(a=a, T=T)
    if a <= 0:
        raise ValueError(f"separation must be positive, got a={a}")
    if T < 0:
        raise ValueError(f"temperature must be nonnegative, got T={T}")
    return 4.0 * math.pi * K_B * a * T / (HBAR * C_LIGHT)


def xi_characteristic(a: float) -> float:
    """Characteristic frequency c / (2 a) in rad/s."""
    _require_finite(a=a)
    if a <= 0:
        raise ValueError(f"separation must be positive, got a={a}")
    return C_LIGHT / (2.0 * a)


def matsubara_zeta(l: int, tau: float) -> float:
    """Dimensionless Matsubara frequency zeta_l = l tau."""
    _require_finite(tau=tau)
    if l < 0:
        raise ValueError(f"Matsubara index must be nonnegative, got l={l}")
    return l * tau


def matsubara_xi(l: int, T: float) -> float:
    """Dimensional Matsubara frequency xi_l = 2 pi k_B T l / hbar in rad/s."""
    _require_finite(T=T)
    if l < 0:
        raise ValueError(f"Matsubara index must be nonnegative, got l={l}")
    return 2.0 * math.pi * K_B * T * l / HBAR


@dataclass(frozen=True)
class PlateConfig:
    """Separation/temperature state of the two-plate system.

    The derived quantities ``tau`` and ``xi_c`` are recomputed on access so
    they can never go stale with respect to (a, T).

    Parameters
    ----------
    a : float
        plate separation in m, a > 0
    T : float
        temperature in K, T >= 0
    """

    a: float
    T: float

    def __post_init__(self):
        _require_finite(a=self.a, T=self.T)
        if self.a <= 0:
            raise ValueError(f"separation must be positive, got a={self.a}")
        if self.T < 0:
            raise ValueError(f"temperature must be nonnegative, got T={self.T}")

    @property
    def tau(self) -> float:
        return tau_from(self.a, self.T)

    @property
    def xi_c(self) -> float:
        return xi_characteristic(self.a)
