"""Closed-form low-temperature expansions and the special functions they need.

For a plate material with static permittivity eps0, the small-tau
expansions of the thermal corrections are

    dF(a,T) = -hbar c / (32 pi^2 a^3) * [c3 tau^3 - C4 tau^4 + O(tau^5)]
    dP(a,T) = -hbar c / (32 pi^2 a^4) * [C4 tau^4 + O(tau^5)]

with

    c3 = zeta(3) (eps0 - 1)^2 / (8 pi^2 (eps0 + 1))
    C4 = (sqrt(eps0) - 1) (eps0^2 + eps0 sqrt(eps0) - 2) / 720

and the entropy S = -dF/dT follows the universal tau^2 law written out in
:func:`entropy_lowT`; it vanishes as T -> 0.  Adding a nonzero dc
conductivity instead shifts the free energy by a term linear in T (see
:func:`dc_shift`) whose temperature derivative leaves the finite
zero-temperature entropy of :func:`nernst_entropy_dc` -- a violation of
the Nernst heat theorem, and the reason dc conductivity must be left out
of dielectric response models used for dispersion forces.

These formulas must not be pushed to eps0 -> infinity to recover the
ideal-metal limit: the tau -> 0 and eps0 -> infinity limits do not
commute.  Inputs above EPS0_WARN_LIMIT trigger a warning.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from functools import lru_cache

from .units import C_LIGHT, HBAR, K_B, tau_from

EPS0_WARN_LIMIT = 1e4


@lru_cache(maxsize=1)
def zeta3() -> float:
    """Riemann zeta(3) by the acceleration sum (5/2) Sum (-1)^(k-1) / (k^3 binom(2k,k)).

    Converges like 4^-k; cached after the first call.
    """
    total = 0.0
    binom = 2.0  # binom(2k, k) at k = 1
    k = 1
    sign = 1.0
    while True:
        term = sign / (k ** 3 * binom)
        total += term
        if abs(term) < 1e-18 * abs(total):
            return 2.5 * total
        binom *= 2.0 * (2 * k + 1) / (k + 1)
        k += 1
        sign = -sign


def li3(z: float) -> float:
    """Trilogarithm Li3(z) = Sum_{k>=1} z^k / k^3 on 0 <= z < 1.

    Terms are accumulated and compensated with math.fsum so the result is
    accurate to ~1e-15 absolute even close to z = 1 (cost grows like
    1/(1-z) there).
    """
    if not (0.0 <= z < 1.0) or not math.isfinite(z):
        raise ValueError(f"li3 domain is [0, 1), got {z}")
    if z == 0.0:
        return 0.0
    terms = []
    power = z
    k = 1
    while True:
        terms.append(power / k ** 3)
        # geometric bound on the remaining tail
        if power * z / ((k + 1) ** 3 * (1.0 - z)) < 1e-17:
            return math.fsum(terms)
        power *= z
        k += 1


def _check_eps0(eps0: float) -> None:
    if not (math.isfinite(eps0) and eps0 >= 1.0):
        raise ValueError(f"eps0 must be finite and >= 1, got {eps0}")
    if eps0 > EPS0_WARN_LIMIT:
        warnings.warn(
            f"eps0={eps0:.3g} is above {EPS0_WARN_LIMIT:.0e}; the low-temperature "
            "expansion does not approach the ideal-metal limit and its "
            "coefficients become unreliable",
            stacklevel=3,
        )


def coeff_c3(eps0: float) -> float:
    """tau^3 coefficient zeta(3) (eps0-1)^2 / (8 pi^2 (eps0+1)) of the bracket."""
    _check_eps0(eps0)
    return zeta3() * (eps0 - 1.0) ** 2 / (8.0 * math.pi ** 2 * (eps0 + 1.0))


def coeff_C4(eps0: float) -> float:
    """tau^4 coefficient (sqrt(eps0)-1)(eps0^2 + eps0 sqrt(eps0) - 2) / 720."""
    _check_eps0(eps0)
    root = math.sqrt(eps0)
    return (root - 1.0) * (eps0 * eps0 + eps0 * root - 2.0) / 720.0


@dataclass(frozen=True)
class AsymptoticCoefficients:
    """Dimensionless expansion coefficients for a given eps0.

    ``c3_F`` and ``C4`` belong to the free-energy bracket above; ``s2_S``
    and ``s3_S`` are the tau^2 and tau^3 entropy coefficients in units of
    k_B / (8 pi a^2), i.e. S = k_B/(8 pi a^2) * (s2_S tau^2 + s3_S tau^3).
    """

    c3_F: float
    C4: float
    s2_S: float
    s3_S: float


def coefficients(eps0: float) -> AsymptoticCoefficients:
    c3 = coeff_c3(eps0)
    C4 = coeff_C4(eps0)
    return AsymptoticCoefficients(c3_F=c3, C4=C4, s2_S=3.0 * c3, s3_S=-4.0 * C4)


def free_energy_lowT(eps0: float, a: float, T: float) -> float:
    """Thermal part of the low-temperature free energy, in J/m^2.

    Returns -hbar c/(32 pi^2 a^3) (c3 tau^3 - C4 tau^4); the
    temperature-independent E(a) is *not* included.  Meaningful for
    tau << 1; no hard cutoff is enforced.
    """
    tau = tau_from(a, T)
    bracket = coeff_c3(eps0) * tau ** 3 - coeff_C4(eps0) * tau ** 4
    return -HBAR * C_LIGHT / (32.0 * math.pi ** 2 * a ** 3) * bracket


def pressure_lowT(eps0: float, a: float, T: float) -> float:
    """Thermal part of the low-temperature pressure: -hbar c/(32 pi^2 a^4) C4 tau^4."""
    tau = tau_from(a, T)
    return -HBAR * C_LIGHT / (32.0 * math.pi ** 2 * a ** 4) * coeff_C4(eps0) * tau ** 4


def entropy_lowT(eps0: float, a: float, T: float) -> float:
    """Low-temperature entropy per unit area, in J/(K m^2).

    S = 3 k_B zeta(3) (eps0-1)^2 / (64 pi^3 a^2 (eps0+1)) * tau^2
        * [1 - 2 pi^2 (eps0+1)(eps0 sqrt(eps0) + 2 eps0 + 2 sqrt(eps0) + 2)
             / (135 zeta(3) (sqrt(eps0)+1)^2) * tau]

    which is exactly -d/dT of E(a) + free_energy_lowT and vanishes from
    above as T -> 0.
    """
    _check_eps0(eps0)
    tau = tau_from(a, T)
    root = math.sqrt(eps0)
    lead = (3.0 * K_B * zeta3() * (eps0 - 1.0) ** 2
            / (64.0 * math.pi ** 3 * a ** 2 * (eps0 + 1.0)))
    correction = (2.0 * math.pi ** 2 * (eps0 + 1.0)
                  * (eps0 * root + 2.0 * eps0 + 2.0 * root + 2.0)
                  / (135.0 * zeta3() * (root + 1.0) ** 2))
    return lead * tau ** 2 * (1.0 - correction * tau)


def _zeta3_minus_li3(eps0: float) -> float:
    z = ((eps0 - 1.0) / (eps0 + 1.0)) ** 2
    return zeta3() - li3(z)


def dc_shift(eps0: float, a: float, T: float) -> float:
    """Free-energy shift from including dc conductivity, in J/m^2.

    -k_B T/(16 pi a^2) * {zeta(3) - Li3[((eps0-1)/(eps0+1))^2]}: the part
    of the shift linear in T.  The remainder decays exponentially as
    T -> 0 and is left to numerical evaluation (thermo module).
    """
    _check_eps0(eps0)
    if T <= 0:
        raise ValueError(f"temperature must be positive, got T={T}")
    return -K_B * T / (16.0 * math.pi * a ** 2) * _zeta3_minus_li3(eps0)


def nernst_entropy_dc(eps0: float, a: float) -> float:
    """Zero-temperature entropy left by the dc-conductivity term, in J/(K m^2).

    k_B/(16 pi a^2) * {zeta(3) - Li3[((eps0-1)/(eps0+1))^2]} > 0 for every
    finite eps0 >= 1: the Nernst heat theorem is violated.
    """
    _check_eps0(eps0)
    return K_B / (16.0 * math.pi * a ** 2) * _zeta3_minus_li3(eps0)
