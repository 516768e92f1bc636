"""Reflection coefficients and the free-energy / pressure integrands.

Everything is expressed in the dimensionless pair (zeta, y) with y >= zeta.
With s = sqrt(y^2 + zeta^2 (eps - 1)) the two squared Fresnel amplitudes
are

    r_par^2  = [(eps y - s) / (eps y + s)]^2        (TM)
    r_perp^2 = [(s - y) / (s + y)]^2                (TE)

and the integrands are

    f(zeta, y)   = y [ln(1 - r_par^2 e^-y) + ln(1 - r_perp^2 e^-y)]   <= 0
    p(zeta, y)   = y^2 [r_par^2/(e^y - r_par^2) + r_perp^2/(e^y - r_perp^2)]  >= 0

Only the squares ever appear, which keeps the analytic continuation
zeta -> x (complex) single-valued once the principal square root
(Re >= 0, continuous from the positive real axis) is chosen for s.

The divergent-permittivity marker of the dc-conductivity model is resolved
here: it maps to r_par^2 = 1 and r_perp^2 = 0, the eps -> infinity limit
at zeta = 0, which is the only place the marker can occur.
"""

from __future__ import annotations

import cmath
import math
from typing import NamedTuple, Union

from .errors import DomainError
from .permittivity import DIVERGENT, Divergent, Permittivity


class ReflectionSquares(NamedTuple):
    """Squared reflection amplitudes for the two polarizations."""

    r_par_sq: Union[float, complex]
    r_perp_sq: Union[float, complex]


def reflection_squares(eps: Permittivity, zeta: float, y: float) -> ReflectionSquares:
    """Squared reflection coefficients at real (zeta, y).

    Parameters
    ----------
    eps : float >= 1, or the DIVERGENT marker
        permittivity at the imaginary frequency belonging to zeta
    zeta : float >= 0
    y : float > 0

    The marker is only legal at zeta = 0 and yields (1, 0).
    """
    if not (y > 0) or not math.isfinite(y):
        raise ValueError(f"y must be positive and finite, got {y}")
    if isinstance(eps, Divergent):
        if zeta != 0.0:
            raise ValueError("divergent permittivity marker is only valid at zeta = 0")
        return ReflectionSquares(1.0, 0.0)
    if not math.isfinite(eps) or eps < 1.0:
        raise ValueError(f"eps must be finite and >= 1, got {eps}")
    if zeta < 0 or not math.isfinite(zeta):
        raise ValueError(f"zeta must be nonnegative and finite, got {zeta}")
    s = math.sqrt(y * y + zeta * zeta * (eps - 1.0))
    r_par = (eps * y - s) / (eps * y + s)
    r_perp = (s - y) / (s + y)
    return ReflectionSquares(r_par * r_par, r_perp * r_perp)


def free_energy_integrand(eps: Permittivity, zeta: float, y: float) -> float:
    """y [ln(1 - r_par^2 e^-y) + ln(1 - r_perp^2 e^-y)], nonpositive."""
    rp2, rt2 = reflection_squares(eps, zeta, y)
    w = math.exp(-y)
    arg_par = rp2 * w
    arg_perp = rt2 * w
    if arg_par >= 1.0 or arg_perp >= 1.0:
        raise DomainError(f"log argument crossed zero at zeta={zeta}, y={y}")
    return y * (math.log1p(-arg_par) + math.log1p(-arg_perp))


def pressure_integrand(eps: Permittivity, zeta: float, y: float) -> float:
    """y^2 [r_par^2/(e^y - r_par^2) + r_perp^2/(e^y - r_perp^2)], nonnegative."""
    rp2, rt2 = reflection_squares(eps, zeta, y)
    w = math.exp(-y)
    den_par = 1.0 - rp2 * w
    den_perp = 1.0 - rt2 * w
    if den_par <= 0.0 or den_perp <= 0.0:
        raise DomainError(f"pressure denominator crossed zero at zeta={zeta}, y={y}")
    return y * y * (rp2 * w / den_par + rt2 * w / den_perp)


def reflection_squares_complex(eps0: float, x: complex,
                               y: Union[float, complex]) -> ReflectionSquares:
    """Squared reflection coefficients continued to complex zeta = x.

    Uses the principal square root of y^2 + x^2 (eps0 - 1) (branch with
    nonnegative real part), which is continuous from the physical real
    axis.  ``y`` may itself be complex, as needed on the shifted contour
    y = y_tilde + x.  Static permittivity only.
    """
    if not (math.isfinite(eps0) and eps0 >= 1.0):
        raise ValueError(f"eps0 must be finite and >= 1, got {eps0}")
    s = cmath.sqrt(y * y + x * x * (eps0 - 1.0))
    r_par = (eps0 * y - s) / (eps0 * y + s)
    r_perp = (s - y) / (s + y)
    return ReflectionSquares(r_par * r_par, r_perp * r_perp)


def free_energy_integrand_complex(eps0: float, x: complex,
                                  y: Union[float, complex]) -> complex:
    """Complex continuation of the free-energy integrand along zeta = x."""
    rp2, rt2 = reflection_squares_complex(eps0, x, y)
    w = cmath.exp(-y)
    value = y * (cmath.log(1.0 - rp2 * w) + cmath.log(1.0 - rt2 * w))
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise DomainError(f"non-finite continued integrand at x={x}, y={y}")
    return value


def pressure_integrand_complex(eps0: float, x: complex,
                               y: Union[float, complex]) -> complex:
    """Complex continuation of the pressure integrand along zeta = x."""
    rp2, rt2 = reflection_squares_complex(eps0, x, y)
    w = cmath.exp(-y)
    value = y * y * (rp2 * w / (1.0 - rp2 * w) + rt2 * w / (1.0 - rt2 * w))
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise DomainError(f"non-finite continued integrand at x={x}, y={y}")
    return value
