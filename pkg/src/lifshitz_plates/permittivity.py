"""Dielectric response models evaluated along the imaginary frequency axis.

Three models are provided:

* :class:`StaticModel` -- frequency-independent eps(i xi) = eps0.
* :class:`OscillatorModel` -- undamped oscillator sum
  eps(i xi) = 1 + sum_j C_j / (1 + xi^2 / w_j^2), monotonically decreasing
  from 1 + sum C_j at xi = 0 towards 1.
* :class:`DcConductivityModel` -- any base model plus the zero-frequency
  conductivity term 4 pi sigma0(T) / xi (Gaussian convention, sigma0 in
  rad/s), which diverges at xi = 0.  At xi = 0 evaluation returns the
  :data:`DIVERGENT` marker instead of a number; the kernel module resolves
  that marker into the eps -> infinity limit of the reflection
  coefficients.  The activated form sigma0(T) = sigma_ref exp(-b/T) makes
  the dimensionless strength beta(T) = 2 hbar sigma0 / (k_B T) vanish
  exponentially as T -> 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

from .units import HBAR, K_B, matsubara_xi


class Divergent:
    """Marker for a permittivity that diverges at zero frequency."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "DIVERGENT"


DIVERGENT = Divergent()

Permittivity = Union[float, Divergent]


@dataclass(frozen=True)
class StaticModel:
    """Frequency-independent dielectric response eps(i xi) = eps0."""

    eps0: float

    def __post_init__(self):
        if not (math.isfinite(self.eps0) and self.eps0 >= 1.0):
            raise ValueError(f"eps0 must be finite and >= 1, got {self.eps0}")


@dataclass(frozen=True)
class OscillatorModel:
    """Oscillator-sum response along the imaginary axis.

    Parameters
    ----------
    oscillators : tuple of (C_j, w_j)
        dimensionless strengths C_j > 0 and frequencies w_j > 0 in rad/s.
        The static limit is eps(i0) = 1 + sum_j C_j.
    """

    oscillators: tuple[tuple[float, float], ...]

    def __post_init__(self):
        if not self.oscillators:
            raise ValueError("at least one oscillator is required")
        for C_j, w_j in self.oscillators:
            if not (math.isfinite(C_j) and C_j > 0):
                raise ValueError(f"oscillator strength must be positive, got {C_j}")
            if not (math.isfinite(w_j) and w_j > 0):
                raise ValueError(f"oscillator frequency must be positive, got {w_j}")

    @property
    def eps_static(self) -> float:
        return 1.0 + sum(C_j for C_j, _ in self.oscillators)


@dataclass(frozen=True)
class DcConductivityModel:
    """Base dielectric plus activated dc conductivity.

    sigma0(T) = sigma_ref * exp(-b / T) with sigma_ref in rad/s (Gaussian
    convention) and activation temperature b in K.  At the Matsubara
    frequencies the added term is beta(T) / l with the single dimensionless
    strength beta(T) = 2 hbar sigma0(T) / (k_B T).
    """

    base: Union[StaticModel, OscillatorModel]
    sigma_ref: float
    b: float

    def __post_init__(self):
        if not (math.isfinite(self.sigma_ref) and self.sigma_ref >= 0):
            raise ValueError(f"sigma_ref must be nonnegative, got {self.sigma_ref}")
        if not (math.isfinite(self.b) and self.b >= 0):
            raise ValueError(f"activation temperature must be nonnegative, got {self.b}")

    def sigma0(self, T: Optional[float] = None) -> float:
        """dc conductivity in rad/s; T is only needed when b > 0."""
        if self.b == 0.0:
            return self.sigma_ref
        if T is None or T <= 0:
            raise ValueError("activated conductivity (b > 0) needs T > 0")
        return self.sigma_ref * math.exp(-self.b / T)

    def beta(self, T: float) -> float:
        """Dimensionless conductivity strength 2 hbar sigma0(T) / (k_B T)."""
        if T <= 0:
            raise ValueError(f"temperature must be positive, got T={T}")
        return 2.0 * HBAR * self.sigma0(T) / (K_B * T)

    @classmethod
    def with_beta(cls, base: Union[StaticModel, OscillatorModel], beta: float,
                  T: float) -> "DcConductivityModel":
        """Construct so that beta(T) equals the given value exactly (b = 0)."""
        if not (math.isfinite(beta) and beta >= 0):
            raise ValueError(f"beta must be nonnegative, got {beta}")
        if T <= 0:
            raise ValueError(f"temperature must be positive, got T={T}")
        return cls(base=base, sigma_ref=beta * K_B * T / (2.0 * HBAR), b=0.0)


Model = Union[StaticModel, OscillatorModel, DcConductivityModel]


def eval_at_imaginary(model: Model, xi: float,
                      T: Optional[float] = None) -> Permittivity:
    """Evaluate eps(i xi) for xi >= 0 in rad/s.

    Returns a float >= 1 for static and oscillator models.  For a
    :class:`DcConductivityModel` at xi > 0 the result is
    eps_base(i xi) + 4 pi sigma0 / xi (T fixes sigma0 when b > 0); at
    xi = 0 it is the :data:`DIVERGENT` marker, which only the kernel's
    l = 0 handling consumes.
    """
    if not math.isfinite(xi) or xi < 0:
        raise ValueError(f"imaginary frequency must be finite and >= 0, got {xi}")
    if isinstance(model, StaticModel):
        return model.eps0
    if isinstance(model, OscillatorModel):
        return 1.0 + sum(C_j / (1.0 + (xi / w_j) ** 2) for C_j, w_j in model.oscillators)
    if isinstance(model, DcConductivityModel):
        base = eval_at_imaginary(model.base, xi)
        if model.sigma_ref == 0.0:
            return base
        if xi == 0.0:
            return DIVERGENT
        return base + 4.0 * math.pi * model.sigma0(T) / xi
    raise TypeError(f"unknown permittivity model {type(model).__name__}")


def eval_at_matsubara(model: Model, l: int, T: float) -> Permittivity:
    """eps at the l-th Matsubara frequency xi_l = 2 pi k_B T l / hbar.

    For the dc-wrapped model this is eps_l + beta(T) / l at l >= 1 and the
    :data:`DIVERGENT` marker at l = 0.
    """
    if l < 0:
        raise ValueError(f"Matsubara index must be nonnegative, got l={l}")
    if isinstance(model, DcConductivityModel) and model.sigma_ref > 0.0 and T <= 0:
        raise ValueError("DcConductivityModel requires T > 0")
    return eval_at_imaginary(model, matsubara_xi(l, T), T)


def static_limit(model: Model) -> float:
    """eps(i0) of the underlying dielectric response (dc term excluded)."""
    if isinstance(model, StaticModel):
        return model.eps0
    if isinstance(model, OscillatorModel):
        return model.eps_static
    if isinstance(model, DcConductivityModel):
        return static_limit(model.base)
    raise TypeError(f"unknown permittivity model {type(model).__name__}")


def is_dispersive(model: Model) -> bool:
    """True when eps(i xi) actually varies with xi (or carries a dc term)."""
    if isinstance(model, StaticModel):
        return False
    if isinstance(model, OscillatorModel):
        return True
    if isinstance(model, DcConductivityModel):
        return model.sigma_ref > 0.0 or is_dispersive(model.base)
    raise TypeError(f"unknown permittivity model {type(model).__name__}")
