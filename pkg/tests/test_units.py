"""Constants, dimensionless variables and their consistency."""

import dataclasses
import math

import numpy as np
import pytest

from lifshitz_plates.units import (
    CODATA,
    PhysicalConstants,
    PlateConfig,
    matsubara_xi,
    matsubara_zeta,
    tau_from,
    xi_characteristic,
)

# independent arithmetic from the SI-defined constant values
HBAR_REF = 1.054571817e-34
C_REF = 299792458.0
KB_REF = 1.380649e-23


def test_constants_values_and_immutability():
    assert CODATA.hbar == HBAR_REF
    assert CODATA.c == C_REF
    assert CODATA.k_B == KB_REF
    with pytest.raises(dataclasses.FrozenInstanceError):
        CODATA.hbar = 1.0
    with pytest.raises(ValueError):
        PhysicalConstants(hbar=-1.0)


def test_tau_zero_at_zero_temperature():
    assert tau_from(1e-6, 0.0) == 0.0


def test_tau_reference_point():
    expected = 4.0 * math.pi * KB_REF * 1e-6 * 300.0 / (HBAR_REF * C_REF)
    value = tau_from(1e-6, 300.0)
    assert value == pytest.approx(expected, rel=1e-15)
    assert value == pytest.approx(1.6463324471978948, rel=1e-12)


def test_tau_product_invariance():
    assert tau_from(2e-6, 150.0) == pytest.approx(tau_from(1e-6, 300.0), rel=1e-15)


def test_tau_linearity():
    rng = np.random.default_rng(7)
    for _ in range(20):
        a = float(rng.uniform(1e-8, 1e-5))
        T = float(rng.uniform(0.1, 600.0))
        k = float(rng.uniform(0.5, 3.0))
        assert tau_from(k * a, T) == pytest.approx(k * tau_from(a, T), rel=1e-14)
        assert tau_from(a, k * T) == pytest.approx(k * tau_from(a, T), rel=1e-14)


def test_tau_invalid_arguments():
    for a, T in [(0.0, 300.0), (-1e-6, 300.0), (1e-6, -1.0),
                 (math.nan, 300.0), (1e-6, math.inf)]:
        with pytest.raises(ValueError):
            tau_from(a, T)


def test_matsubara_zeta():
    assert matsubara_zeta(0, 0.3) == 0.0
    assert matsubara_zeta(1, 0.3) == 0.3
    assert matsubara_zeta(7, 0.25) == pytest.approx(1.75, rel=1e-15)
    with pytest.raises(ValueError):
        matsubara_zeta(-1, 0.3)
    with pytest.raises(ValueError):
        matsubara_zeta(1, math.nan)


def test_matsubara_xi():
    assert matsubara_xi(0, 300.0) == 0.0
    expected = 2.0 * math.pi * KB_REF * 300.0 / HBAR_REF
    assert matsubara_xi(1, 300.0) == pytest.approx(expected, rel=1e-15)
    assert matsubara_xi(1, 300.0) == pytest.approx(2.468e14, rel=1e-3)
    assert matsubara_xi(2, 150.0) == pytest.approx(matsubara_xi(1, 300.0), rel=1e-15)


def test_zeta_times_xic_equals_xi():
    rng = np.random.default_rng(11)
    for _ in range(30):
        a = float(rng.uniform(1e-8, 1e-5))
        T = float(rng.uniform(0.1, 600.0))
        l = int(rng.integers(0, 50))
        lhs = matsubara_zeta(l, tau_from(a, T)) * xi_characteristic(a)
        rhs = matsubara_xi(l, T)
        assert lhs == pytest.approx(rhs, rel=1e-14, abs=1e-30)


def test_plate_config():
    cfg = PlateConfig(a=1e-6, T=300.0)
    assert cfg.tau == tau_from(1e-6, 300.0)
    assert cfg.xi_c == C_REF / 2e-6
    assert PlateConfig(a=1e-6, T=0.0).tau == 0.0
    for a, T in [(0.0, 300.0), (1e-6, -1.0), (math.inf, 1.0)]:
        with pytest.raises(ValueError):
            PlateConfig(a=a, T=T)
