"""Sector parameter calculus for quotient, derivative and weighted claims."""

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from janowski import (
    ConditionFailedError,
    DegenerateMapError,
    NegativeRealPartError,
    OutOfRangeError,
    derivative_sector_params,
    double_subordination_tilt,
    eta_infimum,
    ratio_sector_params,
    reciprocal_order_sector,
    weighted_sector_params,
)


def _mu_hand(alpha, m, beta, a_mag, phi, sign):
    """Direct transcription of the one-sided opening exponent."""
    num = alpha * beta * (1.0 - a_mag) * math.cos(phi)
    den = 1.0 + a_mag - sign * alpha * beta * (1.0 - a_mag) * math.sin(phi)
    return 1.0 + sign * m + (2.0 / (alpha * math.pi)) * math.atan(num / den)


def test_ratio_sector_symmetric_case():
    s = ratio_sector_params(0.5, 0.0, 1.0, 0.0)
    want = 1.0 + (2.0 / (0.5 * math.pi)) * math.atan(0.5)
    assert s.mu1 == pytest.approx(want)
    assert s.mu2 == pytest.approx(want)
    assert s.mu == pytest.approx(0.0)
    assert s.delta == pytest.approx(want)
    assert s.a_mag == 0.0


@given(
    st.floats(0.3, 1.0),
    st.floats(-0.5, 0.5),
    st.floats(0.2, 1.0),
    st.floats(-1.2, 1.2),
)
def test_ratio_sector_matches_hand_formula(alpha, m, beta, phi):
    s = ratio_sector_params(alpha, m, beta, phi)
    assert s.mu1 == pytest.approx(_mu_hand(alpha, m, beta, s.a_mag, phi, -1.0), abs=1e-12)
    assert s.mu2 == pytest.approx(_mu_hand(alpha, m, beta, s.a_mag, phi, +1.0), abs=1e-12)


def test_derivative_sector_frozen():
    s, arg_bound = derivative_sector_params(0.5, 0.25)
    assert s.a_mag == pytest.approx(math.tan(math.pi / 16.0))
    want = 0.5 * math.pi + math.atan2(0.5 * (1.0 - s.a_mag), 1.0 + s.a_mag)
    assert arg_bound == pytest.approx(want)


def test_weighted_sector_frozen():
    s = weighted_sector_params(0.5, 0.7, 0.3, 0.0, 1.0)
    assert s.mu1 == pytest.approx(0.5 * 0.7 + (2.0 * 0.3 / math.pi) * math.atan(1.0))
    assert s.mu1 == s.mu2
    assert s.eta == 1.0


def test_weighted_sector_tilt_shifts_edges():
    sym = weighted_sector_params(0.5, 0.7, 0.3, 0.0, 1.0)
    tilted = weighted_sector_params(0.5, 0.7, 0.3, 0.3, 1.0)
    assert tilted.mu2 - tilted.mu1 == pytest.approx(2.0 * 0.5 * 0.7 * 0.3)
    assert tilted.mu1 + tilted.mu2 == pytest.approx(sym.mu1 + sym.mu2)


def test_eta_infimum_constant_weight_is_beta():
    for beta in (0.25, 0.7, 1.0):
        assert eta_infimum(lambda z: np.ones_like(z), beta) == pytest.approx(beta)


def test_eta_infimum_penalizes_imaginary_part():
    # inf of beta Re(w) / (1 + beta |Im w|): constant weights factor out
    assert eta_infimum(lambda z: 2.0 * np.ones_like(z), 0.8) == pytest.approx(1.6)
    assert eta_infimum(lambda z: (1.0 + 1.0j) * np.ones_like(z), 0.8) == pytest.approx(
        0.8 / 1.8
    )
    varying = eta_infimum(lambda z: 1.0 + 0.4 * z, 0.8)
    floor = 0.8 * 0.6 / (1.0 + 0.8 * 0.4)  # worst Re over worst |Im|
    assert floor - 1e-9 <= varying <= 0.8


def test_eta_infimum_rejects_left_half_plane_weight():
    with pytest.raises(NegativeRealPartError):
        eta_infimum(lambda z: 1.0 + 2.0 * z, 0.5)
    with pytest.raises(OutOfRangeError):
        eta_infimum(lambda z: np.ones_like(z), 0.0)


def test_reciprocal_order_sector_values():
    assert reciprocal_order_sector(0.0, 1.0) == pytest.approx(1.0)
    assert reciprocal_order_sector(0.25, 0.5) == pytest.approx(
        (2.0 / math.pi) * math.asin(0.5 / 0.75)
    )


def test_reciprocal_order_sector_domain():
    with pytest.raises(OutOfRangeError):
        reciprocal_order_sector(1.0, 0.5)
    with pytest.raises(OutOfRangeError):
        reciprocal_order_sector(0.5, 0.75)  # beta may not exceed 1 - alpha


def test_double_tilt_equal_weights():
    # each factor opens asin(4/5) when all four moduli are 1/2 and no tilt
    r = double_subordination_tilt(0.5, 0.5, 0.5, 0.5, 0.0, 0.0, 1.2)
    assert r.mu == pytest.approx(2.0 * math.asin(0.8))
    assert r.gamma == 0.0
    assert r.holds


def test_double_tilt_failure_modes():
    with pytest.raises(ConditionFailedError) as info:
        double_subordination_tilt(0.5, 0.5, 0.5, 0.5, 0.0, 0.0, 1.0)
    assert info.value.excess == pytest.approx(2.0 * math.asin(0.8) - math.pi / 2.0)
    report = double_subordination_tilt(0.5, 0.5, 0.5, 0.5, 0.0, 0.0, 1.0, strict=False)
    assert not report.holds
    assert report.excess > 0.0
    with pytest.raises(DegenerateMapError):
        double_subordination_tilt(1.0, 1.0, 1.0, 1.0, 0.0, 1.0, 1.0)
    with pytest.raises(OutOfRangeError):
        double_subordination_tilt(1.5, 0.5, 0.5, 0.5, 0.0, 0.0, 1.0)


@given(st.floats(0.05, 0.95), st.floats(0.05, 0.95))
def test_double_tilt_monotone_in_moduli(x, y):
    lo, hi = sorted((x, y))
    a = double_subordination_tilt(lo, lo, lo, lo, 0.0, 0.0, 2.0)
    b = double_subordination_tilt(hi, hi, hi, hi, 0.0, 0.0, 2.0)
    assert a.mu <= b.mu + 1e-12
