"""Series, integral kernels and explicit dominants."""

import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.special import spence

from janowski import (
    DominantSpec,
    JanowskiParams,
    NoConvergenceError,
    NonCaratheodoryLambdaError,
    OutOfRangeError,
    ParameterError,
    best_dominant,
    eval_powered,
    hyper_3f2,
    kernel_integral,
    macgregor_gamma,
    operator_dominant,
    silverman_inclusion,
)

LN2 = math.log(2.0)


def dilog(x: float) -> float:
    # scipy's spence uses the complementary argument convention
    return float(spence(1.0 - x))


class TestHyper3F2:
    def test_dilog_point(self):
        got = hyper_3f2(1.0, 1.0, 1.0, 2.0, 2.0, 0.5)
        assert got.real == pytest.approx(math.pi**2 / 6.0 - LN2**2, abs=1e-13)
        assert got.imag == 0.0

    @pytest.mark.parametrize("x", [0.1 * k for k in range(1, 10)])
    def test_dilog_identity(self, x):
        assert (hyper_3f2(1.0, 1.0, 1.0, 2.0, 2.0, x) * x).real == pytest.approx(
            dilog(x), abs=1e-12
        )

    @pytest.mark.parametrize("x", [0.15, 0.5, 0.85])
    def test_log_collapse(self, x):
        # one numerator unit above the denominators leaves a pure log
        got = hyper_3f2(1.0, 1.0, 2.0, 2.0, 2.0, x)
        assert got.real == pytest.approx(-math.log1p(-x) / x, abs=1e-12)

    def test_terminating_series(self):
        # a1 = -2 terminates after three terms
        got = hyper_3f2(-2.0, 1.0, 1.0, 2.0, 2.0, 0.7)
        want = 1.0 - 2.0 * 0.7 / 4.0 + (2.0 * 2.0 * 2.0 / (6.0 * 6.0 * 2.0)) * 0.49
        assert got.real == pytest.approx(want, abs=1e-14)

    def test_divergent_series_raises(self):
        with pytest.raises(NoConvergenceError):
            hyper_3f2(2.0, 2.0, 2.0, 2.0, 2.0, 1.0)

    def test_nonpositive_denominator_rejected(self):
        with pytest.raises(ParameterError):
            hyper_3f2(1.0, 1.0, 1.0, -1.0, 2.0, 0.5)

    @given(st.floats(0.05, 0.9), st.floats(0.5, 2.5), st.floats(0.5, 2.5))
    @settings(max_examples=40)
    def test_numerator_symmetry(self, x, a, b):
        left = hyper_3f2(a, b, 1.0, 2.0, 2.0, x)
        right = hyper_3f2(b, a, 1.0, 2.0, 2.0, x)
        assert abs(left - right) < 1e-12


class TestKernelIntegral:
    def test_geometric_closed_form(self):
        # alpha = 1, A = 1, b = 1 integrates to z/(1-z)
        assert kernel_integral(1.0, 1.0, 1.0, 0.5, method="closed") == pytest.approx(1.0)

    def test_exponential_closed_form(self):
        # b = 0 keeps only the entire part; at z = 1 the value is e - 1
        got = kernel_integral(1.0, 0.0, 1.0, 1.0, method="closed")
        assert got == pytest.approx(math.e - 1.0, abs=1e-12)

    @pytest.mark.parametrize(
        "A,b",
        [(1.0, 1.0), (0.0, 1.0), (1.0, 0.0), (0.5 + 0.3j, 0.7)],
    )
    def test_quadrature_matches_closed(self, A, b):
        for z in (0.3, -0.25 + 0.4j, 0.6j):
            c = kernel_integral(A, b, 1.0, z, method="closed")
            q = kernel_integral(A, b, 1.0, z, method="quad")
            assert abs(c - q) < 1e-10

    def test_fractional_power_small_z_series(self):
        # first terms: z + alpha (A + b) z^2 / 2 + O(z^3)
        A, b, alpha, z = 0.8, 0.5, 0.5, 1e-3
        got = kernel_integral(A, b, alpha, z)
        assert abs(got - (z + alpha * (A + b) * z * z / 2.0)) < 1e-8

    def test_domain_respects_pole(self):
        with pytest.raises(OutOfRangeError):
            kernel_integral(1.0, 0.5, 1.0, 2.5)
        # b = 0 removes the pole entirely, |z| >= 1 is fine
        assert cmath.isfinite(kernel_integral(0.5, 0.0, 1.0, 1.5))


class TestMacgregorGamma:
    def test_half_is_reciprocal_log(self):
        assert macgregor_gamma(0.5) == pytest.approx(1.0 / (2.0 * LN2), abs=1e-12)

    def test_zero_is_exactly_half(self):
        assert macgregor_gamma(0.0) == 0.5

    def test_quarter_surd(self):
        assert macgregor_gamma(0.25) == pytest.approx((math.sqrt(2.0) + 1.0) / 4.0)

    def test_continuity_at_the_removable_point(self):
        center = 1.0 / (2.0 * LN2)
        assert abs(macgregor_gamma(0.5 - 1e-6) - center) < 1e-5
        assert abs(macgregor_gamma(0.5 + 1e-6) - center) < 1e-5

    def test_domain(self):
        with pytest.raises(OutOfRangeError):
            macgregor_gamma(1.0)

    @given(st.floats(0.0, 0.99))
    def test_piecewise_formula(self, beta):
        got = macgregor_gamma(beta)
        if abs(beta - 0.5) > 1e-9:
            want = (1.0 - 2.0 * beta) / (2.0 * (2.0 ** (1.0 - 2.0 * beta) - 1.0))
            assert got == pytest.approx(want, abs=1e-12)


class TestOperatorDominant:
    def test_origin_value_is_exact(self):
        spec = DominantSpec(
            A=0.7 + 0.3j, b=0.8, alpha=1.0, gamma=0.9,
            mu=1.0 + 0.1j, eta=1.0, delta=1.2, rho=0.2,
        )
        assert operator_dominant(spec, 0.0) == spec.mu * spec.delta + spec.mu * spec.rho
        assert spec.value_at_origin == operator_dominant(spec, 0.0)

    def test_derivative_sum_dominant(self):
        """mu = eta = delta = 1, rho = 0 is the image of p + zp' under the
        first-order base map; at A = b = 1 it is (1+2z-z^2)/(1-z)^2."""
        spec = DominantSpec(A=1.0, b=1.0, alpha=1.0, gamma=1.0, mu=1.0, eta=1.0, delta=1.0, rho=0.0)
        assert operator_dominant(spec, 0.5) == pytest.approx(7.0, abs=1e-12)
        z = 0.3 - 0.2j
        want = (1.0 + 2.0 * z - z * z) / (1.0 - z) ** 2
        assert operator_dominant(spec, z) == pytest.approx(want, abs=1e-12)

    def test_bracket_linear_in_weights(self):
        # halving mu and eta halves the whole dominant
        full = DominantSpec(A=1.0, b=1.0, alpha=1.0, gamma=1.0, mu=1.0, eta=1.0, delta=1.0, rho=0.0)
        half = DominantSpec(A=1.0, b=1.0, alpha=1.0, gamma=1.0, mu=0.5, eta=0.5, delta=1.0, rho=0.0)
        z = 0.5
        assert operator_dominant(half, z) == pytest.approx(operator_dominant(full, z) / 2.0)

    def test_gamma_zero_freezes_the_power(self):
        spec = DominantSpec(A=0.5, b=0.5, alpha=1.0, gamma=0.0, mu=0.7, eta=0.4, delta=1.1, rho=0.0)
        for z in (0.0, 0.4, -0.3 + 0.5j):
            assert operator_dominant(spec, z) == pytest.approx(0.7 * 1.1)

    def test_spec_validation(self):
        with pytest.raises(OutOfRangeError):
            DominantSpec(A=1.0, b=1.5, alpha=1.0, gamma=1.0, mu=1.0, eta=1.0, delta=1.0, rho=0.0)
        with pytest.raises(OutOfRangeError):
            DominantSpec(A=1.0, b=1.0, alpha=2.0, gamma=1.0, mu=1.0, eta=1.0, delta=1.0, rho=0.0)


class TestBestDominant:
    def test_exponential_quotient(self):
        got = best_dominant(lambda t: 1.0 + t, lambda t: 1.0, 0.5)
        want = 0.5 * math.exp(0.5) / (math.exp(0.5) - 1.0)
        assert got == pytest.approx(want, abs=1e-9)

    def test_exponential_quotient_on_a_disk_grid(self):
        """psi = 1 + z with unit weight must reproduce z e^z / (e^z - 1)."""
        psi = lambda t: complex(eval_powered(JanowskiParams(1.0, 0.0), t))
        rng = np.random.default_rng(5)
        for _ in range(12):
            z = 0.8 * math.sqrt(rng.uniform()) * cmath.exp(2j * math.pi * rng.uniform())
            got = best_dominant(psi, lambda t: 1.0, z)
            want = z * cmath.exp(z) / (cmath.exp(z) - 1.0)
            assert abs(got - want) < 1e-8

    def test_normalization_required(self):
        with pytest.raises(NonCaratheodoryLambdaError):
            best_dominant(lambda t: 1.0 + t, lambda t: 2.0, 0.5)
        with pytest.raises(ParameterError):
            best_dominant(lambda t: 2.0 + t, lambda t: 1.0, 0.5)

    def test_left_half_plane_weight_rejected(self):
        with pytest.raises(NonCaratheodoryLambdaError):
            best_dominant(lambda t: 1.0 + t, lambda t: 1.0 - 2.0 * t, 0.9)


class TestSilvermanInclusion:
    def test_boundary_case(self):
        # alpha = b = A = 1 reduces to 4 beta <= 2
        assert silverman_inclusion(1.0, 1.0, 1.0, 0.5)
        assert not silverman_inclusion(1.0, 1.0, 1.0, 0.5 + 1e-9)

    def test_generic_point(self):
        assert silverman_inclusion(0.5, 0.5, 0.8, 0.2)

    def test_cancellation_rejected(self):
        with pytest.raises(ParameterError):
            silverman_inclusion(-0.5, 0.5, 1.0, 0.3)

    @given(st.floats(0.05, 1.0), st.floats(0.0, 1.0), st.floats(0.1, 1.0))
    @settings(max_examples=40)
    def test_matches_printed_inequality(self, A, b, alpha):
        if A + b == 0.0:
            return
        beta = 0.3
        lhs = beta * (1.0 + b) ** (alpha - 1.0) * (1.0 + A) ** (alpha + 1.0)
        assert silverman_inclusion(A, b, alpha, beta) == (lhs <= alpha * (A + b))
