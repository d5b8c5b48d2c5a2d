"""Acceptance gate: the nine go/no-go checks for the release.

Every test prints a single PASS line with its headline numbers once its
assertions clear, so the tee'd run doubles as the acceptance report."""

import json
import math
import time

import numpy as np
import pytest

from janowski import (
    INCLUSION_ORIENTATION_NOTE,
    JanowskiParams,
    THEOREM_IDS,
    alpha_star,
    class_inclusion,
    critical_points,
    empirical_bounds,
    envelope_bounds,
    eval_map,
    image_disk,
    implication_trial,
    kernel_integral,
    macgregor_gamma,
    starlike_radius,
)

LN2 = math.log(2.0)


def _announce(label: str, detail: str) -> None:
    print(f"[PASS] {label}: {detail}")


def _random_safe_params(rng, powered=True):
    """Draw argument-safe parameters: |A| <= 1, |B| < 1 keeps the origin out
    of the first-order image of the disk."""
    while True:
        A = rng.uniform(0.2, 1.0) * np.exp(2j * np.pi * rng.uniform())
        B = rng.uniform(0.0, 0.9) * np.exp(2j * np.pi * rng.uniform())
        if abs(A - B) > 0.05:
            break
    alpha = rng.uniform(0.3, 1.0) if powered else 1.0
    return JanowskiParams(complex(A), complex(B), float(alpha))


def test_criterion_1_square_root_envelope():
    """(1+z)^(1/2) on r = 1: critical angles, box and quarter-plane sector."""
    start = time.perf_counter()
    p = JanowskiParams(1.0, 0.0, 0.5)
    c = critical_points(p, 1.0)
    b = envelope_bounds(p, 1.0)
    elapsed = time.perf_counter() - start

    assert c.t1 == pytest.approx(0.0, abs=1e-9)
    assert c.t2 == pytest.approx(2.0 * math.pi / 3.0, abs=1e-9)
    assert b.re[0] == pytest.approx(0.0, abs=1e-6)
    assert b.re[1] == pytest.approx(math.sqrt(2.0), abs=1e-6)
    assert b.im[0] == pytest.approx(-0.5, abs=1e-6)
    assert b.im[1] == pytest.approx(0.5, abs=1e-6)
    assert max(abs(b.arg[0]), abs(b.arg[1])) <= math.pi / 4.0 + 1e-9
    assert elapsed < 1.0
    _announce(
        "criterion 1",
        f"t1={c.t1:.3e} t2={c.t2:.12f} re=({b.re[0]:.2e}, {b.re[1]:.9f}) "
        f"im=({b.im[0]:.6f}, {b.im[1]:.6f}) |arg|<=pi/4 in {elapsed:.3f}s",
    )


def test_criterion_2_alpha_star_equation():
    """The turning-angle constant solves 2a + (2/pi) atan a = 1 to 1e-12.

    Printed references carry a transposed digit (…44486 for …44860); the
    equation residual is the binding check, so the root is pinned to the
    first eight digits of the true solution."""
    a = alpha_star()
    residual = 2.0 * a + (2.0 / math.pi) * math.atan(a) - 1.0
    assert abs(residual) < 1e-12
    assert f"{a:.8f}" == "0.38344860"
    _announce("criterion 2", f"alpha*={a:.8f} residual={residual:.2e}")


def test_criterion_3_macgregor_values():
    g_half = macgregor_gamma(0.5)
    g_zero = macgregor_gamma(0.0)
    assert abs(g_half - 1.0 / (2.0 * LN2)) < 1e-9
    assert g_zero == 0.5
    _announce("criterion 3", f"gamma(1/2)={g_half:.10f} gamma(0)={g_zero}")


def test_criterion_4_envelope_bounds_against_sampling():
    """100 seeded argument-safe draws: closed endpoints vs 2e5-point extrema."""
    start = time.perf_counter()
    rng = np.random.default_rng(41)
    worst = 0.0
    for _ in range(100):
        p = _random_safe_params(rng)
        r = rng.uniform(0.2, 0.95)
        closed = envelope_bounds(p, r)
        sampled = empirical_bounds(p, r, n=200_000)
        for name in ("arg", "mod", "re", "im"):
            for a, b in zip(getattr(closed, name), getattr(sampled, name)):
                worst = max(worst, abs(a - b))
    elapsed = time.perf_counter() - start
    assert worst < 1e-5
    assert elapsed < 60.0
    _announce("criterion 4", f"100 cases, worst endpoint gap {worst:.2e} in {elapsed:.1f}s")


def test_criterion_5_kernel_closed_vs_quadrature():
    rng = np.random.default_rng(5)
    cases = {
        "A!=0,b!=0": (1.0, 1.0),
        "A=0,b!=0": (0.0, 1.0),
        "A!=0,b=0": (0.7 + 0.4j, 0.0),
    }
    worst = 0.0
    for label, (A, b) in cases.items():
        for _ in range(20):
            z = 0.8 * math.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform())
            closed = kernel_integral(A, b, 1.0, complex(z), method="closed")
            quad = kernel_integral(A, b, 1.0, complex(z), method="quad")
            worst = max(worst, abs(closed - quad))
    assert worst < 1e-8
    _announce("criterion 5", f"3 cases x 20 points, worst |closed - quad| = {worst:.2e}")


def test_criterion_6_starlike_radius_grid():
    # grid restricted to parameters whose angle equation has a root in the
    # disk: (A - B)/(1 - A B) must clear sin((1 - alpha*) pi / (2 beta))
    worst = 0.0
    for A in np.linspace(0.6, 1.0, 5):
        for B in np.linspace(-1.0, -0.6, 5):
            for beta in (1.0, 1.25, 1.5):
                closed = starlike_radius(float(A), float(B), beta)
                bisect = starlike_radius(float(A), float(B), beta, method="bisect")
                worst = max(worst, abs(closed.value - bisect.value))
    assert worst < 1e-9
    anchor = starlike_radius(1.0, -1.0, 1.0).value
    assert anchor == pytest.approx(0.526, abs=5e-4)
    _announce(
        "criterion 6",
        f"75-point grid, worst |closed - bisect| = {worst:.2e}; r0(1,-1,1) = {anchor:.6f}",
    )


def test_criterion_7_implication_trials():
    """>= 350 randomized trials with zero hypothesis-true/conclusion-false."""
    start = time.perf_counter()
    total = 0
    fired = 0
    unsound = []
    for tid in THEOREM_IDS:
        for seed in range(50):
            rep = implication_trial(tid, seed=seed)
            total += 1
            fired += rep.hypothesis_holds
            if not rep.sound:
                unsound.append((tid, seed))
    elapsed = time.perf_counter() - start
    assert total >= 350
    assert not unsound, f"unsound trials: {unsound}"
    _announce(
        "criterion 7",
        f"{total} trials across {len(THEOREM_IDS)} claims, hypothesis fired {fired}x, "
        f"0 unsound in {elapsed:.1f}s",
    )


def test_criterion_8_inclusion_order_grid():
    orders = np.arange(0.0, 1.0, 0.1)
    for a1 in orders:
        for a2 in orders:
            got = class_inclusion(1.0 - 2.0 * a1, -1.0, 1.0, 1.0 - 2.0 * a2, -1.0, 1.0)
            assert got == (a1 <= a2 + 1e-12), (a1, a2)
    assert "order" in INCLUSION_ORIENTATION_NOTE and "reversed" in INCLUSION_ORIENTATION_NOTE
    _announce(
        "criterion 8",
        "10x10 order grid nests iff a1 <= a2; orientation note: "
        + json.dumps(INCLUSION_ORIENTATION_NOTE[:60] + "..."),
    )


def test_criterion_9_boundary_on_reported_circle():
    rng = np.random.default_rng(9)
    t = np.linspace(0.0, 2.0 * np.pi, 1000, endpoint=False)
    worst = 0.0
    for _ in range(100):
        p = _random_safe_params(rng, powered=False)
        r = rng.uniform(0.1, 0.95)
        geo = image_disk(p, r)
        w = eval_map(p, r * np.exp(1j * t))
        worst = max(worst, float(np.max(np.abs(np.abs(w - geo.center) - geo.radius))))
    assert worst < 1e-12
    _announce("criterion 9", f"100 random maps x 1000 boundary points, worst residual {worst:.2e}")
