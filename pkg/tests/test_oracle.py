"""Subordination verification oracle: Schwarz witnesses, pullbacks and
randomized implication trials.

The trials are the library's own audit: each one builds a function that
satisfies the conclusion by construction, evaluates the hypothesis honestly,
and is sound exactly when no trial lands hypothesis-true/conclusion-false.
"""

import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from janowski import (
    BranchUndefinedError,
    InvalidTheoremIdError,
    JanowskiParams,
    OutOfRangeError,
    ParameterError,
    SchwarzPoly,
    THEOREM_IDS,
    TrialReport,
    eval_powered,
    implication_trial,
    random_schwarz,
    subordination_pullback,
    verify_subordination,
)
from tests.conftest import safe_params

GRID = np.exp(2j * np.pi * np.linspace(0.0, 1.0, 1024, endpoint=False))


class TestSchwarzPoly:
    def test_scaled_identity(self):
        c = 0.3 + 0.2j
        s = SchwarzPoly.scaled_identity(c)
        assert s.degree == 1
        assert abs(s.linear_coefficient - c) < 1e-15
        assert abs(s.value(1.0) - c) < 1e-15
        assert abs(s.value(0.5j) - c * 0.5j) < 1e-15

    def test_boundary_modulus_stays_below_one(self):
        for seed in range(8):
            s = random_schwarz(seed, 2 + seed)
            assert np.abs(s.value(GRID)).max() < 1.0

    def test_dilation_is_precomposition(self):
        s = random_schwarz(11, 6)
        d = s.dilated(0.55)
        z = GRID[:64]
        assert np.abs(d.value(z) - s.value(0.55 * z)).max() < 1e-14

    def test_deterministic(self):
        a = random_schwarz(42, 7)
        b = random_schwarz(42, 7)
        assert a.coefficients == b.coefficients
        assert a.scale == b.scale
        assert random_schwarz(43, 7).coefficients != a.coefficients

    def test_degree_one_draw_is_near_rotation(self):
        s = random_schwarz(9, 1)
        assert s.coefficients == (1.0 + 0.0j,)
        assert s.scale == pytest.approx(1.0 - 1e-6)

    def test_derivative_matches_difference_quotient(self):
        s = random_schwarz(4, 5)
        z, h = 0.4 + 0.1j, 1e-7
        fd = (s.value(z + h) - s.value(z - h)) / (2.0 * h)
        assert abs(s.deriv(z) - fd) < 1e-6

    def test_validation(self):
        with pytest.raises(ParameterError):
            SchwarzPoly((), 1.0)
        with pytest.raises(ParameterError):
            SchwarzPoly((1.0 + 0.0j,), 1.1)  # boundary modulus reaches 1.1
        with pytest.raises(OutOfRangeError):
            SchwarzPoly((1.0 + 0.0j,), -0.5)
        with pytest.raises(OutOfRangeError):
            random_schwarz(-1, 3)
        with pytest.raises(OutOfRangeError):
            random_schwarz(0, 17)
        with pytest.raises(OutOfRangeError):
            SchwarzPoly.scaled_identity(1.5)


class TestPullback:
    def test_round_trip_recovers_schwarz_modulus(self):
        target = JanowskiParams(0.8, -0.5, 0.5, 0.2)
        omega = SchwarzPoly.scaled_identity(0.45 + 0.3j)
        w = eval_powered(target, omega.value(GRID))
        q = subordination_pullback(w, target)
        assert np.abs(q - np.abs(omega.value(GRID))).max() < 1e-10

    @given(safe_params(), st.floats(0.1, 0.8))
    @settings(max_examples=20)
    def test_round_trip_property(self, target, rho):
        w = eval_powered(target, rho * GRID[:128])
        q = subordination_pullback(w, target)
        assert np.abs(q - rho).max() < 1e-9

    def test_cut_value_raises(self):
        target = JanowskiParams(0.8, -0.5, 0.5, 0.2)
        with pytest.raises(BranchUndefinedError):
            subordination_pullback(np.array([target.gamma - 0.5]), target)

    def test_verify_subordination_accepts_composites(self):
        target = JanowskiParams(1.0, 0.0, 0.5)
        omega = random_schwarz(6, 4).dilated(0.7)
        samples = eval_powered(target, omega.value(GRID))
        assert verify_subordination(samples, target)

    def test_verify_subordination_flags_escapes(self):
        target = JanowskiParams(1.0, 0.0, 0.5)
        too_far = eval_powered(target, 0.9 * GRID)
        assert not verify_subordination(too_far, target, r=0.5)
        assert verify_subordination(too_far, target, r=0.9 + 1e-12)

    def test_verify_subordination_needs_safe_target(self):
        # the inverse map is only single-valued on argument-safe targets
        unsafe = JanowskiParams(1.6, 0.0, 0.5)
        with pytest.raises(ParameterError):
            verify_subordination(np.array([1.0 + 0.1j]), unsafe)


class TestImplicationTrials:
    def test_theorem_ids_catalogue(self):
        assert set(THEOREM_IDS) == {"T3.3", "T3.6", "T5.4", "T5.5", "T5.7", "C5.12", "T5.10"}

    @pytest.mark.parametrize("tid", sorted({"T3.3", "T3.6", "T5.4", "T5.5", "T5.7", "C5.12", "T5.10"}))
    def test_trials_are_sound_on_smoke_seeds(self, tid):
        for seed in range(6):
            rep = implication_trial(tid, seed=seed)
            assert isinstance(rep, TrialReport)
            assert rep.theorem_id == tid
            assert rep.seed == seed
            assert rep.sound, f"{tid} seed {seed}: hypothesis true but conclusion false"

    def test_hypothesis_sometimes_fires(self):
        # a vacuous trial set would make soundness trivial
        fired = sum(implication_trial("T3.3", seed=s).hypothesis_holds for s in range(8))
        assert fired >= 4

    def test_unknown_id(self):
        with pytest.raises(InvalidTheoremIdError):
            implication_trial("T9.9")

    def test_negative_seed(self):
        with pytest.raises(OutOfRangeError):
            implication_trial("T5.5", seed=-3)

    def test_report_serializes_to_one_json_line(self):
        rep = implication_trial("T5.7", seed=1)
        line = rep.to_json()
        assert "\n" not in line
        data = json.loads(line)
        assert data["theorem_id"] == "T5.7"
        assert data["seed"] == 1
        assert isinstance(data["hypothesis_holds"], bool)
        assert isinstance(data["conclusion_holds"], bool)
        assert isinstance(data["detail"], dict)

    def test_reports_are_deterministic(self):
        a = implication_trial("T5.5", seed=12).to_json()
        b = implication_trial("T5.5", seed=12).to_json()
        assert a == b
