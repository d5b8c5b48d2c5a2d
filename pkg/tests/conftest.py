import numpy as np
import pytest
from hypothesis import HealthCheck, settings, strategies as st

from janowski import JanowskiParams

settings.register_profile(
    "ci",
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")


@st.composite
def safe_params(draw, powered: bool = True):
    """Argument-safe JanowskiParams: |A| <= 1 and |B| <= 1 keep the origin
    out of the first-order image, so powers and arguments stay single-valued."""
    mag_a = draw(st.floats(0.05, 1.0))
    mag_b = draw(st.floats(0.0, 0.95))
    th_a = draw(st.floats(0.0, 2.0 * np.pi))
    th_b = draw(st.floats(0.0, 2.0 * np.pi))
    A = mag_a * np.exp(1j * th_a)
    B = mag_b * np.exp(1j * th_b)
    if abs(A - B) <= 1e-9:
        A = -B if abs(B) > 0.1 else 1.0
    alpha = draw(st.floats(0.25, 1.0)) if powered else 1.0
    return JanowskiParams(A, B, alpha)


@pytest.fixture
def rng():
    return np.random.default_rng(20260819)
