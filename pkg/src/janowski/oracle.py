"""Randomized cross-checks for the subordination machinery.

Everything here argues from samples, never from symbols: random Schwarz
polynomials generate test functions, boundary grids estimate suprema, and
the inverse of the powered bilinear map (or a winding count, when the
comparison function is not univalent) decides membership questions.

Honesty conventions used throughout:

* ``hypothesis_holds`` is a conservative claim.  A trial only asserts the
  hypothesis after the sampled evidence clears an interior safety margin;
  anything ambiguous (branch-cut grazing, pole proximity, tiny margins)
  is reported as ``False`` so that a sound implication can never be
  blamed on a shaky premise.
* ``conclusion_holds`` is checked independently of how the test function
  was built, via the inverse map of the claimed dominant.
* Reports are plain data with one-line JSON serialization so long runs
  can be streamed and audited.
"""

from __future__ import annotations

import cmath
import json
import math
from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from numpy.polynomial import polynomial as npoly
from numpy.random import Generator, Philox

from .envelope import BoundReport, ShiftedView, sample_curve
from .errors import (
    BranchUndefinedError,
    InvalidTheoremIdError,
    OutOfRangeError,
    ParameterError,
)
from .moebius import JanowskiParams
from .sectors import eta_infimum, ratio_sector_params, reciprocal_order_sector, weighted_sector_params
from .special import DominantSpec, operator_dominant, silverman_inclusion

__all__ = [
    "SchwarzPoly",
    "TrialReport",
    "random_schwarz",
    "subordination_pullback",
    "verify_subordination",
    "empirical_bounds",
    "implication_trial",
    "THEOREM_IDS",
]

_HEADROOM = 1.0 - 1e-6
_SAFETY = 1e-5  # interior margin a sampled supremum must clear before a claim
_GRID_CACHE: dict[int, np.ndarray] = {}


def _unit_grid(n: int) -> np.ndarray:
    pts = _GRID_CACHE.get(n)
    if pts is None:
        pts = np.exp(2j * np.pi * np.arange(n) / n)
        _GRID_CACHE[n] = pts
    return pts


# ---------------------------------------------------------------------------
# Schwarz polynomials


@dataclass(frozen=True)
class SchwarzPoly:
    """Polynomial Schwarz function w(z) = scale * z * sum_k c_k z^k.

    `coefficients` holds the unnormalized c_k; `scale` absorbs the
    normalization that pins the boundary supremum strictly below 1.
    """

    coefficients: tuple[complex, ...]
    scale: float

    def __post_init__(self):
        if not self.coefficients:
            raise ParameterError("at least one coefficient is required")
        if len(self.coefficients) > 16:
            raise OutOfRangeError("degree above 16 is not supported")
        if not 0.0 < self.scale:
            raise OutOfRangeError(f"scale must be positive, got {self.scale}")
        sup = float(np.abs(self.value(_unit_grid(4096))).max())
        if sup >= 1.0:
            raise ParameterError(f"not a Schwarz function: boundary modulus reaches {sup}")

    @classmethod
    def scaled_identity(cls, c: complex) -> "SchwarzPoly":
        """The rotation-dilation w(z) = c z for 0 < |c| < 1."""
        mag = abs(c)
        if not 0.0 < mag < 1.0:
            raise OutOfRangeError(f"|c| must lie in (0, 1), got {mag}")
        return cls((c / mag,), mag)

    @property
    def degree(self) -> int:
        return len(self.coefficients)

    @property
    def linear_coefficient(self) -> complex | None:
        """c with w(z) = c z when the polynomial is linear, else None."""
        if len(self.coefficients) == 1:
            return self.scale * self.coefficients[0]
        return None

    def value(self, z):
        zz = np.asarray(z, dtype=complex)
        out = self.scale * zz * npoly.polyval(zz, np.asarray(self.coefficients))
        return complex(out) if out.ndim == 0 else out

    def deriv(self, z):
        zz = np.asarray(z, dtype=complex)
        coef = np.asarray(self.coefficients)
        p = npoly.polyval(zz, coef)
        if len(coef) > 1:
            dp = npoly.polyval(zz, coef[1:] * np.arange(1, len(coef)))
        else:
            dp = np.zeros_like(zz)
        out = self.scale * (p + zz * dp)
        return complex(out) if out.ndim == 0 else out

    def dilated(self, rho: float) -> "SchwarzPoly":
        """Precompose with z -> rho z, pulling the image into |w| <= rho."""
        if not 0.0 < rho <= 1.0:
            raise OutOfRangeError(f"rho must lie in (0, 1], got {rho}")
        coef = tuple(c * rho**k for k, c in enumerate(self.coefficients))
        return SchwarzPoly(coef, self.scale * rho)


def random_schwarz(seed: int, degree: int) -> SchwarzPoly:
    """Seeded random Schwarz polynomial of the given degree (1..16).

    Coefficients are drawn from the unit square via a counter-based
    generator, then rescaled so the boundary supremum is 1 - 1e-6.  The
    rescaling grid has 65536 points: every diagnostic grid used elsewhere
    divides it, and for trigonometric degree <= 16 the true supremum
    exceeds the grid maximum by less than a 1e-7 relative factor, so the
    normalized polynomial is rigorously Schwarz.  Degree 1 is the
    deterministic near-identity w(z) = (1 - 1e-6) z.
    """
    if seed < 0:
        raise OutOfRangeError(f"seed must be nonnegative, got {seed}")
    if not 1 <= degree <= 16:
        raise OutOfRangeError(f"degree must lie in 1..16, got {degree}")
    if degree == 1:
        return SchwarzPoly((1.0 + 0.0j,), _HEADROOM)
    rng = Generator(Philox(key=[seed, 0]))
    raw = rng.random((degree, 2))
    coef = raw[:, 0] + 1j * raw[:, 1]
    z = _unit_grid(65536)
    peak = float(np.abs(z * npoly.polyval(z, coef)).max())
    if peak < 1e-12:
        return SchwarzPoly((1.0 + 0.0j,), _HEADROOM)
    return SchwarzPoly(tuple(coef), _HEADROOM / peak)


def _effective_schwarz(seed: int, rho: float, c_max: float) -> SchwarzPoly:
    """Trial test function: even seeds take a rotation-dilation (exact
    identities available), odd seeds a dilated random polynomial."""
    rng = Generator(Philox(key=[seed, 2]))
    if seed % 2 == 0:
        u, v = rng.random(2)
        c = c_max * (0.25 + 0.75 * u) * cmath.exp(2j * math.pi * v)
        return SchwarzPoly.scaled_identity(c)
    degree = 2 + int(rng.random() * 12.0)
    return random_schwarz(seed, degree).dilated(rho)


# ---------------------------------------------------------------------------
# membership checks


def subordination_pullback(w, target: JanowskiParams) -> np.ndarray:
    """Moduli of the inverse powered map of `target` at the points w.

    Values <= 1 certify membership in the image of the unit disk.  Points
    that land on the branch cut of the outer root raise BranchUndefined;
    points swallowed by the pole of the inverse come back as inf.
    """
    ws = np.atleast_1d(np.asarray(w, dtype=complex))
    g = complex(target.gamma)
    base = (ws - g) / (1.0 - g)
    if np.any((base.real <= 0.0) & (base.imag == 0.0)):
        raise BranchUndefinedError("sample on the branch cut of the inverse power")
    if target.alpha == 1.0:
        tilde = base
    else:
        tilde = np.exp(np.log(base) / target.alpha)
    with np.errstate(divide="ignore", invalid="ignore"):
        q = np.abs((tilde - 1.0) / (complex(target.A) - complex(target.B) * tilde))
    return np.where(np.isfinite(q), q, np.inf)


def verify_subordination(p_samples, target: JanowskiParams, r: float = 1.0, tol: float = 1e-9) -> bool:
    """Do all sampled values lie in the target's image of |z| <= r?

    The target must be argument-safe, which makes its powered map
    univalent with a globally defined inverse; membership then reduces to
    a pullback modulus test.
    """
    if not target.argument_safe:
        raise ParameterError("target must be argument-safe so the inverse map is single-valued")
    if not 0.0 < r <= 1.0:
        raise OutOfRangeError(f"r must lie in (0, 1], got {r}")
    return bool(np.max(subordination_pullback(p_samples, target)) <= r + tol)


def _winding_contains(points: np.ndarray, curve: np.ndarray) -> np.ndarray:
    """Argument-principle membership of points w.r.t. a closed sampled curve.

    A point is inside when the total turning of curve - point exceeds pi
    (a full loop contributes 2 pi; outside points net to 0).  Points
    within 1e-12 of the curve count as contained.
    """
    nxt = np.roll(curve, -1)
    flags = np.empty(points.shape, dtype=bool)
    for lo in range(0, points.size, 128):
        blk = points[lo : lo + 128, None]
        d0 = curve[None, :] - blk
        d1 = nxt[None, :] - blk
        hit = np.abs(d0).min(axis=1) < 1e-12
        with np.errstate(divide="ignore", invalid="ignore"):
            steps = np.angle(d1 / d0)
        total = np.abs(np.nansum(steps, axis=1))
        flags[lo : lo + 128] = hit | (total > math.pi)
    return flags


def _sector_margin(args: np.ndarray, lo: float, hi: float) -> float:
    """Smallest signed slack of sampled arguments inside (lo, hi)."""
    return float(min(np.min(args - lo), np.min(hi - args)))


def _ray_clearance(center: complex, radius: float) -> float:
    """Signed distance from the disk |w - center| <= radius to (-inf, 0]."""
    if center.real <= 0.0:
        return abs(center.imag) - radius
    return abs(center) - radius


def empirical_bounds(p: JanowskiParams, r: float, n: int = 200_000) -> BoundReport:
    """Pure sampling twin of the analytic range report.

    Estimates every interval from n boundary samples; no root finding is
    involved, so this is an independent oracle for the analytic path.
    The critical-point block is absent by construction.
    """
    if n < 16:
        raise OutOfRangeError(f"need at least 16 samples, got {n}")
    curve = sample_curve(p, r, n)
    re = curve.M * np.cos(curve.N)
    im = curve.M * np.sin(curve.N)
    g = complex(p.gamma)
    h = (1.0 - g) * (re + 1j * im) + g
    hmod = np.abs(h)
    if float(hmod.min()) < 1e-9:
        harg: tuple[float, float] | None = None
    else:
        unwrapped = np.unwrap(np.angle(h))
        harg = (float(unwrapped.min()), float(unwrapped.max()))
    shifted = ShiftedView(
        re=(float(h.real.min()), float(h.real.max())),
        im=(float(h.imag.min()), float(h.imag.max())),
        mod=(float(hmod.min()), float(hmod.max())),
        arg=harg,
    )
    return BoundReport(
        arg=(float(curve.N.min()), float(curve.N.max())),
        mod=(float(curve.M.min()), float(curve.M.max())),
        re=(float(re.min()), float(re.max())),
        im=(float(im.min()), float(im.max())),
        critical=None,
        fallback=False,
        shifted=shifted,
    )


# ---------------------------------------------------------------------------
# trial reports


def _jsonable(value):
    if isinstance(value, Mapping):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value)
    if isinstance(value, (complex, np.complexfloating)):
        c = complex(value)
        return {"re": c.real, "im": c.imag}
    if value is None:
        return None
    return str(value)


@dataclass(frozen=True)
class TrialReport:
    """Outcome of one randomized implication trial."""

    theorem_id: str
    seed: int
    hypothesis_holds: bool
    conclusion_holds: bool
    margin: float
    detail: Mapping[str, object] = field(default_factory=dict)

    @property
    def sound(self) -> bool:
        """False exactly on the fatal pattern: hypothesis true, conclusion false."""
        return not (self.hypothesis_holds and not self.conclusion_holds)

    def to_json(self) -> str:
        payload = {
            "theorem_id": self.theorem_id,
            "seed": self.seed,
            "hypothesis_holds": bool(self.hypothesis_holds),
            "conclusion_holds": bool(self.conclusion_holds),
            "margin": float(self.margin),
            "detail": _jsonable(self.detail),
        }
        return json.dumps(payload, sort_keys=True)


# ---------------------------------------------------------------------------
# individual trials
#
# Every trial builds the test function from the CONCLUSION side: compose the
# claimed dominant with a random Schwarz function, so the conclusion is true
# by design and verified independently, then evaluate the hypothesis
# expression honestly on a boundary grid.  A sound implication can therefore
# never produce hypothesis-true/conclusion-false; a buggy formula anywhere in
# the chain shows up as exactly that pattern.

_N_SAMPLES = 4096


def _tilted_log(a: complex, w: np.ndarray) -> np.ndarray:
    """Principal log of (1 + a w)/(1 - w); stays principal for |arg| < pi."""
    return np.log(1.0 + a * w) - np.log(1.0 - w)


def _trial_ratio_sector(seed: int, prm: dict) -> TrialReport:
    """Sector transfer for quotients: derivative-quotient sector bound forces
    the function-quotient sector bound, with the comparison pole drawn at
    random inside an annulus."""
    alpha = float(prm.get("alpha", (0.3, 0.5, 0.75, 1.0)[seed % 4]))
    m = float(prm.get("m", (0.0, -0.4, 0.3, 0.55)[(seed // 4) % 4]))
    rng = Generator(Philox(key=[seed, 1]))
    u = rng.random(2)
    default_pole = (0.1 + 0.2 * u[0]) * cmath.exp(2j * math.pi * u[1])
    cg = complex(prm.get("g_pole", default_pole))
    beta = float(prm.get("beta", 0.98 * (1.0 - abs(cg))))

    omega = _effective_schwarz(seed, rho=0.2, c_max=0.25)
    z = _unit_grid(_N_SAMPLES)
    w = omega.value(z)
    zdw = z * omega.deriv(z)
    a = cmath.exp(1j * math.pi * m)
    logbase = _tilted_log(a, w)
    p = np.exp(alpha * logbase)
    zdp = alpha * p * (a / (1.0 + a * w) + 1.0 / (1.0 - w)) * zdw
    gratio = 1.0 - cg * z  # g/(z g') for the comparison g(z) = z/(1 - cg z)
    quotient = p + zdp * gratio  # f'/g' when f = g p

    # Narrowest admissible hypothesis sector over the realized arguments of
    # the comparison ratio: claiming membership there is the strongest form
    # of the premise, hence sound under any reading of the quantifier.
    phis = np.angle(gratio)
    mu1 = math.inf
    mu2 = math.inf
    for phi in np.linspace(float(phis.min()), float(phis.max()), 65):
        sp = ratio_sector_params(alpha, m, beta, float(phi))
        mu1 = min(mu1, sp.mu1)
        mu2 = min(mu2, sp.mu2)
    hyp_margin = _sector_margin(np.angle(quotient), -alpha * mu1 * math.pi / 2.0, alpha * mu2 * math.pi / 2.0)
    ratio_ok = bool(np.all(np.abs(gratio) > beta))
    hypothesis = ratio_ok and hyp_margin > _SAFETY

    con_lo = -alpha * (1.0 - m) * math.pi / 2.0
    con_hi = alpha * (1.0 + m) * math.pi / 2.0
    con_margin = _sector_margin(alpha * logbase.imag, con_lo, con_hi)
    target = JanowskiParams(a, -1.0, alpha)
    max_pull = float(np.max(subordination_pullback(p, target)))
    conclusion = con_margin >= -1e-4 and max_pull <= 1.0 + 1e-9
    return TrialReport(
        "T3.3",
        seed,
        hypothesis,
        conclusion,
        con_margin,
        {
            "alpha": alpha,
            "m": m,
            "beta": beta,
            "g_pole": cg,
            "mode": "identity" if seed % 2 == 0 else "poly",
            "mu1": mu1,
            "mu2": mu2,
            "hyp_margin": hyp_margin,
            "max_pullback": max_pull,
        },
    )


def _trial_weighted_sector(seed: int, prm: dict) -> TrialReport:
    """Sector transfer for the weighted product p^a (1 + lambda z p'/p)^g."""
    alpha = float(prm.get("alpha", (0.5, 0.8, 1.0)[seed % 3]))
    beta = float(prm.get("beta", (0.45, 0.7, 1.0)[(seed // 3) % 3]))
    gamma = float(prm.get("gamma", (0.3, 0.6, 1.0)[(seed // 9) % 3]))
    m = float(prm.get("m", (0.0, -0.35, 0.25)[(seed // 27) % 3]))
    weights: tuple[Callable, ...] = (
        lambda z: np.full_like(np.asarray(z, dtype=complex), 1.0 + 0.0j),
        lambda z: np.full_like(np.asarray(z, dtype=complex), 1.2 + 0.45j),
        lambda z: 1.0 + 0.4 * np.asarray(z, dtype=complex),
    )
    lam = prm.get("weight", weights[(seed // 81) % 3])
    eta = float(prm.get("eta", 0.999 * eta_infimum(lam, beta)))
    sp = weighted_sector_params(alpha, beta, gamma, m, eta)

    omega = _effective_schwarz(seed, rho=0.35, c_max=0.5)
    z = _unit_grid(_N_SAMPLES)
    w = omega.value(z)
    zdw = z * omega.deriv(z)
    a = cmath.exp(1j * math.pi * m)
    logbase = _tilted_log(a, w)
    # z p'/p for p = base^beta, evaluated without forming p first
    zlogd = (a / (1.0 + a * w) + 1.0 / (1.0 - w)) * zdw
    x = lam(z) * beta * zlogd
    shifted = 1.0 + x
    safe = bool(np.all(shifted.real > 0.0))
    arg_expr = alpha * beta * logbase.imag + gamma * np.angle(shifted)
    hyp_margin = _sector_margin(arg_expr, -sp.mu1 * math.pi / 2.0, sp.mu2 * math.pi / 2.0)
    hypothesis = safe and hyp_margin > _SAFETY

    con_margin = _sector_margin(beta * logbase.imag, -beta * (1.0 - m) * math.pi / 2.0, beta * (1.0 + m) * math.pi / 2.0)
    target = JanowskiParams(a, -1.0, beta)
    max_pull = float(np.max(subordination_pullback(np.exp(beta * logbase), target)))
    conclusion = con_margin >= -1e-4 and max_pull <= 1.0 + 1e-9
    return TrialReport(
        "T3.6",
        seed,
        hypothesis,
        conclusion,
        con_margin,
        {
            "alpha": alpha,
            "beta": beta,
            "gamma": gamma,
            "m": m,
            "eta": eta,
            "mode": "identity" if seed % 2 == 0 else "poly",
            "delta": sp.delta,
            "hyp_margin": hyp_margin,
            "max_pullback": max_pull,
        },
    )


def _trial_inverse_coefficient(seed: int, prm: dict) -> TrialReport:
    """Coefficient-criterion inclusion: small z p'/p^2 plus the printed
    parameter inequality force the powered tilted-disk bound."""
    A = complex(prm.get("A", (1.0, 0.85, 0.5 + 0.3j, 0.65 - 0.25j)[seed % 4]))
    b = float(prm.get("b", (1.0, 0.7, 0.35, 0.9)[(seed // 4) % 4]))
    alpha = float(prm.get("alpha", (1.0, 0.8, 0.5)[(seed // 16) % 3]))
    cap = alpha * abs(A + b) / ((1.0 + b) ** (alpha - 1.0) * (1.0 + abs(A)) ** (alpha + 1.0))
    beta = float(prm.get("beta", 0.98 * min(1.0, cap)))

    omega = _effective_schwarz(seed, rho=0.2, c_max=0.25)
    z = _unit_grid(_N_SAMPLES)
    w = omega.value(z)
    zdw = z * omega.deriv(z)
    logbase = np.log(1.0 + A * w) - np.log(1.0 - b * w)
    p = np.exp(alpha * logbase)
    ratio = alpha * (A / (1.0 + A * w) + b / (1.0 - b * w)) * zdw  # z p'/p
    coeff = ratio / p  # z p'/p^2
    criterion = silverman_inclusion(A, b, alpha, beta)
    sup_coeff = float(np.max(np.abs(coeff)))
    hypothesis = criterion and sup_coeff < beta * _HEADROOM

    target = JanowskiParams(A, -b, alpha)
    max_pull = float(np.max(subordination_pullback(p, target)))
    margin = 1.0 - max_pull
    conclusion = margin >= -1e-4
    return TrialReport(
        "T5.4",
        seed,
        hypothesis,
        conclusion,
        margin,
        {
            "A": A,
            "b": b,
            "alpha": alpha,
            "beta": beta,
            "mode": "identity" if seed % 2 == 0 else "poly",
            "criterion": criterion,
            "sup_coefficient": sup_coeff,
            "max_pullback": max_pull,
        },
    )


def _trial_reciprocal_sector(seed: int, prm: dict) -> TrialReport:
    """Reciprocal-order criterion: a small-derivative affine part pins the
    argument of p inside the arcsine sector."""
    order = float(prm.get("order", (0.0, 0.25, 0.5)[seed % 3]))
    kappa = float(prm.get("kappa", (0.5, 0.8, 0.98)[(seed // 3) % 3]))
    beta = float(prm.get("beta", kappa * (1.0 - order)))
    coef = beta / (1.0 - order)

    omega = _effective_schwarz(seed, rho=0.6, c_max=0.9)
    z = _unit_grid(_N_SAMPLES)
    w = omega.value(z)
    zdw = z * omega.deriv(z)
    p = 1.0 + coef * w
    sup_deriv = float(np.max(np.abs((1.0 - order) * coef * zdw)))
    inverse_part = np.abs(order + (1.0 - order) * p)
    hypothesis = sup_deriv < beta * _HEADROOM and float(inverse_part.min()) > 1e-9

    half_angle = reciprocal_order_sector(order, beta) * math.pi / 2.0
    con_margin = half_angle - float(np.max(np.abs(np.angle(p))))
    target = JanowskiParams(coef, 0.0, 1.0)
    max_pull = float(np.max(subordination_pullback(p, target)))
    conclusion = con_margin >= -1e-4 and max_pull <= 1.0 + 1e-9
    return TrialReport(
        "T5.5",
        seed,
        hypothesis,
        conclusion,
        con_margin,
        {
            "order": order,
            "beta": beta,
            "mode": "identity" if seed % 2 == 0 else "poly",
            "sup_derivative": sup_deriv,
            "half_angle": half_angle,
            "max_pullback": max_pull,
        },
    )


_OPERATOR_TABLE_A = (
    # (A, b, alpha, gamma, mu, eta, delta, rho) with Re(1+Ab) >= |A+b|
    (1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 0.0),
    (1.0, 0.5, 0.5, 0.6, 1.0, 0.7, 1.0, 0.4),
    (0.7 + 0.3j, 0.8, 1.0, 0.9, 1.0 + 0.1j, 1.0, 1.2, 0.2),
    (0.5, 1.0, 0.8, 1.0, 2.0, 1.5, 0.8, 1.0),
)
_OPERATOR_TABLE_B = (
    # winding-friendly rows: real A, poles held off the sampling curve
    (0.8, 0.6, 1.0, 0.7, 1.0, 1.0, 1.0, 0.0),
    (0.6, 0.85, 0.5, 1.0, 1.0, 0.8, 1.0 + 0.2j, 0.3),
    (0.9, 0.4, 1.0, 0.5, 1.2, 1.0, 0.9, 0.5),
    (0.45, 0.75, 0.0, 0.8, 1.0, 1.0, 1.0, 0.0),
)


def _operator_samples(spec: DominantSpec, w: np.ndarray, zdw: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(p, E) for the first-order operator E = mu p^a (d + r p) + eta z p' p^(a-1)."""
    A = complex(spec.A)
    logbase = np.log(1.0 + A * w) - np.log(1.0 - spec.b * w)
    p = np.exp(spec.gamma * logbase)
    zdp = spec.gamma * p * (A / (1.0 + A * w) + spec.b / (1.0 - spec.b * w)) * zdw
    p_alpha = np.exp(spec.alpha * spec.gamma * logbase)
    p_alpha_m1 = np.exp((spec.alpha - 1.0) * spec.gamma * logbase)
    e = complex(spec.mu) * p_alpha * (complex(spec.delta) + complex(spec.rho) * p) + complex(spec.eta) * zdp * p_alpha_m1
    return p, e


def _dominant_curve(spec: DominantSpec, z: np.ndarray) -> np.ndarray:
    A = complex(spec.A)
    num = 1.0 + A * z
    den = 1.0 - spec.b * z
    q_log = np.log(num) - np.log(den)
    bracket = (
        complex(spec.mu) * complex(spec.delta)
        + complex(spec.mu) * complex(spec.rho) * np.exp(spec.gamma * q_log)
        + complex(spec.eta) * spec.gamma * (A + spec.b) * z / (num * den)
    )
    return np.exp(spec.alpha * spec.gamma * q_log) * bracket


def _image_disk_clearance(A: complex, B: complex, radius: float) -> float:
    """Cut clearance of the bilinear image {(1+Az)/(1+Bz) : |z| <= radius}."""
    denom = 1.0 - abs(B) ** 2 * radius**2
    center = (1.0 - A * np.conj(B) * radius**2) / denom
    spread = abs(A - B) * radius / denom
    return _ray_clearance(complex(center), float(spread))


def _winding_hypothesis(e_samples: np.ndarray, curve: np.ndarray) -> tuple[bool, float]:
    contained = _winding_contains(e_samples, curve)
    frac = float(np.mean(contained))
    return bool(np.all(contained)), frac


_INNER_RADII = (0.35, 0.65, 0.9, 1.0)


def _multi_radius_grid(n_each: int = 512) -> np.ndarray:
    base = _unit_grid(n_each)
    return np.concatenate([r * base for r in _INNER_RADII])


def _trial_operator_dominant(seed: int, prm: dict) -> TrialReport:
    """First-order operator subordination against its exact dominant.

    Even seeds use w(z) = c z, for which the operator image of the base
    power IS the dominant composed with c z; the trial then checks that
    exact identity through the standalone dominant evaluator.  Odd seeds
    use a genuine polynomial Schwarz function and fall back to a winding
    count against the sampled dominant curve.
    """
    table = _OPERATOR_TABLE_A if seed % 2 == 0 else _OPERATOR_TABLE_B
    row = table[(seed // 2) % 4]
    spec = DominantSpec(
        A=complex(prm.get("A", row[0])),
        b=float(prm.get("b", row[1])),
        alpha=float(prm.get("alpha", row[2])),
        gamma=float(prm.get("gamma", row[3])),
        mu=complex(prm.get("mu", row[4])),
        eta=complex(prm.get("eta", row[5])),
        delta=complex(prm.get("delta", row[6])),
        rho=complex(prm.get("rho", row[7])),
    )
    omega = _effective_schwarz(seed, rho=0.6, c_max=0.88)
    detail: dict[str, object] = {
        "A": spec.A,
        "b": spec.b,
        "alpha": spec.alpha,
        "gamma": spec.gamma,
        "mu": spec.mu,
        "eta": spec.eta,
        "delta": spec.delta,
        "rho": spec.rho,
        "mode": "identity" if seed % 2 == 0 else "poly",
    }

    if seed % 2 == 0:
        z = _unit_grid(512)
        w = omega.value(z)
        zdw = z * omega.deriv(z)
        p, e_samples = _operator_samples(spec, w, zdw)
        c = omega.linear_coefficient
        assert c is not None
        reference = np.array([operator_dominant(spec, c * zz) for zz in z])
        scale = 1.0 + float(np.max(np.abs(reference)))
        identity_gap = float(np.max(np.abs(e_samples - reference))) / scale
        hypothesis = identity_gap < 1e-9
        detail["identity_gap"] = identity_gap
    else:
        z = _multi_radius_grid()
        w = omega.value(z)
        zdw = z * omega.deriv(z)
        p, e_samples = _operator_samples(spec, w, zdw)
        rho_curve = 0.99
        clear_curve = _image_disk_clearance(spec.A, -spec.b, rho_curve)
        sup_omega = float(np.max(np.abs(omega.value(_unit_grid(16384)))))
        clear_base = _image_disk_clearance(spec.A, -spec.b, sup_omega)
        curve = _dominant_curve(spec, rho_curve * _unit_grid(_N_SAMPLES))
        contained, frac = _winding_hypothesis(e_samples, curve)
        hypothesis = contained and clear_curve > 1e-9 and clear_base > 1e-9
        detail["contained_fraction"] = frac
        detail["cut_clearance"] = min(clear_curve, clear_base)

    target = JanowskiParams(spec.A, -spec.b, spec.gamma)
    try:
        max_pull = float(np.max(subordination_pullback(p, target)))
    except BranchUndefinedError:
        max_pull = math.inf
    margin = 1.0 - max_pull
    conclusion = margin >= -1e-4
    detail["max_pullback"] = max_pull
    return TrialReport("T5.7", seed, hypothesis, conclusion, margin, detail)


_COMBO_TABLE_A = (
    # (m, b, lam, gamma)
    (0.0, 1.0, 0.5, 1.0),
    (0.3, 1.0, 0.25, 0.7),
    (-0.35, 0.8, 1.0, 1.0),
    (0.0, 0.6, 0.75, 0.5),
)
_COMBO_TABLE_B = (
    (0.0, 0.7, 0.5, 1.0),
    (0.25, 0.85, 0.4, 0.8),
    (-0.3, 0.5, 0.8, 0.6),
    (0.4, 0.9, 0.6, 1.0),
)


def _trial_convex_combination(seed: int, prm: dict) -> TrialReport:
    """Affine combination (1-l) p + l z p' against its exact dominant, the
    unit-modulus-numerator specialization of the operator trial."""
    table = _COMBO_TABLE_A if seed % 2 == 0 else _COMBO_TABLE_B
    row = table[(seed // 2) % 4]
    m = float(prm.get("m", row[0]))
    b = float(prm.get("b", row[1]))
    lam = float(prm.get("lam", row[2]))
    gamma = float(prm.get("gamma", row[3]))
    a = cmath.exp(1j * math.pi * m)
    spec = DominantSpec(A=a, b=b, alpha=1.0, gamma=gamma, mu=1.0 - lam, eta=lam, delta=1.0, rho=0.0)

    omega = _effective_schwarz(seed, rho=0.6, c_max=0.88)
    detail: dict[str, object] = {
        "m": m,
        "b": b,
        "lam": lam,
        "gamma": gamma,
        "mode": "identity" if seed % 2 == 0 else "poly",
    }

    def combo(w: np.ndarray, zdw: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        logbase = np.log(1.0 + a * w) - np.log(1.0 - b * w)
        p = np.exp(gamma * logbase)
        zdp = gamma * p * (a / (1.0 + a * w) + b / (1.0 - b * w)) * zdw
        return p, (1.0 - lam) * p + lam * zdp

    if seed % 2 == 0:
        z = _unit_grid(512)
        p, e_samples = combo(omega.value(z), z * omega.deriv(z))
        c = omega.linear_coefficient
        assert c is not None
        reference = np.array([operator_dominant(spec, c * zz) for zz in z])
        scale = 1.0 + float(np.max(np.abs(reference)))
        identity_gap = float(np.max(np.abs(e_samples - reference))) / scale
        hypothesis = identity_gap < 1e-9
        detail["identity_gap"] = identity_gap
    else:
        z = _multi_radius_grid()
        p, e_samples = combo(omega.value(z), z * omega.deriv(z))
        rho_curve = 0.99
        clear_curve = _image_disk_clearance(a, -b, rho_curve)
        sup_omega = float(np.max(np.abs(omega.value(_unit_grid(16384)))))
        clear_base = _image_disk_clearance(a, -b, sup_omega)
        curve = _dominant_curve(spec, rho_curve * _unit_grid(_N_SAMPLES))
        contained, frac = _winding_hypothesis(e_samples, curve)
        hypothesis = contained and clear_curve > 1e-9 and clear_base > 1e-9
        detail["contained_fraction"] = frac
        detail["cut_clearance"] = min(clear_curve, clear_base)

    target = JanowskiParams(a, -b, gamma)
    try:
        max_pull = float(np.max(subordination_pullback(p, target)))
    except BranchUndefinedError:
        max_pull = math.inf
    margin = 1.0 - max_pull
    conclusion = margin >= -1e-4
    tilt = math.atan2(b * math.sin(math.pi * m), b * math.cos(math.pi * m) + 1.0)
    detail["max_pullback"] = max_pull
    detail["tilt"] = tilt
    return TrialReport("C5.12", seed, hypothesis, conclusion, margin, detail)


_BRIOT_TABLE = (
    # (A, B, alpha, beta, gamma) with |A - B| <= 1 - Re(A conj(B))
    (1.0, 0.0, 1.0, 1.0, 0.0),
    (0.8, -0.2, 0.7, 1.0, 0.5),
    (0.6 + 0.2j, 0.0, 0.5, 0.8, 0.4),
    (0.5, -0.5, 1.0, 0.6, 0.25),
)


def _trial_first_order(seed: int, prm: dict) -> TrialReport:
    """Weighted first-order perturbation p + lambda z p'/(beta p + gamma)
    subordinate to the powered bilinear map implies the same for p."""
    row = _BRIOT_TABLE[seed % 4]
    A = complex(prm.get("A", row[0]))
    B = complex(prm.get("B", row[1]))
    alpha = float(prm.get("alpha", row[2]))
    beta = complex(prm.get("beta", row[3]))
    gamma = complex(prm.get("gamma", row[4]))
    weights: tuple[Callable, ...] = (
        lambda z: np.full_like(np.asarray(z, dtype=complex), 1.0 + 0.0j),
        lambda z: 1.0 + 0.6 * np.asarray(z, dtype=complex),
        lambda z: (1.0 + 0.4 * np.asarray(z, dtype=complex)) / (1.0 - 0.4 * np.asarray(z, dtype=complex)),
    )
    lam = prm.get("weight", weights[(seed // 4) % 3])

    omega = _effective_schwarz(seed, rho=0.3, c_max=0.45)
    z = _unit_grid(_N_SAMPLES)
    w = omega.value(z)
    zdw = z * omega.deriv(z)
    logbase = np.log(1.0 + A * w) - np.log(1.0 + B * w)
    p = np.exp(alpha * logbase)
    zdp = alpha * p * (A / (1.0 + A * w) - B / (1.0 + B * w)) * zdw
    denom = beta * p + gamma
    denom_clear = float(np.min(np.abs(denom)))
    e_samples = p + lam(z) * zdp / denom

    target = JanowskiParams(A, B, alpha)
    try:
        hyp_pull = float(np.max(subordination_pullback(e_samples, target)))
        hyp_cut = False
    except BranchUndefinedError:
        hyp_pull = math.inf
        hyp_cut = True
    hypothesis = (not hyp_cut) and hyp_pull <= _HEADROOM and denom_clear > 1e-9

    max_pull = float(np.max(subordination_pullback(p, target)))
    margin = 1.0 - max_pull
    conclusion = margin >= -1e-4
    return TrialReport(
        "T5.10",
        seed,
        hypothesis,
        conclusion,
        margin,
        {
            "A": A,
            "B": B,
            "alpha": alpha,
            "beta": beta,
            "gamma": gamma,
            "mode": "identity" if seed % 2 == 0 else "poly",
            "hyp_pullback": hyp_pull,
            "denominator_clearance": denom_clear,
            "max_pullback": max_pull,
        },
    )


_TRIALS: dict[str, Callable[[int, dict], TrialReport]] = {
    "T3.3": _trial_ratio_sector,
    "T3.6": _trial_weighted_sector,
    "T5.4": _trial_inverse_coefficient,
    "T5.5": _trial_reciprocal_sector,
    "T5.7": _trial_operator_dominant,
    "C5.12": _trial_convex_combination,
    "T5.10": _trial_first_order,
}

THEOREM_IDS: tuple[str, ...] = tuple(_TRIALS)


def implication_trial(theorem_id: str, params: Mapping[str, object] | None = None, seed: int = 0) -> TrialReport:
    """Run one seeded implication trial for the given registry id.

    `params` may override the seed-derived defaults; keys follow each
    trial's detail block.  Trials are deterministic functions of
    (theorem_id, params, seed).
    """
    fn = _TRIALS.get(theorem_id)
    if fn is None:
        raise InvalidTheoremIdError(f"unknown theorem id {theorem_id!r}; known ids: {', '.join(_TRIALS)}")
    if seed < 0:
        raise OutOfRangeError(f"seed must be nonnegative, got {seed}")
    return fn(int(seed), dict(params or {}))
