"""Sharp bounds for powered disk maps h(z) = (1-g)((1+Az)/(1+Bz))^a + g.

At radius r the first-order map sends |z| = r onto the circle
w(t) = C(r) + R(r) e^{it}, so the boundary of the powered image is the
curve w(t)^a, written M(t) e^{i N(t)} with M = |w|^a and N = a arg w.
Modulus and argument extremes have closed forms; the real and imaginary
extremes sit at interior zeros of the explicit derivatives

    d/dt Re(w^a) = a R Re(i e^{it} w^{a-1}),
    d/dt Im(w^a) = a R Im(i e^{it} w^{a-1}),

which are located by a 720-point sign scan refined with a bracketed
solver. The quotient form of the critical-point equation has removable
singularities, so root finding always works on the derivative itself.
When |A| r = 1 the curve touches the origin and both Re(w^a) and
Im(w^a) have a non-smooth minimum there; the touch parameter is kept as
an extra candidate so the reported intervals stay correct.

Powers use the principal branch. With the argument-safe condition
|A - B| <= |1 - A conj(B)| and |A| r <= 1 the curve never meets the cut
(-inf, 0], so the principal branch is the continuous branch anchored at
value 1 for z = 0. The affine shift g is handled after the fact: the
primary report describes (h - g)/(1 - g) and a shifted view restates
Re/Im ranges exactly (rotated critical points) with modulus/argument
ranges refined numerically.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from .errors import (
    BranchUndefinedError,
    DegenerateMapError,
    NoBracketError,
    OutOfRangeError,
)
from .moebius import JanowskiParams, image_disk

_EPS = 1e-12
_SCAN = 720


# ---------------------------------------------------------------------------
# low-level powered evaluation


def powered_mobius(A: complex, B: complex, power: float, z) -> np.ndarray:
    """Principal-branch ((1 + A z)/(1 + B z))^power, vectorized over z."""
    z = np.asarray(z, dtype=complex)
    base = (1.0 + A * z) / (1.0 + B * z)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.exp(power * np.log(base))
    return np.where(np.abs(base) == 0.0, 0.0, out)


def powered_mobius_preimage(A: complex, B: complex, power: float, w) -> np.ndarray:
    """Inverse of the powered map: w -> (w~ - 1)/(A - B w~) with w~ = w^(1/power)."""
    w = np.asarray(w, dtype=complex)
    with np.errstate(divide="ignore", invalid="ignore"):
        wt = np.exp(np.log(w) / power)
    wt = np.where(np.abs(w) == 0.0, 0.0, wt)
    return (wt - 1.0) / (A - B * wt)


def eval_powered(p: JanowskiParams, z) -> complex | np.ndarray:
    """Value of the powered, shifted map at z (principal branch, anchored at 1).

    Requires the argument-safe flag plus |A| |z| <= 1 so the origin is not
    interior to the first-order image at the working radius and a
    single-valued power exists.
    """
    z = np.asarray(z, dtype=complex)
    _branch_guard(p, float(np.max(np.abs(z))) if z.size else 0.0)
    out = (1.0 - p.gamma) * powered_mobius(p.A, p.B, p.alpha, z) + p.gamma
    return complex(out) if out.ndim == 0 else out


def invert_powered(p: JanowskiParams, w) -> np.ndarray:
    """Preimage of candidate values under the powered, shifted map."""
    w = np.asarray(w, dtype=complex)
    return powered_mobius_preimage(p.A, p.B, p.alpha, (w - p.gamma) / (1.0 - p.gamma))


def _branch_guard(p: JanowskiParams, r: float) -> None:
    if not p.argument_safe:
        raise BranchUndefinedError(
            "powers need |A - B| <= |1 - A conj(B)| so the origin is not interior"
        )
    if abs(p.A) * r > 1.0 + 1e-9:
        raise BranchUndefinedError(
            f"origin interior to the image at radius {r}: |A| r = {abs(p.A) * r:.6g} > 1"
        )


def _circle_geometry(p: JanowskiParams, r: float) -> tuple[complex, float]:
    if not 0.0 < r <= 1.0:
        raise OutOfRangeError(f"r must lie in (0, 1], got {r}")
    geo = image_disk(p, r)
    if not geo.is_disk:
        raise OutOfRangeError("r must stay below 1/|B|; the image is a half-plane")
    _branch_guard(p, r)
    return geo.center, geo.radius


# ---------------------------------------------------------------------------
# boundary curve sampling


@dataclass(frozen=True)
class EnvelopeCurve:
    """Sampled boundary curve: parameters t, first-order u + iv, powered M e^{iN}."""

    r: float
    t: np.ndarray
    u: np.ndarray
    v: np.ndarray
    M: np.ndarray
    N: np.ndarray


def sample_curve(p: JanowskiParams, r: float, n: int = 2048) -> EnvelopeCurve:
    """Uniform n-point sampling of the boundary envelope at radius r."""
    C, R = _circle_geometry(p, r)
    t = np.linspace(0.0, 2.0 * np.pi, n, endpoint=False)
    w = C + R * np.exp(1j * t)
    M = np.abs(w) ** p.alpha
    # The curve avoids the cut, so principal arguments are already
    # continuous; unwrap guards the samples straddling an origin touch.
    N = p.alpha * np.unwrap(np.angle(w))
    return EnvelopeCurve(r=r, t=t, u=w.real, v=w.imag, M=M, N=N)


# ---------------------------------------------------------------------------
# critical points of the directional objectives


def re_derivative(p: JanowskiParams, r: float, t, phase: float = 0.0) -> np.ndarray:
    """d/dt Re(e^{i phase} w(t)^alpha) along the boundary circle at radius r."""
    C, R = _circle_geometry(p, r)
    return _dir_derivative(C, R, p.alpha, phase, np.asarray(t, dtype=float))


def im_derivative(p: JanowskiParams, r: float, t) -> np.ndarray:
    """d/dt Im(w(t)^alpha); the imaginary part is Re at phase -pi/2."""
    return re_derivative(p, r, t, phase=-0.5 * math.pi)


def _dir_derivative(C: complex, R: float, alpha: float, phase: float, t: np.ndarray):
    w = C + R * np.exp(1j * t)
    with np.errstate(divide="ignore", invalid="ignore"):
        wp = np.exp((alpha - 1.0) * np.log(w))
    return alpha * R * (1j * np.exp(1j * (t + phase)) * wp).real


def _dir_objective(C: complex, R: float, alpha: float, phase: float, t: np.ndarray):
    w = C + R * np.exp(1j * t)
    with np.errstate(divide="ignore", invalid="ignore"):
        wa = np.exp(alpha * np.log(w))
    wa = np.where(np.abs(w) == 0.0, 0.0, wa)
    return (np.exp(1j * phase) * wa).real


def _touch_parameter(C: complex, R: float) -> float | None:
    """Parameter where the circle meets the origin, if it does."""
    if abs(abs(C) - R) > 1e-9 * max(1.0, R):
        return None
    return cmath.phase(-C) % (2.0 * math.pi)


def _scan_roots(fun, exclude: float | None, n: int = _SCAN) -> list[float]:
    """All zeros of a 2pi-periodic function from an n-point sign scan."""
    t = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
    vals = fun(t)
    roots: list[float] = []
    for i in range(n):
        a = t[i]
        b = t[(i + 1) % n] if i + 1 < n else 2.0 * math.pi
        fa = vals[i]
        fb = vals[(i + 1) % n]
        if exclude is not None and a - 1e-12 <= exclude <= b + 1e-12:
            continue  # derivative is singular at the origin touch
        if fa == 0.0:
            roots.append(a)
            continue
        if fa * fb < 0.0:
            # evaluate mod 2pi so the wrap segment's right endpoint reuses the
            # t = 0 sample exactly; f(2pi) can sit on the other side of a root
            # at the seam
            g = lambda x: float(fun(np.array([x % (2.0 * math.pi)]))[0])
            roots.append(brentq(g, a, b, xtol=1e-13))
    deduped: list[float] = []
    for root in roots:
        r_mod = root % (2.0 * math.pi)
        if not any(abs(r_mod - q) < 1e-9 or abs(abs(r_mod - q) - 2.0 * math.pi) < 1e-9
                   for q in deduped):
            deduped.append(r_mod)
    return deduped


@dataclass(frozen=True)
class _DirectionalExtremes:
    lo: float
    hi: float
    t_max: float
    t_min: float
    fallback: bool


def _directional_extremes(C: complex, R: float, alpha: float, phase: float) -> _DirectionalExtremes:
    deriv = lambda t: _dir_derivative(C, R, alpha, phase, t)
    obj = lambda t: _dir_objective(C, R, alpha, phase, t)
    touch = _touch_parameter(C, R)
    roots = _scan_roots(deriv, exclude=touch)
    fallback = False
    if not roots:
        # No sign change: fall back to direct extremization around the
        # best scan samples. Flagged so callers can distrust t1/t2.
        fallback = True
        grid = np.linspace(0.0, 2.0 * math.pi, _SCAN, endpoint=False)
        vals = obj(grid)
        for idx in (int(np.argmax(vals)), int(np.argmin(vals))):
            lo_b = grid[idx] - 0.02
            hi_b = grid[idx] + 0.02
            res = minimize_scalar(lambda x: -obj(np.array([x]))[0],
                                  bounds=(lo_b, hi_b), method="bounded")
            roots.append(float(res.x) % (2.0 * math.pi))
            res = minimize_scalar(lambda x: obj(np.array([x]))[0],
                                  bounds=(lo_b, hi_b), method="bounded")
            roots.append(float(res.x) % (2.0 * math.pi))
    candidates = list(roots)
    if touch is not None:
        candidates.append(touch)
    cand = np.array(sorted(candidates))
    vals = obj(cand)
    root_arr = np.array(sorted(roots))
    root_vals = obj(root_arr)
    # Reported critical parameters come from genuine derivative roots;
    # ties resolve to the smallest parameter because both arrays are sorted.
    t_max = float(root_arr[int(np.argmax(root_vals))])
    t_min = float(root_arr[int(np.argmin(root_vals))])
    return _DirectionalExtremes(
        lo=float(np.min(vals)),
        hi=float(np.max(vals)),
        t_max=t_max,
        t_min=t_min,
        fallback=fallback,
    )


@dataclass(frozen=True)
class CriticalPoints:
    """Boundary parameters of the extremes: t1 for Re, t2 for Im, tau for modulus."""

    t1: float
    t2: float
    tau: float


def critical_points(p: JanowskiParams, r: float) -> CriticalPoints:
    """Critical parameters of Re, Im and modulus along the envelope at radius r."""
    C, R = _circle_geometry(p, r)
    re_ext = _directional_extremes(C, R, p.alpha, 0.0)
    im_ext = _directional_extremes(C, R, p.alpha, -0.5 * math.pi)
    return CriticalPoints(t1=re_ext.t_max, t2=im_ext.t_max, tau=cmath.phase(C))


# ---------------------------------------------------------------------------
# bound reports


@dataclass(frozen=True)
class ShiftedView:
    """Ranges of the shifted map h itself (Re/Im exact, modulus/argument refined)."""

    re: tuple[float, float]
    im: tuple[float, float]
    mod: tuple[float, float]
    arg: tuple[float, float] | None


@dataclass(frozen=True)
class BoundReport:
    """Sharp ranges of the normalized powered map over |z| <= r.

    `arg`, `mod`, `re`, `im` are closed intervals for (h - g)/(1 - g);
    `critical` carries the extremal boundary parameters (None for purely
    sampled reports), `fallback` is set when the root scan needed the
    direct-extremization fallback, and `shifted` restates ranges for h
    itself.
    """

    arg: tuple[float, float]
    mod: tuple[float, float]
    re: tuple[float, float]
    im: tuple[float, float]
    critical: CriticalPoints | None
    fallback: bool
    shifted: ShiftedView


def envelope_bounds(p: JanowskiParams, r: float) -> BoundReport:
    """Sharp Re/Im/modulus/argument intervals of the powered map at radius r."""
    C, R = _circle_geometry(p, r)
    a = p.alpha
    tau = cmath.phase(C)
    zeta = math.asin(min(1.0, R / abs(C)))
    arg_iv = (a * (tau - zeta), a * (tau + zeta))
    mod_iv = (max(0.0, abs(C) - R) ** a, (abs(C) + R) ** a)

    re_ext = _directional_extremes(C, R, a, 0.0)
    im_ext = _directional_extremes(C, R, a, -0.5 * math.pi)
    crit = CriticalPoints(t1=re_ext.t_max, t2=im_ext.t_max, tau=tau)

    shifted = _shifted_view(p, C, R)
    return BoundReport(
        arg=arg_iv,
        mod=mod_iv,
        re=(re_ext.lo, re_ext.hi),
        im=(im_ext.lo, im_ext.hi),
        critical=crit,
        fallback=re_ext.fallback or im_ext.fallback,
        shifted=shifted,
    )


def _shifted_view(p: JanowskiParams, C: complex, R: float) -> ShiftedView:
    g = p.gamma
    scale = abs(1.0 - g)
    phase = cmath.phase(1.0 - g)
    re_ext = _directional_extremes(C, R, p.alpha, phase)
    im_ext = _directional_extremes(C, R, p.alpha, phase - 0.5 * math.pi)
    re_iv = (g.real + scale * re_ext.lo, g.real + scale * re_ext.hi)
    im_iv = (g.imag + scale * im_ext.lo, g.imag + scale * im_ext.hi)

    def h_of(t: np.ndarray) -> np.ndarray:
        w = C + R * np.exp(1j * t)
        with np.errstate(divide="ignore", invalid="ignore"):
            wa = np.exp(p.alpha * np.log(w))
        wa = np.where(np.abs(w) == 0.0, 0.0, wa)
        return (1.0 - g) * wa + g

    mod_iv = _refined_range(lambda t: np.abs(h_of(t)))
    grid = np.linspace(0.0, 2.0 * math.pi, 4096, endpoint=False)
    hv = h_of(grid)
    if np.min(np.abs(hv)) < 1e-9:
        arg_iv = None
    else:
        args = np.unwrap(np.angle(hv))
        arg_iv = _refined_range(lambda t: np.unwrap(np.angle(h_of(t))),
                                seeded=(grid, args))
    return ShiftedView(re=re_iv, im=im_iv, mod=mod_iv, arg=arg_iv)


def _refined_range(fun, n: int = 4096, seeded=None) -> tuple[float, float]:
    """Min/max of a smooth periodic scalar function, grid plus local polish."""
    if seeded is None:
        grid = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
        vals = fun(grid)
    else:
        grid, vals = seeded
    step = grid[1] - grid[0]
    out = []
    for sign, idx in ((1.0, int(np.argmin(vals))), (-1.0, int(np.argmax(vals)))):
        res = minimize_scalar(lambda x: sign * float(fun(np.array([x]))[0]),
                              bounds=(grid[idx] - step, grid[idx] + step),
                              method="bounded",
                              options={"xatol": 1e-12})
        out.append(sign * res.fun)
    return (min(out[0], float(np.min(vals))), max(out[1], float(np.max(vals))))


# ---------------------------------------------------------------------------
# sector geometry of the limit case b = 1


@dataclass(frozen=True)
class SectorImage:
    """Argument range of ((1 + e^{i m pi} z)/(1 - z))^a over the unit disk."""

    lo: float
    hi: float
    half_plane_tilt: float

    @property
    def width(self) -> float:
        return self.hi - self.lo


def sector_image(alpha: float, m: float) -> SectorImage:
    """The powered tilted half-plane map covers the sector
    (-alpha (1 - m) pi / 2, alpha (1 + m) pi / 2); its 1/alpha-th root
    fills the rotated half-plane Re(e^{-i m pi / 2} w) > 0."""
    if not 0.0 < alpha <= 1.0:
        raise OutOfRangeError(f"alpha must lie in (0, 1], got {alpha}")
    if not -1.0 < m < 1.0:
        raise OutOfRangeError(f"m must lie in (-1, 1), got {m}")
    return SectorImage(
        lo=-alpha * (1.0 - m) * 0.5 * math.pi,
        hi=alpha * (1.0 + m) * 0.5 * math.pi,
        half_plane_tilt=0.5 * m * math.pi,
    )


def tilt_angle(b: float, m: float) -> float:
    """Tilt lambda with Re(e^{-i lambda} h) > 0 for h subordinate to
    (1 + e^{i m pi} z)/(1 - b z); lambda = arg(1 + b e^{i m pi})."""
    if not 0.0 <= b <= 1.0:
        raise OutOfRangeError(f"b must lie in [0, 1], got {b}")
    a = cmath.exp(1j * math.pi * m)
    if abs(b + a) <= _EPS:
        raise DegenerateMapError("b + e^{i m pi} = 0 leaves no half-plane")
    return math.atan2(b * math.sin(math.pi * m), b * math.cos(math.pi * m) + 1.0)


def alpha_nesting(A: complex, B: complex, a1: float, a2: float) -> bool:
    """Whether the power-a1 image nests in the power-a2 image (true iff a1 <= a2).

    Valid for |A| <= 1, |B| <= 1, where the powered images grow with the
    exponent and the maps stay subordination-comparable.
    """
    if abs(A) > 1.0 + _EPS or abs(B) > 1.0 + _EPS:
        raise OutOfRangeError("nesting requires |A| <= 1 and |B| <= 1")
    for a in (a1, a2):
        if not 0.0 < a <= 1.0:
            raise OutOfRangeError(f"powers must lie in (0, 1], got {a}")
    return a1 <= a2 + _EPS
