"""Sector parameters for argument-transfer criteria.

A map confined to the sector |arg w - c| < s transfers control between a
function and its derivative quotient. The calculators here produce the
sector exponents mu_1 (lower edge) and mu_2 (upper edge) for two such
criteria, normalized so the admissible sector of the hypothesis dominant
((1 + e^{i mu pi} z)/(1 - z))^delta is exactly
[-mu_1 pi / 2, mu_2 pi / 2] with delta = (mu_1 + mu_2)/2 and tilt
mu = (mu_2 - mu_1)/(mu_1 + mu_2).

All angles are radians; inputs named `m` and `l` are angles in units of
pi (the usual parametrization of tilted sector maps).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import (
    ConditionFailedError,
    DegenerateMapError,
    NegativeRealPartError,
    OutOfRangeError,
)


@dataclass(frozen=True)
class SectorParams:
    """Edges mu_1/mu_2 of an admissible hypothesis sector.

    `delta` is the dominant exponent (mu_1 + mu_2)/2, `mu` the tilt
    (mu_2 - mu_1)/(mu_1 + mu_2), and `a_mag` the modulus |tan(m pi / 4)|
    of the auxiliary point driving the edge correction. `beta0` is the
    smallest admissible weight for the weighted-product criterion and
    `eta` echoes the weight floor it was computed with.
    """

    mu1: float
    mu2: float
    mu: float
    delta: float
    a_mag: float
    beta0: float = 0.0
    eta: float | None = None


def _edge_pair(alpha: float, m: float, atan1: float, atan2: float) -> tuple[float, float]:
    mu1 = 1.0 - m + (2.0 / (alpha * math.pi)) * atan1
    mu2 = 1.0 + m + (2.0 / (alpha * math.pi)) * atan2
    return mu1, mu2


def ratio_sector_params(alpha: float, m: float, beta: float, arg_ratio: float) -> SectorParams:
    """Sector edges for the derivative-quotient transfer criterion.

    `beta` is a lower bound on |g/(z g')| and `arg_ratio` the bound on
    arg(g/(z g')) supplied by the caller; both tighten the admissible
    sector of f'/g' that still forces f/g into the target sector
    [-alpha (1 - m) pi / 2, alpha (1 + m) pi / 2].
    """
    if not 0.0 < alpha <= 1.0:
        raise OutOfRangeError(f"alpha must lie in (0, 1], got {alpha}")
    if not -1.0 <= m < 1.0:
        raise OutOfRangeError(f"m must lie in [-1, 1), got {m}")
    if not 0.0 < beta <= 1.0:
        raise OutOfRangeError(f"beta must lie in (0, 1], got {beta}")
    if not -0.5 * math.pi < arg_ratio < 0.5 * math.pi:
        raise OutOfRangeError("arg_ratio must lie in (-pi/2, pi/2)")
    a_mag = abs(math.tan(0.25 * math.pi * m))
    c = alpha * beta * (1.0 - a_mag)
    num = c * math.cos(arg_ratio)
    den1 = 1.0 + a_mag + c * math.sin(arg_ratio)
    den2 = 1.0 + a_mag - c * math.sin(arg_ratio)
    if den1 <= 0.0 or den2 <= 0.0:
        raise OutOfRangeError("edge correction denominator is not positive")
    mu1, mu2 = _edge_pair(alpha, m, math.atan2(num, den1), math.atan2(num, den2))
    return SectorParams(
        mu1=mu1,
        mu2=mu2,
        mu=(mu2 - mu1) / (mu1 + mu2),
        delta=0.5 * (mu1 + mu2),
        a_mag=a_mag,
    )


def derivative_sector_params(alpha: float, m: float) -> tuple[SectorParams, float]:
    """Specialized edges for g(z) = z, plus the raw bound on |arg(z f'/f)|.

    With the identity denominator the quotient bound is exact (beta = 1,
    zero argument) and the transferred sector yields
    |arg(z f'/f)| < alpha pi + atan(alpha (1 - a_mag)/(1 + a_mag)).
    """
    params = ratio_sector_params(alpha, m, beta=1.0, arg_ratio=0.0)
    arg_bound = alpha * math.pi + math.atan2(
        alpha * (1.0 - params.a_mag), 1.0 + params.a_mag
    )
    return params, arg_bound


def weighted_sector_params(
    alpha: float, beta: float, gamma: float, m: float, eta: float
) -> SectorParams:
    """Sector edges for the weighted-product criterion p^alpha (1 + lam z p'/p)^gamma.

    `eta` is a weight floor certified by `eta_infimum` (or any smaller
    nonnegative value). The smallest admissible beta is
    beta0 = max(0, -2 gamma atan(eta) / (alpha pi (1 - m))).
    """
    if alpha <= 0.0:
        raise OutOfRangeError(f"alpha must be positive, got {alpha}")
    if not 0.0 <= gamma <= 1.0:
        raise OutOfRangeError(f"gamma must lie in [0, 1], got {gamma}")
    if not -1.0 <= m < 1.0:
        raise OutOfRangeError(f"m must lie in [-1, 1), got {m}")
    if eta < 0.0:
        raise OutOfRangeError(f"eta must be nonnegative, got {eta}")
    corr = (2.0 * gamma / math.pi) * math.atan(eta)
    beta0 = max(0.0, -corr / (alpha * (1.0 - m)))
    if beta <= beta0:
        raise OutOfRangeError(f"beta must exceed beta0 = {beta0}")
    mu1 = alpha * beta * (1.0 - m) + corr
    mu2 = alpha * beta * (1.0 + m) + corr
    return SectorParams(
        mu1=mu1,
        mu2=mu2,
        mu=(mu2 - mu1) / (mu1 + mu2),
        delta=0.5 * (mu1 + mu2),
        a_mag=abs(math.tan(0.25 * math.pi * m)),
        beta0=beta0,
        eta=eta,
    )


def eta_infimum(
    weight: Callable[[np.ndarray], np.ndarray],
    beta: float,
    n_radii: int = 32,
    n_angles: int = 128,
) -> float:
    """Infimum over the disk of beta Re(w) / (1 + beta |Im(w)|) for a weight w(z).

    Sampled on a radial-angular grid reaching radius 0.999. The weight
    must keep a nonnegative real part; a negative sample raises
    NegativeRealPartError.
    """
    if beta <= 0.0:
        raise OutOfRangeError(f"beta must be positive, got {beta}")
    r = np.linspace(1e-3, 0.999, n_radii)
    t = np.linspace(0.0, 2.0 * np.pi, n_angles, endpoint=False)
    z = r[:, None] * np.exp(1j * t[None, :])
    lam = np.asarray(weight(z), dtype=complex)
    if np.min(lam.real) < 0.0:
        raise NegativeRealPartError("weight has negative real part on the grid")
    vals = beta * lam.real / (1.0 + beta * np.abs(lam.imag))
    return float(np.min(vals))


def reciprocal_order_sector(alpha: float, beta: float) -> float:
    """Sector parameter delta = (2/pi) asin(beta/(1 - alpha)) of the
    reciprocal-order conclusion; requires beta <= 1 - alpha."""
    if not 0.0 <= alpha < 1.0:
        raise OutOfRangeError(f"alpha must lie in [0, 1), got {alpha}")
    if not 0.0 < beta <= 1.0 - alpha:
        raise OutOfRangeError(f"beta must lie in (0, 1 - alpha], got {beta}")
    return (2.0 / math.pi) * math.asin(beta / (1.0 - alpha))


@dataclass(frozen=True)
class TiltReport:
    """Combined tilt of a two-sided subordination sandwich."""

    mu: float
    gamma: float
    holds: bool
    excess: float


def _half_tilt(x: float, y: float, cos_angle: float) -> float:
    num = x * x + y * y + 2.0 * x * y * cos_angle
    den = 1.0 + x * x * y * y + 2.0 * x * y * cos_angle
    return math.asin(math.sqrt(min(1.0, max(0.0, num / den))))


def double_subordination_tilt(
    a: float,
    b: float,
    c: float,
    d: float,
    l: float,
    m: float,
    alpha: float,
    strict: bool = True,
) -> TiltReport:
    """Total argument spread mu and tilt exponent gamma when a function is
    sandwiched between two tilted first-order maps.

    The sandwich forces |arg| <= mu; the conclusion needs mu <= alpha pi/2.
    With strict=True the failing case raises ConditionFailedError carrying
    the excess mu - alpha pi / 2; otherwise the report flags it.
    """
    for name, val in (("a", a), ("b", b), ("c", c), ("d", d)):
        if not 0.0 <= val <= 1.0:
            raise OutOfRangeError(f"{name} must lie in [0, 1], got {val}")
    for name, val in (("l", l), ("m", m)):
        if not -1.0 <= val <= 1.0:
            raise OutOfRangeError(f"{name} must lie in [-1, 1], got {val}")
    if alpha <= 0.0:
        raise OutOfRangeError(f"alpha must be positive, got {alpha}")
    cos_m, cos_l = math.cos(math.pi * m), math.cos(math.pi * l)
    if c * d * cos_m + 1.0 <= 0.0 or a * b * cos_l + 1.0 <= 0.0:
        raise DegenerateMapError("tilt denominator vanishes")
    mu = _half_tilt(c, d, cos_m) + _half_tilt(a, b, cos_l)
    big_a = c * d * math.sin(math.pi * m) / (c * d * cos_m + 1.0)
    big_b = a * b * math.sin(math.pi * l) / (a * b * cos_l + 1.0)
    gamma = (math.atan(big_a) - math.atan(big_b)) / mu if mu > 0.0 else 0.0
    excess = mu - 0.5 * alpha * math.pi
    holds = excess <= 1e-12
    if strict and not holds:
        raise ConditionFailedError(
            f"combined tilt {mu:.6g} exceeds alpha pi/2 by {excess:.6g}", excess=excess
        )
    return TiltReport(mu=mu, gamma=gamma, holds=holds, excess=excess)
