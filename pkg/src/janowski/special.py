"""Special evaluations: the hypergeometric pieces, the starlikeness kernel,
the extremal dominants of the differential-subordination results, and the
closed-form order/criterion helpers that accompany them.

Everything here is scalar-analytic on the open unit disk. The kernel and
best-dominant integrals are done with adaptive Gauss panels along radial
segments; integrands are written with complex log1p/expm1 equivalents so
they stay accurate near the origin, where the naive quotient forms cancel.
"""

from __future__ import annotations

import cmath
import math

import numpy as np
from dataclasses import dataclass
from typing import Callable

from ._quad import adaptive_gauss
from .errors import (
    BranchUndefinedError,
    DegenerateMapError,
    NoConvergenceError,
    NonCaratheodoryLambdaError,
    OutOfRangeError,
    ParameterError,
    PoleOnBoundaryError,
)


def _near_nonpositive_int(x: complex) -> bool:
    xr = complex(x)
    return abs(xr.imag) < 1e-12 and xr.real < 0.5 and abs(xr.real - round(xr.real)) < 1e-12


def hyper_3f2(
    a1: complex,
    a2: complex,
    a3: complex,
    b1: complex,
    b2: complex,
    x: complex,
    tol: float = 1e-15,
    max_terms: int = 100_000,
) -> complex:
    """Generalized hypergeometric sum 3F2(a1, a2, a3; b1, b2; x) by direct
    term recurrence.

    Terms are accumulated until three consecutive terms are below
    `tol` relative to the running sum; exceeding `max_terms` raises
    NoConvergenceError (the series diverges for |x| > 1 and converges
    slowly near |x| = 1).
    """
    for b in (b1, b2):
        if _near_nonpositive_int(b):
            raise ParameterError(f"lower parameter {b} is a nonpositive integer")
    total = complex(1.0)
    term = complex(1.0)
    small_run = 0
    for n in range(max_terms):
        term *= (a1 + n) * (a2 + n) * (a3 + n) * x / ((b1 + n) * (b2 + n) * (1 + n))
        total += term
        if abs(term) < tol * max(abs(total), 1e-300):
            small_run += 1
            if small_run >= 3:
                return total
        else:
            small_run = 0
    raise NoConvergenceError(f"3F2 series did not settle within {max_terms} terms at x={x}")


def _clog1p(x: complex) -> complex:
    """log(1 + x) for complex x without cancellation at small |x| (Kahan)."""
    u = 1.0 + x
    if u == 1.0:
        return complex(x)
    return cmath.log(u) * (x / (u - 1.0))


def _cexpm1(y: complex) -> complex:
    """exp(y) - 1 for complex y without cancellation at small |y| (Kahan)."""
    u = cmath.exp(y)
    if u == 1.0:
        return complex(y)
    return (u - 1.0) * (y / cmath.log(u))


def _clog1p_arr(x: np.ndarray) -> np.ndarray:
    """Vectorized twin of _clog1p over complex arrays."""
    u = 1.0 + x
    plain = u == 1.0
    safe = np.where(plain, 2.0, u)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.log(safe) * x / (safe - 1.0)
    return np.where(plain, x, out)


def _cexpm1_arr(y: np.ndarray) -> np.ndarray:
    """Vectorized twin of _cexpm1 over complex arrays."""
    u = np.exp(y)
    plain = u == 1.0
    safe = np.where(plain, 2.0, u)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = (safe - 1.0) * y / np.log(safe)
    return np.where(plain, y, out)


def _kernel_rate(A: complex, b: float, alpha: float, t: np.ndarray) -> np.ndarray:
    """Integrand (((1 + A t) / (1 - b t))^alpha - 1) / t, finite at t = 0."""
    t = np.asarray(t, dtype=complex)
    tiny = np.abs(t) < 1e-300
    tt = np.where(tiny, 1.0, t)
    ell = _clog1p_arr(A * tt) - _clog1p_arr(-b * tt)
    return np.where(tiny, alpha * (A + b), _cexpm1_arr(alpha * ell) / tt)


def kernel_integral(
    A: complex,
    b: float,
    alpha: float,
    z: complex,
    tol: float = 1e-10,
    method: str = "quad",
) -> complex:
    """Starlikeness kernel K(z) = int_0^z exp(int_0^w rate dt) dw, where the
    inner rate is (((1+At)/(1-bt))^alpha - 1)/t.

    `method="quad"` evaluates the nested integral with adaptive panels.
    `method="closed"` requires alpha = 1 and uses the elementary
    antiderivatives; it exists as an independent route, not a fast path,
    so the two can be compared.
    """
    A = complex(A)
    if not 0.0 <= b <= 1.0:
        raise OutOfRangeError(f"b must lie in [0, 1], got {b}")
    if not 0.0 < alpha <= 1.0:
        raise OutOfRangeError(f"alpha must lie in (0, 1], got {alpha}")
    if abs(A) > 1.0 + 1e-12:
        raise OutOfRangeError(f"|A| must not exceed 1, got {abs(A)}")
    z = complex(z)
    if b > 0.0 and abs(z) >= 1.0 / b:
        raise OutOfRangeError(f"z must satisfy |z| < 1/b = {1.0 / b}")
    if (A * z).imag == 0.0 and (A * z).real <= -1.0:
        raise BranchUndefinedError("the segment to z crosses the zero of 1 + A t")
    if method == "closed":
        if alpha != 1.0:
            raise OutOfRangeError("closed form requires alpha = 1")
        if abs(A + b) < 1e-14:
            return z
        if b == 0.0:
            return _cexpm1(A * z) / A
        if abs(A) < 1e-14:
            return -_clog1p(-b * z) / b
        return (cmath.exp((-A / b) * _clog1p(-b * z)) - 1.0) / A
    if method != "quad":
        raise OutOfRangeError(f"unknown method {method!r}")

    def inner(w: complex) -> complex:
        if abs(w) < 1e-300:
            return 0.0
        return w * adaptive_gauss(lambda s: _kernel_rate(A, b, alpha, s * w), 0.0, 1.0, tol=tol * 0.1)

    def outer(s: np.ndarray) -> np.ndarray:
        return np.array([cmath.exp(inner(si * z)) for si in s])

    return z * adaptive_gauss(outer, 0.0, 1.0, tol=tol)


def macgregor_gamma(beta: float) -> float:
    """Order of starlikeness guaranteed by Re f' > beta on the disk:
    (1 - 2 beta) / (2 (2^(1 - 2 beta) - 1)), continued by 1/(2 ln 2) at
    beta = 1/2."""
    if not 0.0 <= beta < 1.0:
        raise OutOfRangeError(f"beta must lie in [0, 1), got {beta}")
    u = 1.0 - 2.0 * beta
    if u == 0.0:
        return 1.0 / (2.0 * math.log(2.0))
    if abs(u) >= 0.25:
        # 2.0 ** u is correctly rounded here and keeps beta = 0 exactly 1/2.
        return u / (2.0 * (2.0 ** u - 1.0))
    return u / (2.0 * math.expm1(u * math.log(2.0)))


@dataclass(frozen=True)
class DominantSpec:
    """Parameters of the explicit dominant attached to the integro-differential
    operator inclusion: base map (1+Az)/(1-bz), outer power alpha*gamma, and
    the affine weights mu, eta, delta, rho of the bracketed combination."""

    A: complex
    b: float
    alpha: float
    gamma: float
    mu: complex
    eta: complex
    delta: complex
    rho: complex

    def __post_init__(self):
        if not 0.0 <= self.b <= 1.0:
            raise OutOfRangeError(f"b must lie in [0, 1], got {self.b}")
        if not 0.0 <= self.alpha <= 1.0:
            raise OutOfRangeError(f"alpha must lie in [0, 1], got {self.alpha}")
        if not 0.0 <= self.gamma <= 1.0:
            raise OutOfRangeError(f"gamma must lie in [0, 1], got {self.gamma}")

    @property
    def value_at_origin(self) -> complex:
        # mu delta + mu rho, kept in bracket order so it matches the z = 0
        # evaluation bit for bit
        return complex(self.mu) * complex(self.delta) + complex(self.mu) * complex(self.rho)


def operator_dominant(spec: DominantSpec, z: complex) -> complex:
    """Evaluate the dominant h(z) = Q^(alpha gamma) (mu delta + mu rho Q^gamma
    + eta gamma (A + b) z / ((1 + A z)(1 - b z))), Q = (1+Az)/(1-bz)."""
    z = complex(z)
    num = 1.0 + complex(spec.A) * z
    den = 1.0 - spec.b * z
    if abs(den) < 1e-14 or abs(num) < 1e-14:
        raise PoleOnBoundaryError("evaluation point hits a zero or pole of the base map")
    q_log = cmath.log(num) - cmath.log(den)
    bracket = (
        complex(spec.mu) * complex(spec.delta)
        + complex(spec.mu) * complex(spec.rho) * cmath.exp(spec.gamma * q_log)
        + complex(spec.eta) * spec.gamma * (complex(spec.A) + spec.b) * z / (num * den)
    )
    return cmath.exp(spec.alpha * spec.gamma * q_log) * bracket


def best_dominant(
    psi: Callable[[complex], complex],
    lam: Callable[[complex], complex],
    z: complex,
    tol: float = 1e-10,
) -> complex:
    """Best dominant q(z) of the first-order subordination with target psi and
    coefficient lambda: q = z E(z) / int_0^z E(t)/lambda(t) dt with
    E(t) = exp(int_0^t (psi/lambda - 1)/s ds).

    Both callables must equal 1 at the origin (otherwise the exponent
    integral diverges) and lambda must keep positive real part along the
    segment; violations raise NonCaratheodoryLambdaError.
    """
    z = complex(z)
    if abs(z) >= 1.0:
        raise OutOfRangeError("z must lie in the open unit disk")
    if abs(complex(lam(0.0)) - 1.0) > 1e-9:
        raise NonCaratheodoryLambdaError("lambda(0) must equal 1")
    if abs(complex(psi(0.0)) - 1.0) > 1e-9:
        raise ParameterError("psi(0) must equal 1")
    for k in range(1, 65):
        t = z * (k / 64.0)
        if complex(lam(t)).real <= 0.0:
            raise NonCaratheodoryLambdaError(f"Re lambda <= 0 at t={t}")

    def exponent(t: complex) -> complex:
        if abs(t) < 1e-300:
            return 0.0

        def f(u: np.ndarray) -> np.ndarray:
            return np.array([(complex(psi(ui * t)) / complex(lam(ui * t)) - 1.0) / ui for ui in u])

        return adaptive_gauss(f, 0.0, 1.0, tol=tol * 0.1)

    def denom_integrand(u: np.ndarray) -> np.ndarray:
        return np.array([cmath.exp(exponent(ui * z)) / complex(lam(ui * z)) for ui in u])

    denom = z * adaptive_gauss(denom_integrand, 0.0, 1.0, tol=tol)
    if abs(denom) < 1e-300:
        raise DegenerateMapError("denominator integral vanishes")
    return z * cmath.exp(exponent(z)) / denom


def silverman_inclusion(A: complex, b: float, alpha: float, beta: float) -> bool:
    """Coefficient criterion placing the operator class inside the bounded-
    turning class: beta (1+b)^(alpha-1) (1+|A|)^(alpha+1) <= alpha |A + b|."""
    A = complex(A)
    if not 0.0 <= b <= 1.0:
        raise OutOfRangeError(f"b must lie in [0, 1], got {b}")
    if not 0.0 < alpha <= 1.0:
        raise OutOfRangeError(f"alpha must lie in (0, 1], got {alpha}")
    if beta <= 0.0:
        raise OutOfRangeError(f"beta must be positive, got {beta}")
    if abs(A + b) < 1e-14:
        raise DegenerateMapError("A + b = 0 leaves the criterion vacuous")
    lhs = beta * (1.0 + b) ** (alpha - 1.0) * (1.0 + abs(A)) ** (alpha + 1.0)
    return lhs <= alpha * abs(A + b) + 1e-12
