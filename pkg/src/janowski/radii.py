"""Radius formulas: how far one first-order class reaches into another.

The central quantity is the largest R such that a function subordinate
to the powered source map on the unit disk is subordinate to the powered
target map on |z| < R. A triangle-inequality estimate of the composed
map gives the closed form implemented by `subordination_radius`; R >= 1
is exactly the full-disk inclusion criterion of `class_inclusion`.

The starlike-radius pair solves, in closed form and independently by
bisection, the angle equation that marks where the argument bound of the
image sector hits the starlikeness threshold; the threshold power
alpha_star is the root of 2 a + (2/pi) atan(a) = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateMapError, NoRootError, OutOfRangeError

# Orientation of the starlike-order chain implied by the inclusion
# criterion: with target order a1 (A = 1 - 2 a1, B = -1) and source order
# a2 (C = 1 - 2 a2, D = -1) the criterion holds iff a1 <= a2, i.e. the
# higher-order class is the smaller one. Some statements of the chain
# print the reverse orientation; the algebra here is authoritative.
INCLUSION_ORIENTATION_NOTE = (
    "starlike-order chain: the order-a2 class sits inside the order-a1 "
    "class iff a1 <= a2 (criterion algebra; reversed in some statements)"
)


@dataclass(frozen=True)
class RadiusProblem:
    """Subordination-radius instance: source (C, D, beta, delta) into target
    (A, B, alpha, gamma), each a powered, shifted first-order map."""

    A: complex
    B: complex
    alpha: float
    gamma: complex
    C: complex
    D: complex
    beta: float
    delta: complex

    def __post_init__(self):
        for hi, lo, name in ((self.A, self.B, "target"), (self.C, self.D, "source")):
            if abs(complex(hi) - complex(lo)) <= 1e-12:
                raise DegenerateMapError(f"{name} map has equal parameters")
        for a, name in ((self.alpha, "alpha"), (self.beta, "beta")):
            if not 0.0 < a <= 1.0:
                raise OutOfRangeError(f"{name} must lie in (0, 1], got {a}")
        for g, name in ((self.gamma, "gamma"), (self.delta, "delta")):
            if abs(complex(g) - 1.0) <= 1e-12:
                raise OutOfRangeError(f"{name} = 1 collapses the shifted map")


def subordination_radius(prob: RadiusProblem) -> float:
    """Radius (capped at 1) on which source-subordinate functions are
    target-subordinate."""
    A, B, C, D = (complex(prob.A), complex(prob.B), complex(prob.C), complex(prob.D))
    gamma, delta = complex(prob.gamma), complex(prob.delta)
    inv_a = 1.0 / prob.alpha
    num = prob.alpha * abs(A - B) * abs(1.0 - gamma) ** inv_a
    cross = A * D * (gamma - 1.0) + B * (C * (1.0 - delta) + D * (delta - gamma))
    den = prob.beta * abs(1.0 - gamma) ** (inv_a - 1.0) * (
        abs(C - D) * abs(delta - 1.0) + abs(cross)
    )
    if den == 0.0:
        return 1.0
    return min(num / den, 1.0)


def class_inclusion(
    A: complex, B: complex, alpha: float, C: complex, D: complex, beta: float
) -> bool:
    """Whether every (C, D, beta)-subordinate function is (A, B, alpha)-subordinate
    on the whole disk: beta (|C - D| + |A D - B C|) <= alpha |A - B|."""
    A, B, C, D = complex(A), complex(B), complex(C), complex(D)
    if abs(A - B) <= 1e-12 or abs(C - D) <= 1e-12:
        raise DegenerateMapError("class parameters must differ")
    for a, name in ((alpha, "alpha"), (beta, "beta")):
        if not 0.0 < a <= 1.0:
            raise OutOfRangeError(f"{name} must lie in (0, 1], got {a}")
    return beta * (abs(C - D) + abs(A * D - B * C)) <= alpha * abs(A - B) + 1e-12


def uralegaddi_radius(A: complex, B: complex, alpha: float, beta2: float) -> float:
    """Radius of membership in the Uralegaddi class Re(z f'/f) < beta2, beta2 > 1."""
    A, B = complex(A), complex(B)
    if abs(A - B) <= 1e-12:
        raise DegenerateMapError("A and B must differ")
    if beta2 <= 1.0:
        raise OutOfRangeError(f"beta2 must exceed 1, got {beta2}")
    den = 2.0 * (beta2 + 1.0) + abs(A - B * (2.0 * beta2 - 1.0))
    return min(alpha * abs(A - B) / den, 1.0)


def reciprocal_radius(A: complex, B: complex, alpha: float, beta2: float) -> float:
    """Radius of reciprocal starlikeness Re(f/(z f')) > beta2, 0 <= beta2 < 1."""
    A, B = complex(A), complex(B)
    if abs(A - B) <= 1e-12:
        raise DegenerateMapError("A and B must differ")
    if not 0.0 <= beta2 < 1.0:
        raise OutOfRangeError(f"beta2 must lie in [0, 1), got {beta2}")
    den = 2.0 * beta2 + abs(A - B * (2.0 * beta2 - 1.0))
    if den == 0.0:
        return 1.0
    return min(alpha * abs(A - B) / den, 1.0)


def alpha_star(tol: float = 1e-12) -> float:
    """Power threshold: the unique root of 2 a + (2/pi) atan(a) = 1 in (0, 1).

    Solved by plain bisection; the residual at the returned point is far
    below `tol`.
    """
    f = lambda a: 2.0 * a + (2.0 / math.pi) * math.atan(a) - 1.0
    lo, hi = 0.0, 1.0
    while hi - lo > min(tol, 1e-12) * 0.01:
        mid = 0.5 * (lo + hi)
        if f(mid) <= 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class StarlikeRadius:
    """Radius of starlikeness with the angle theta that produced it."""

    value: float
    theta: float
    method: str


def starlike_radius(A: float, B: float, beta: float, method: str = "closed") -> StarlikeRadius:
    """Largest x with beta asin((A - B) x / (1 - A B x^2)) reaching the
    starlikeness threshold angle (1 - alpha_star) pi / 2.

    Requires A in (0, 1], B in [-1, 0) and beta >= 1 - alpha_star
    (about 0.61655), else the threshold angle is unreachable. `method`
    selects the quadratic closed form or an independent bisection on the
    angle equation; the two agree to 1e-9 and both report the smallest
    positive root.
    """
    if not 0.0 < A <= 1.0:
        raise OutOfRangeError(f"A must lie in (0, 1], got {A}")
    if not -1.0 <= B < 0.0:
        raise OutOfRangeError(f"B must lie in [-1, 0), got {B}")
    astar = alpha_star()
    if beta < (1.0 - astar) - 1e-9:
        raise OutOfRangeError(f"beta must be at least {1.0 - astar:.6f}, got {beta}")
    theta = (1.0 - astar) * math.pi / (2.0 * beta)
    s = math.sin(theta)
    # The angle map x -> (A - B) x / (1 - A B x^2) increases on (0, 1]
    # because A B < 0, so a root exists in (0, 1] iff the value at 1
    # clears s.
    if (A - B) / (1.0 - A * B) < s - 1e-14:
        raise NoRootError("threshold angle is not attained inside the disk")
    if method == "closed":
        disc = (A - B) ** 2 + 4.0 * A * B * s * s
        root = (-(A - B) + math.sqrt(max(0.0, disc))) / (2.0 * A * B * s)
        return StarlikeRadius(value=root, theta=theta, method=method)
    if method == "bisect":
        target = (1.0 - astar) * 0.5 * math.pi

        def g(x: float) -> float:
            arg = (A - B) * x / (1.0 - A * B * x * x)
            return beta * math.asin(min(1.0, arg)) - target

        lo, hi = 0.0, 1.0
        if g(hi) < 0.0:
            raise NoRootError("threshold angle is not attained inside the disk")
        while hi - lo > 1e-14:
            mid = 0.5 * (lo + hi)
            if g(mid) < 0.0:
                lo = mid
            else:
                hi = mid
        return StarlikeRadius(value=0.5 * (lo + hi), theta=theta, method=method)
    raise OutOfRangeError(f"unknown method {method!r}")
