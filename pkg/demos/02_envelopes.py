"""Tight boxes around the powered map's boundary curve.

For h(z) = (1 - gamma) w(z)^alpha + gamma the image of the circle |z| = r
is a closed curve.  envelope_bounds finds its exact argument, modulus,
real-part and imaginary-part ranges by locating the critical angles of
each directional objective, and empirical_bounds rebuilds the same box
from nothing but dense sampling.  The two must agree to several digits.
"""

import numpy as np

from janowski import (
    JanowskiParams,
    critical_points,
    empirical_bounds,
    envelope_bounds,
    sample_curve,
)


def describe(label: str, lo: float, hi: float) -> None:
    print(f"  {label:4s}: [{lo:+.12f}, {hi:+.12f}]")


def main() -> None:
    p = JanowskiParams(A=1.0, B=0.0, alpha=0.5, gamma=0.0)

    # The square-root image of the unit disk shifted to live around 1:
    # two critical angles, one at the cusp where the curve meets 0.
    cp = critical_points(p, 1.0)
    print(f"critical angles at r = 1: t1 = {cp.t1:.12f}, t2 = {cp.t2:.12f},"
          f" origin touch at tau = {cp.tau:.12f}")

    b = envelope_bounds(p, 1.0)
    print("closed-form box:")
    describe("re", *b.re)
    describe("im", *b.im)
    describe("mod", *b.mod)
    describe("arg", *b.arg)

    # Monte-Carlo reconstruction from half a million interior samples.
    e = empirical_bounds(p, 1.0, n=500_000)
    print("sampled box:")
    describe("re", *e.re)
    describe("im", *e.im)
    gap = max(
        abs(b.re[0] - e.re[0]), abs(b.re[1] - e.re[1]),
        abs(b.im[0] - e.im[0]), abs(b.im[1] - e.im[1]),
    )
    print(f"largest endpoint gap: {gap:.2e}")

    # The raw curve is available for plotting: polar fields M = |w|^alpha
    # and N = alpha arg w, plus the first-order components u, v.
    curve = sample_curve(p, 1.0, n=8)
    print("\nfirst few curve samples (t, M, N):")
    for t, M, N in zip(curve.t[:4], curve.M[:4], curve.N[:4]):
        print(f"  t = {t:.6f}  M = {M:.9f}  N = {N:+.9f}")

    # A shifted example with gamma > 0: the report carries both the raw
    # power box and the affine-shifted view.
    q = JanowskiParams(A=0.9, B=-0.2, alpha=0.75, gamma=0.3)
    bq = envelope_bounds(q, 0.8)
    print(f"\nshifted map box (A=0.9, B=-0.2, alpha=0.75, gamma=0.3, r=0.8):")
    describe("re", *bq.shifted.re)
    describe("im", *bq.shifted.im)


if __name__ == "__main__":
    main()
