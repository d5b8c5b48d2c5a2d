"""Radius problems: how far into the disk a property survives.

Each solver answers a question of the form "up to which |z| = r does the
map (or a class member) keep property X?".  The closed forms are cheap;
where a bisection alternative exists the demo runs both and shows the
agreement.
"""

import numpy as np

from janowski import (
    INCLUSION_ORIENTATION_NOTE,
    RadiusProblem,
    alpha_star,
    class_inclusion,
    reciprocal_radius,
    starlike_radius,
    subordination_radius,
    uralegaddi_radius,
)


def main() -> None:
    # The turning-point order: unique root of 2a + (2/pi) atan(a) = 1.
    a = alpha_star()
    residual = 2.0 * a + (2.0 / np.pi) * np.arctan(a) - 1.0
    print(f"alpha* = {a:.12f} (defining residual {residual:+.2e})")

    # Largest radius where one powered map stays subordinate to another.
    prob = RadiusProblem(A=1.0, B=0.0, alpha=1.0, gamma=0.0,
                         C=1.0, D=-1.0, beta=1.0, delta=0.0)
    print(f"\nsubordination radius: {subordination_radius(prob):.12f}"
          f" (expect 1/3)")

    # Radius of the higher-order class reached from a given class, and the
    # radius where reciprocals keep positive real part of given order.
    print(f"uralegaddi radius (1, -1, 1, beta2=2):   "
          f"{uralegaddi_radius(1.0, -1.0, 1.0, 2.0):.12f}")
    print(f"reciprocal radius (1, -1, 1, beta2=3/4): "
          f"{reciprocal_radius(1.0, -1.0, 1.0, 0.75):.12f}")

    # Starlikeness of the double-integral average: closed quadratic root
    # against a bisection on the boundary condition.
    closed = starlike_radius(1.0, -1.0, 1.0)
    bisect = starlike_radius(1.0, -1.0, 1.0, method="bisect")
    print(f"\nstarlike radius, closed: {closed.value:.12f}"
          f" (theta = {closed.theta:.12f})")
    print(f"starlike radius, bisect: {bisect.value:.12f}"
          f" (gap {abs(closed.value - bisect.value):.2e})")

    # Membership between classes is a single inequality; note that the
    # subset relation runs against the order parameter.
    print(f"\nclass (1, -1, order 0.5) inside class (1, -1, order 0.25)? "
          f"{class_inclusion(0.5, -1.0, 1.0, 0.0, -1.0, 1.0)}")
    print(f"reverse direction? "
          f"{class_inclusion(0.0, -1.0, 1.0, 0.5, -1.0, 1.0)}")
    print(f"note: {INCLUSION_ORIENTATION_NOTE}")

    # A quick sweep: the starlike radius shrinks as the required turning
    # margin beta grows.
    print("\nbeta -> starlike radius for the extreme pair A=1, B=-1:")
    for beta in (1.0, 1.25, 1.5, 2.0):
        r = starlike_radius(1.0, -1.0, beta)
        print(f"  beta = {beta:4.2f}: r = {r.value:.9f}")


if __name__ == "__main__":
    main()
