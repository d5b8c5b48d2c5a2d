"""Special values, integral dominants, and the self-checking oracle.

The first half evaluates the closed-form machinery: a generalized
hypergeometric sum, the exponential-of-integral kernel, the sharp
constant of the two-sided average, the first-order dominant, and the
best dominant of a weighted derivative subordination.  The second half
turns the package on itself: random bounded analytic functions are
pushed through the statements and the conclusions are re-verified
numerically.
"""

import math

import numpy as np

from janowski import (
    DominantSpec,
    JanowskiParams,
    THEOREM_IDS,
    best_dominant,
    eval_powered,
    hyper_3f2,
    implication_trial,
    kernel_integral,
    macgregor_gamma,
    operator_dominant,
    random_schwarz,
    silverman_inclusion,
    subordination_pullback,
    verify_subordination,
)


def main() -> None:
    # A terminating check: with a unit numerator pair and matching
    # denominator the 3F2 series collapses to -log(1-x)/x.
    x = 0.5
    got = hyper_3f2(1.0, 1.0, 1.0, 2.0, 1.0, x)
    print(f"3F2 log collapse at x = 0.5: {got.real:.12f}"
          f" vs {-math.log1p(-x) / x:.12f}")

    # The kernel integral interpolates between e^z - 1 (b = 0) and the
    # geometric z / (1 - z) (b = 1) at alpha = A = 1.
    print(f"kernel(1, 0, 1, 1)   = {kernel_integral(1.0, 0.0, 1.0, 1.0).real:.12f}"
          f" (expect e - 1 = {math.e - 1.0:.12f})")
    print(f"kernel(1, 1, 1, 0.5) = {kernel_integral(1.0, 1.0, 1.0, 0.5).real:.12f}"
          f" (expect 1.0)")

    # Sharp order constant of the symmetric two-sided average.
    print(f"\ntwo-sided average constant at beta = 1/2: "
          f"{macgregor_gamma(0.5):.12f} (= 1 / (2 ln 2))")

    # The dominant of p + zp' for the extreme first-order target is
    # (1 + 2z - z^2) / (1 - z)^2; at z = 1/2 that is 7.
    spec = DominantSpec(A=1.0, b=1.0, alpha=1.0, gamma=1.0,
                        mu=1.0, eta=1.0, delta=1.0, rho=0.0)
    print(f"first-order dominant at z = 1/2: {operator_dominant(spec, 0.5).real:.12f}")

    # Best dominant of psi(z) = 1 + z under unit weight: z e^z / (e^z - 1).
    q = best_dominant(lambda t: 1.0 + t, lambda t: 1.0 + 0.0j, 0.5)
    want = 0.5 * math.e**0.5 / (math.e**0.5 - 1.0)
    print(f"best dominant q(1/2) = {q.real:.12f} (closed form {want:.12f})")

    # Membership of the integrated class inside the starlike family.
    print(f"silverman inclusion at (A=1, b=1, alpha=1, beta=1/2)? "
          f"{silverman_inclusion(1.0, 1.0, 1.0, 0.5)}")

    # --- the oracle half -------------------------------------------------

    # A random polynomial self-map of the disk fixing 0, with |w| < 1.
    w = random_schwarz(seed=7, degree=5)
    t = np.exp(1j * np.linspace(0.0, 2.0 * np.pi, 9))
    print(f"\nrandom bounded factor, degree {w.degree}: "
          f"max boundary modulus = {np.abs(w.value(t)).max():.6f}")

    # Pulling h(w(z)) back through h recovers |w(z)| exactly, which is how
    # subordination claims get checked without trusting the claimant.
    target = JanowskiParams(A=0.9, B=0.1, alpha=0.5, gamma=0.25)
    z = 0.65 * np.exp(1j * np.linspace(0.0, 2.0 * np.pi, 64))
    samples = eval_powered(target, w.value(z))
    back = subordination_pullback(samples, target)
    print(f"pullback of a genuine composite recovers the inner factor: "
          f"max recovered = {back.max():.12f}, "
          f"max true |omega| = {np.abs(w.value(z)).max():.12f}")
    print(f"verify_subordination accepts it? "
          f"{verify_subordination(samples, target, r=1.0)}")

    # Randomized implication trials: sample the hypothesis side of each
    # statement, test the conclusion numerically, report soundness.
    print(f"\ntrial catalogue: {sorted(THEOREM_IDS)}")
    for seed in range(3):
        rep = implication_trial("T3.3", seed=seed)
        print(f"  T3.3 seed {seed}: hypothesis={rep.hypothesis_holds} "
              f"conclusion={rep.conclusion_holds} margin={rep.margin:+.3e}")


if __name__ == "__main__":
    main()
