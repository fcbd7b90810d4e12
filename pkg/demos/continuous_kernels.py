"""
Semigroup laws of the Poisson and heat kernels
==============================================

Composite Gauss-Legendre quadrature checks that convolving two kernels
gives the kernel with added parameters.  Tail mass outside the
quadrature window is bounded in closed form and counted against the
tolerance.
"""

import math

import numpy as np

from umbral.kernels import KernelParams, check_semigroup, check_shift_delta, refinement_discrepancies

poisson = KernelParams("poisson", panels=400, half_width=200, tolerance=1e-6)
rep = check_semigroup(poisson, (0.0, 1.0), (0.0, 1.0))
print(f"poisson:     discrepancy {rep.max_discrepancy:.2e} + tail {rep.tail_bound:.2e} -> {rep.verdict}")

heat = KernelParams("weierstrass", panels=80, half_width=20, tolerance=1e-8)
rep = check_semigroup(heat, (0.0, 0.5), (0.0, 0.5))
print(f"weierstrass: discrepancy {rep.max_discrepancy:.2e} + tail {rep.tail_bound:.2e} -> {rep.verdict}")

# a wrong normalizing constant breaks the law
bad = KernelParams("poisson", panels=400, half_width=200, tolerance=1e-6, constant=2 / math.pi)
print("2/pi instead of 1/pi:", check_semigroup(bad, (0.0, 1.0), (0.0, 1.0)).verdict)

# doubling the panel count shrinks the discrepancy
coarse = KernelParams("poisson", panels=25, half_width=200, nodes=4)
print("refinement:", np.array(refinement_discrepancies(coarse, (0.0, 1.0), (0.0, 1.0))))

# shifts act on harmonic extensions of boundary data
print("shift by 0.5:", check_shift_delta(poisson, 0.5).to_dict())
