"""Exact umbral calculus on cancellative semigroups.

Power series and semigroup convolution, tokens and t-transforms, delta
operators with their basic sequences, recurrence operators and
generating functions, incidence algebras, semantic umbrae, and numerical
checks of the Poisson and Gauss-Weierstrass kernels.
"""
from .csemigroup import UNDEFINED, CFunction, DivisorMonoid, NPlus, check_invariance, convolve, shift
from .genfun import (
    GenFunSpec,
    Recurrence,
    generating_function,
    solve_recurrence,
    transformed_operator_check,
    umbral_moment_recover,
)
from .operators import (
    DeltaOp,
    ShiftInvOp,
    apply_delta,
    basic_sequence,
    degree_lowering_check,
    expand_operator,
    hopf_product,
    operator_to_convolution,
)
from .series import EXPONENTIAL, ORDINARY, Series, compose, derive, integrate, inverse
from .token import DiscreteToken, PolySeq, is_discrete_token, is_token, reproducing_kernel, t_transform, umbral_apply

__version__ = "0.1.0"
