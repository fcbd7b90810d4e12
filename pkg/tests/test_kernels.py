import math

import numpy as np
import pytest

from umbral.errors import NonpositiveScale
from umbral.kernels import (
    KernelParams,
    check_semigroup,
    check_shift_delta,
    eval_kernel,
    poisson_extension,
    refinement_discrepancies,
    total_mass,
)

POISSON = KernelParams("poisson", panels=400, half_width=200, nodes=16, tolerance=1e-6)
GAUSS = KernelParams("weierstrass", panels=80, half_width=20, nodes=16, tolerance=1e-8)


def test_peak_values():
    assert eval_kernel(POISSON, 0.0, 0.0, 2.0) == pytest.approx(1 / (2 * math.pi), rel=1e-15)
    assert eval_kernel(GAUSS, 1.5, 1.5, 0.5) == pytest.approx(1 / math.sqrt(math.pi), rel=1e-15)


def test_nonnegative():
    u = np.linspace(-50, 50, 101)
    assert (eval_kernel(POISSON, u, 0.3, 0.7) >= 0).all()
    assert (eval_kernel(GAUSS, u, 0.3, 0.7) >= 0).all()


@pytest.mark.parametrize("kp", [POISSON, GAUSS], ids=["poisson", "weierstrass"])
def test_unit_mass(kp):
    inside, outside = total_mass(kp, 0.5, 1.0)
    assert abs(inside + outside - 1) <= kp.tolerance
    assert abs(inside - 1) <= kp.tolerance + outside


def test_poisson_tail_is_arctan():
    _, outside = total_mass(POISSON, 0.0, 1.0)
    assert outside == pytest.approx(1 - 2 / math.pi * math.atan(200), rel=1e-6)


def test_nonpositive_scale():
    with pytest.raises(NonpositiveScale):
        eval_kernel(POISSON, 0.0, 0.0, 0.0)
    with pytest.raises(NonpositiveScale):
        check_semigroup(POISSON, (0, 1), (0, -1))


def test_poisson_semigroup():
    rep = check_semigroup(POISSON, (0.0, 1.0), (0.0, 1.0))
    assert rep.passed and len(rep.samples) == 21


def test_poisson_semigroup_shifted_centers():
    assert check_semigroup(POISSON, (0.5, 0.7), (-1.0, 1.3)).passed


def test_weierstrass_semigroup():
    assert check_semigroup(GAUSS, (0.0, 0.5), (0.0, 0.5)).passed


def test_corrupted_constant_fails():
    bad = KernelParams("poisson", 400, 200, 16, 1e-6, constant=2 / math.pi)
    rep = check_semigroup(bad, (0.0, 1.0), (0.0, 1.0))
    assert rep.verdict == "FAIL"


def test_refinement_monotone():
    kp = KernelParams("poisson", panels=25, half_width=200, nodes=4)
    d = refinement_discrepancies(kp, (0.0, 1.0), (0.0, 1.0), levels=3)
    assert d[0] > d[1] > d[2]


def test_extension_of_constant():
    v = poisson_extension(POISSON, lambda u: np.ones_like(u), [0.0, 3.0], 1.0)
    _, outside = total_mass(POISSON, 0.0, 1.0)
    assert np.all(np.abs(v - 1) <= 1e-6 + 2 * outside)


def test_shift_identity():
    rep = check_shift_delta(POISSON, 0.0)
    assert rep.composition_discrepancy == 0.0 and rep.commutation_discrepancy == 0.0


def test_shift_composition():
    rep = check_shift_delta(POISSON, 1.0, 2.0)
    assert rep.composition_discrepancy < 1e-12


def test_shift_commutes_with_extension():
    assert check_shift_delta(POISSON, 0.5).passed


def test_shift_needs_poisson():
    with pytest.raises(ValueError):
        check_shift_delta(GAUSS, 1.0)
