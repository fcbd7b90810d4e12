from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from umbral.csemigroup import (
    UNDEFINED,
    CFunction,
    DivisorMonoid,
    NPlus,
    check_associative,
    check_invariance,
    convolve,
    shift,
)
from umbral.errors import ElementOutOfBounds, SemigroupMismatch, SupportTooLarge
from umbral.series import Series, mul

from oracles import number_mobius

BOUND = 8
rationals = st.fractions(min_value=-9, max_value=9, max_denominator=6)
nplus_fns = st.lists(rationals, min_size=BOUND + 1, max_size=BOUND + 1).map(CFunction.from_list)


def test_lquot_nplus():
    n = NPlus(10)
    assert n.lquot(2, 5) == 3
    assert n.lquot(5, 2) is UNDEFINED


def test_lquot_divisors():
    d = DivisorMonoid(12)
    assert d.lquot(3, 12) == 4
    assert d.lquot(5, 12) is UNDEFINED


def test_cancellative():
    assert NPlus(6).check_cancellative()
    assert DivisorMonoid(12).check_cancellative()


def test_undefined_evaluates_to_zero():
    f = CFunction.from_list([1, 2, 3])
    assert f(UNDEFINED) == 0


def test_out_of_bounds():
    with pytest.raises(ElementOutOfBounds):
        CFunction(NPlus(3), {4: 1})


def test_delta_is_unit():
    f = CFunction.from_list([3, 0, 1, 7])
    d = CFunction.delta(NPlus(3))
    assert convolve(d, f) == f
    assert convolve(f, d) == f


def test_convolution_is_series_product():
    a, b = [1, 2, 0, 5], [3, -1, 4, 0]
    out = convolve(CFunction.from_list(a), CFunction.from_list(b))
    assert out.to_series() == mul(Series(tuple(a)), Series(tuple(b)))


def test_semigroup_mismatch():
    with pytest.raises(SemigroupMismatch):
        convolve(CFunction.from_list([1, 2]), CFunction.from_list([1, 2, 3]))


def test_dirichlet_mobius():
    d = DivisorMonoid(30)
    one = CFunction(d, {n: 1 for n in d.elements()})
    mu = CFunction(d, {n: number_mobius(n) for n in d.elements()})
    assert convolve(one, mu) == CFunction.delta(d)


def test_shift():
    f = CFunction.from_list([0, 1, 2, 3, 4])
    assert shift(2, f).as_list() == [2, 3, 4, 0, 0]


def test_invariance():
    f = CFunction.from_list([1, Fraction(1, 2), 3, 0, 0, 0])
    assert all(check_invariance(f, a) for a in range(4))


def test_invariance_support_too_large():
    with pytest.raises(SupportTooLarge):
        check_invariance(CFunction.from_list([0, 0, 0, 1]), 2)


@settings(max_examples=40, deadline=None)
@given(nplus_fns, nplus_fns, nplus_fns)
def test_associative_commutative(a, b, c):
    assert check_associative(NPlus(BOUND), [(a, b, c)])
    assert convolve(a, b) == convolve(b, a)
    assert convolve(a, b + c) == convolve(a, b) + convolve(a, c)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.tuples(st.integers(1, 24), rationals), max_size=5),
       st.lists(st.tuples(st.integers(1, 24), rationals), max_size=5),
       st.lists(st.tuples(st.integers(1, 24), rationals), max_size=5))
def test_dirichlet_associative(xs, ys, zs):
    d = DivisorMonoid(24)
    a, b, c = (CFunction(d, dict(v)) for v in (xs, ys, zs))
    assert check_associative(d, [(a, b, c)])
