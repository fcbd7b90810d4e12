import random
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from umbral import poly as P
from umbral.csemigroup import CFunction, convolve
from umbral.errors import DegreeOverflow, NotADeltaOperator, NotShiftInvariant
from umbral.operators import (
    DeltaOp,
    ShiftInvOp,
    abel,
    apply_delta,
    apply_series,
    backward_difference,
    basic_sequence,
    degree_lowering_check,
    delta_family_kernels,
    derivative,
    expand_operator,
    forward_difference,
    functional_of,
    hopf_product,
    kernel_action,
    kernel_from_functional,
    operator_from_functional,
    operator_from_kernel,
    operator_to_convolution,
)
from umbral.series import Series, mul
from umbral.token import (
    abel_sequence,
    binomial_sequence,
    exponential_sequence,
    is_token,
    rising_sequence,
)

from oracles import taylor_shift_coeffs

N = 8


def translation(h):
    return lambda p: P.translate(P.poly(p), Fraction(h))


def test_delta_validation():
    with pytest.raises(NotADeltaOperator):
        DeltaOp(Series((1, 1, 0)))
    with pytest.raises(NotADeltaOperator):
        DeltaOp(Series((0, 0, 1)))


def test_forward_difference_action():
    p = (Fraction(0), Fraction(0), Fraction(1))
    assert apply_delta(forward_difference(4), p) == P.poly([1, 2])


def test_backward_difference_action():
    p = (Fraction(0), Fraction(0), Fraction(1))
    assert apply_delta(backward_difference(4), p) == P.poly([-1, 2])


def test_degree_overflow():
    with pytest.raises(DegreeOverflow):
        apply_series(Series.x(2), P.monomial(5))


@pytest.mark.parametrize("make_q, expected", [
    (derivative, exponential_sequence),
    (forward_difference, binomial_sequence),
    (backward_difference, rising_sequence),
    (lambda n: abel(Fraction(1, 2), n), lambda n: abel_sequence(Fraction(1, 2), n)),
])
def test_basic_sequences(make_q, expected):
    assert basic_sequence(make_q(N), N) == expected(N)


def test_nonclassical_basic_sequence():
    q = DeltaOp(Series((0, 1, 1, 0, 0)))  # D + D^2
    p = basic_sequence(q, 4)
    assert p.poly(2) == P.poly([0, -1, Fraction(1, 2)])
    assert p.poly(3) == P.poly([0, 2, -1, Fraction(1, 6)])
    assert p.poly(4) == P.poly([0, -5, Fraction(5, 2), Fraction(-1, 2), Fraction(1, 24)])
    assert is_token(p)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=3), min_size=5, max_size=5),
       st.fractions(min_value=-3, max_value=3, max_denominator=3).filter(bool))
def test_basic_sequence_properties(tail, q1):
    q = DeltaOp(Series((0, q1) + tuple(tail)))
    p = basic_sequence(q, 6)
    assert is_token(p)
    for n in range(1, 7):
        assert p(n, 0) == 0
        assert apply_delta(q, p.poly(n)) == p.poly(n - 1)


def test_expand_translation():
    h = Fraction(3, 7)
    s = expand_operator(translation(h), derivative(N), N)
    assert list(s.a.coeffs) == taylor_shift_coeffs(h, N)


def test_expand_translation_in_binomial_basis():
    # E^h = (1 + Delta)^h, so a_k = C(h, k)
    s = expand_operator(translation(5), forward_difference(N), N)
    assert s.a.coeffs[:6] == (1, 5, 10, 10, 5, 1)
    assert all(c == 0 for c in s.a.coeffs[6:])


def test_expand_rejects_non_invariant():
    with pytest.raises(NotShiftInvariant):
        expand_operator(lambda p: P.mul(P.monomial(1), P.poly(p)), derivative(4), 4)


def test_shift_inv_op_round_trip():
    q = forward_difference(N)
    s = ShiftInvOp(Series.from_values([1, -2, Fraction(1, 3)] + [0] * (N - 2)), q)
    again = expand_operator(s, q, N)
    assert again.a == s.a


def test_kernel_action_matches_operator():
    q = forward_difference(N)
    k = CFunction.from_list([2, 0, -1] + [0] * (N - 2))
    s = operator_from_kernel(k, q)
    basic = basic_sequence(q, N)
    target = P.poly([1, -2, 0, 3])
    coords = basic.coordinates(target)
    image = kernel_action(k, coords)
    assert P.combine(basic.polys(), image) == s(target)


def test_functional_round_trip():
    moments = [Fraction(1), Fraction(2), Fraction(1, 3), Fraction(-1), Fraction(5), 0, 0, 0, 0]
    op = operator_from_functional(moments)
    assert functional_of(op, N) == moments
    s = expand_operator(op, derivative(N), N)
    assert s.a.coeffs == tuple(Fraction(m, factorial(k)) for k, m in enumerate(moments))


def test_kernel_from_functional_evaluation():
    # evaluation at 2 against binomial basis gives C(2, n)
    k = kernel_from_functional([2 ** j for j in range(N + 1)], forward_difference(N), N)
    assert k.as_list() == [1, 2, 1] + [0] * (N - 2)


def test_delta_family_kernels_are_shifts():
    t = delta_family_kernels(forward_difference(5), 5)
    assert t.mat == tuple(tuple(int(n == k) for n in range(6)) for k in range(6))


def test_hopf_product_matches_series():
    a, b = CFunction.from_list([1, 2, 3]), CFunction.from_list([0, 1, 1])
    assert hopf_product(a, b).to_series() == mul(Series((1, 2, 3)), Series((0, 1, 1)))


def test_degree_lowering():
    assert degree_lowering_check(forward_difference(N), binomial_sequence(N))
    assert degree_lowering_check(abel(2, N), exponential_sequence(N))
    assert not degree_lowering_check(Series.exp(N), exponential_sequence(N))


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 2**32))
def test_composition_is_convolution(seed):
    rng = random.Random(seed)
    q = forward_difference(6)
    a1 = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(7)]
    a2 = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(7)]
    s1, s2 = ShiftInvOp(Series(tuple(a1)), q), ShiftInvOp(Series(tuple(a2)), q)
    composed = expand_operator(lambda p: s1(s2(p)), q, 6)
    expected = convolve(operator_to_convolution(s1), operator_to_convolution(s2))
    assert operator_to_convolution(composed) == expected


def test_translation_coefficients_factorials():
    s = expand_operator(translation(1), derivative(5), 5)
    assert s.a.coeffs == tuple(Fraction(1, factorial(k)) for k in range(6))
