from fractions import Fraction
from math import comb, factorial

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from umbral.errors import FlavorMismatch, NonUnitConstantTerm, NonzeroInnerConstant
from umbral.series import (
    EXPONENTIAL,
    ORDINARY,
    Series,
    add,
    binomial_convolution,
    compose,
    derive,
    integrate,
    inverse,
    mul,
    series,
    to_exponential,
    to_ordinary,
)

from oracles import bell_by_recurrence, fibonacci, sympy_taylor, x

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def series_of(order, flavor=ORDINARY, unit=False):
    coeffs = st.lists(rationals, min_size=order + 1, max_size=order + 1)
    if unit:
        coeffs = coeffs.filter(lambda c: c[0] != 0)
    return coeffs.map(lambda c: Series(tuple(c), flavor))


class TestAdd:
    def test_identity(self):
        assert add(series([1, 1, 1]), series([0, 0, 0])) == series([1, 1, 1])

    def test_componentwise(self):
        assert add(series([1, 2]), series([3, 4])) == series([4, 6])

    def test_inverse(self):
        assert add(series([1, 1, 2, 3]), series([-1, -1, -2, -3])) == Series.zero(3)

    def test_min_order(self):
        assert add(series([1, 2, 3]), series([1, 1])).order == 1

    def test_flavor_mismatch(self):
        with pytest.raises(FlavorMismatch):
            add(series([1]), series([1], EXPONENTIAL))


class TestMul:
    def test_delta_identity(self):
        assert mul(series([1, 0, 0]), series([5, 7, 9])) == series([5, 7, 9])

    def test_square_truncates(self):
        assert mul(series([1, 1]), series([1, 1])) == series([1, 2])

    def test_fibonacci_annihilated(self):
        taps = series([1, -1, -1, 0, 0, 0, 0, 0, 0])
        assert mul(taps, series(fibonacci(8))) == Series.one(8)

    def test_flavor_mismatch(self):
        with pytest.raises(FlavorMismatch):
            mul(series([1, 2]), series([1, 2], EXPONENTIAL))

    @settings(max_examples=40, deadline=None)
    @given(series_of(5), series_of(5), series_of(5))
    def test_ring_laws(self, a, b, c):
        assert mul(a, b) == mul(b, a)
        assert mul(mul(a, b), c) == mul(a, mul(b, c))
        assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))


class TestInverse:
    def test_identity(self):
        assert inverse(Series.one(4)) == Series.one(4)

    def test_fibonacci(self):
        assert inverse(series([1, -1, -1, 0, 0, 0, 0])) == series([1, 1, 2, 3, 5, 8, 13])

    def test_scalar(self):
        assert inverse(series([2, 0, 0])) == series([Fraction(1, 2), 0, 0])

    def test_against_sympy(self):
        assert list(inverse(series([1, -1, -1] + [0] * 8)).coeffs) == sympy_taylor(1 / (1 - x - x**2), 10)

    def test_non_unit(self):
        with pytest.raises(NonUnitConstantTerm):
            inverse(series([0, 1]))

    @settings(max_examples=40, deadline=None)
    @given(series_of(6, unit=True))
    def test_product_is_one(self, a):
        assert mul(a, inverse(a)) == Series.one(6)


class TestCompose:
    def test_identity_inner(self):
        e = Series.exp(5)
        assert compose(e, Series.x(5)) == e

    def test_bell(self):
        e = Series.exp(6, EXPONENTIAL)
        b = compose(e, e - 1)
        assert b.values() == tuple(bell_by_recurrence(6))
        assert list(b.coeffs) == sympy_taylor(sp.exp(sp.exp(x) - 1), 6)

    def test_geometric_scaling(self):
        geo = inverse(series([1, -1, 0, 0]))
        assert compose(geo, series([0, 2, 0, 0])) == series([1, 2, 4, 8])

    def test_inner_constant(self):
        with pytest.raises(NonzeroInnerConstant):
            compose(Series.exp(3), Series.exp(3))


class TestCalculus:
    def test_derive(self):
        assert derive(series([1, 1, 1])) == series([1, 2])

    def test_integrate(self):
        assert integrate(series([1, 0, 0])) == series([0, 1, 0, 0])

    def test_integrate_cap(self):
        assert integrate(series([1, 0, 0]), max_order=2).order == 2

    @settings(max_examples=30, deadline=None)
    @given(series_of(4))
    def test_round_trip(self, a):
        assert derive(integrate(a)) == a


class TestFlavors:
    @settings(max_examples=30, deadline=None)
    @given(series_of(5), series_of(5))
    def test_binomial_convolution(self, a, b):
        prod = mul(to_exponential(a), to_exponential(b))
        assert prod.values() == binomial_convolution(a.coeffs, b.coeffs)

    @settings(max_examples=30, deadline=None)
    @given(series_of(5))
    def test_bijection(self, a):
        assert to_ordinary(to_exponential(a)) == a

    def test_binomial_convolution_oracle(self):
        a, b = [1, 2, 3], [4, 5, 6]
        expected = tuple(sum(comb(n, k) * a[k] * b[n - k] for k in range(n + 1)) for n in range(3))
        assert binomial_convolution(a, b) == expected

    def test_from_values_exponential(self):
        s = Series.from_values([1, 1, 2, 6], EXPONENTIAL)
        assert s.coeffs == tuple(Fraction(v, factorial(n)) for n, v in enumerate([1, 1, 2, 6]))


class TestLiteral:
    def test_parse(self):
        s = Series.parse("flavor:ordinary order:6 coeffs:1,-1,-1,0,0,0,0")
        assert s == series([1, -1, -1, 0, 0, 0, 0])

    def test_rationals(self):
        s = Series.parse("flavor:exponential order:2 coeffs:1,1/2,-3/4")
        assert s.flavor == EXPONENTIAL and s[2] == Fraction(-3, 4)

    def test_round_trip(self):
        s = Series((1, Fraction(2, 3), -5), EXPONENTIAL)
        assert Series.parse(str(s)) == s

    def test_order_mismatch(self):
        with pytest.raises(ValueError):
            Series.parse("flavor:ordinary order:3 coeffs:1,2")

    def test_immutable(self):
        s = series([1, 2])
        with pytest.raises(AttributeError):
            s.coeffs = (3,)
