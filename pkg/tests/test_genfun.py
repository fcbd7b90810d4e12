from fractions import Fraction

import pytest
import sympy as sp

from umbral.csemigroup import CFunction
from umbral.errors import UnsupportedKernelShape, ZeroDiagonal
from umbral.genfun import (
    GenFunSpec,
    Recurrence,
    apply_recurrence,
    fundamental_solution_apply,
    generating_function,
    solve_recurrence,
    transformed_operator_check,
    umbral_moment_recover,
)
from umbral.series import EXPONENTIAL, Series, compose

from oracles import bell_by_enumeration, bell_by_recurrence, fibonacci, sympy_taylor, x

FIB = Recurrence(taps=(1, -1, -1))


def test_fibonacci_values():
    assert solve_recurrence(FIB, 20).as_list() == fibonacci(20)


def test_fibonacci_generating_function():
    f = solve_recurrence(FIB, 12)
    assert list(generating_function(f, GenFunSpec("ordinary", 12)).coeffs) == sympy_taylor(1 / (1 - x - x**2), 12)
    assert transformed_operator_check(FIB, GenFunSpec("ordinary", 12))


def test_bell_values():
    b = solve_recurrence(Recurrence.bell(12), 12).as_list()
    assert b == bell_by_recurrence(12)
    assert b[:10] == bell_by_enumeration(9)


def test_bell_generating_function():
    N = 10
    b = generating_function(solve_recurrence(Recurrence.bell(N), N), GenFunSpec(EXPONENTIAL, N))
    assert list(b.coeffs[:7]) == sympy_taylor(sp.exp(sp.exp(x) - 1), 6)
    e = Series.exp(N, EXPONENTIAL)
    assert b == compose(e, e - 1)
    assert transformed_operator_check(Recurrence.bell(N), GenFunSpec(EXPONENTIAL, N))


def test_bell_with_rhs():
    rec = Recurrence.bell(6, CFunction.from_list([1, 1, 0, 0, 0, 0, 0]))
    assert transformed_operator_check(rec, GenFunSpec(EXPONENTIAL, 6))


def test_apply_inverts_solve():
    rhs = CFunction.from_list([2, Fraction(1, 3), 0, -1, 0, 5])
    rec = Recurrence(taps=(3, 0, 1, -2), rhs=rhs)
    f = solve_recurrence(rec, 5)
    assert apply_recurrence(rec, f) == rhs


def test_matrix_recurrence():
    rec = Recurrence(matrix=((1,), (-1, 2), (0, -1, 1)))
    assert solve_recurrence(rec, 2).as_list() == [1, Fraction(1, 2), Fraction(1, 2)]


def test_zero_diagonal():
    with pytest.raises(ZeroDiagonal):
        Recurrence(taps=(0, 1))
    with pytest.raises(ZeroDiagonal):
        Recurrence(matrix=((1,), (1, 0)))


def test_matrix_too_small():
    with pytest.raises(ValueError):
        solve_recurrence(Recurrence(matrix=((1,),)), 3)


def test_unsupported_shape():
    with pytest.raises(UnsupportedKernelShape):
        transformed_operator_check(FIB, GenFunSpec(EXPONENTIAL, 5))


def test_moment_recover():
    e = Series.exp(6, EXPONENTIAL)
    assert umbral_moment_recover(compose(e, e - 1), 6).as_list() == bell_by_recurrence(6)


def test_fundamental_solution():
    g = CFunction.from_list([0, 1, 2, 0, 0, 0, 0])
    h = fundamental_solution_apply(FIB, g)
    assert apply_recurrence(Recurrence(taps=FIB.taps), h) == g


def test_from_json():
    rec = Recurrence.from_json({"taps": ["1", "-1", "-1"]})
    assert rec == FIB
