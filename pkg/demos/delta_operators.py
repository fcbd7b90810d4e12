"""
Delta operators and their basic sequences
=========================================

Every delta operator has a unique basic polynomial sequence, and that
sequence satisfies the binomial-type identity.  Shift-invariant
operators expand in powers of the delta operator, and composing them
corresponds to convolving their coefficient sequences.
"""

from fractions import Fraction

from umbral import poly as P
from umbral.csemigroup import convolve
from umbral.operators import (
    DeltaOp,
    ShiftInvOp,
    abel,
    basic_sequence,
    derivative,
    expand_operator,
    forward_difference,
    operator_to_convolution,
)
from umbral.series import Series
from umbral.token import is_token


def show(name, p, upto=4):
    print(name)
    for n in range(upto + 1):
        print(f"  p_{n} =", [str(c) for c in p.poly(n)])


N = 8
show("D -> x^n/n!", basic_sequence(derivative(N), N))
show("exp(D) - 1 -> C(x, n)", basic_sequence(forward_difference(N), N))
show("D exp(D/2) -> Abel polynomials", basic_sequence(abel(Fraction(1, 2), N), N))

# an operator outside the usual catalog: D + D^2
q = DeltaOp(Series((0, 1, 1) + (0,) * (N - 2)))
p = basic_sequence(q, N)
show("D + D^2", p)
print("binomial type:", is_token(p))

# translation by h expands as sum h^k/k! D^k
h = Fraction(3, 2)
shift = expand_operator(lambda poly: P.translate(P.poly(poly), h), derivative(N), N)
print("translation coefficients:", [str(c) for c in shift.a.coeffs])

# composition of operators is convolution of their coefficients
delta = forward_difference(N)
s1 = ShiftInvOp(Series((1, 2, 0, -1) + (0,) * (N - 3)), delta)
s2 = ShiftInvOp(Series((0, 1, Fraction(1, 2)) + (0,) * (N - 2)), delta)
composed = expand_operator(lambda poly: s1(s2(poly)), delta, N)
print(
    "composition = convolution:",
    operator_to_convolution(composed) == convolve(operator_to_convolution(s1), operator_to_convolution(s2)),
)
