"""
Generating functions of Fibonacci and Bell numbers
==================================================

Solve two recurrences by forward substitution and read off their
generating functions, then confirm the transformed equations exactly.
"""

from umbral.genfun import GenFunSpec, Recurrence, generating_function, solve_recurrence, transformed_operator_check
from umbral.series import EXPONENTIAL, Series, compose, inverse, mul

# f(n) - f(n-1) - f(n-2) = [n == 0]
fib = Recurrence(taps=(1, -1, -1))
f = solve_recurrence(fib, 15)
print("Fibonacci:", [int(v) for v in f.as_list()])

fhat = generating_function(f, GenFunSpec("ordinary", 15))
taps = Series((1, -1, -1) + (0,) * 13)
print("equals 1/(1 - x - x^2):", fhat == inverse(taps))
print("taps * fhat == 1:", mul(taps, fhat) == Series.one(15))

# B(n) - sum_{k<n} C(n-1, k) B(k) = [n == 0]
bell = Recurrence.bell(12)
b = solve_recurrence(bell, 12)
print("Bell:", [int(v) for v in b.as_list()])

bhat = generating_function(b, GenFunSpec(EXPONENTIAL, 12))
e = Series.exp(12, EXPONENTIAL)
print("equals exp(exp(x) - 1):", bhat == compose(e, e - 1))
print("transformed operator check:", transformed_operator_check(bell, GenFunSpec(EXPONENTIAL, 12)))

# the series literal used on the command line
print(fhat.truncate(6))
