"""
Möbius functions and umbral evaluation
======================================

Möbius inversion on a few small posets, the contraction of a chain onto
convolution over the integers, and ``eval`` on umbral polynomials.
"""

from umbral.incidence import (
    IncidenceFn,
    boolean_lattice,
    chain,
    chain_contraction,
    delta,
    divisor_lattice,
    iconvolve,
    mobius,
    zeta,
)
from umbral.semantic import Umbra, UmbralPoly, dot_power_moments, eval_umbral, unity

p = divisor_lattice(12)
mu = mobius(p)
print("mu(1, d) for d | 12:", {p.label(b): int(mu(0, b)) for b in range(p.n)})
print("zeta * mu == delta:", iconvolve(zeta(p), mu) == delta(p))

b3 = boolean_lattice(3)
print("mu on B3 from the empty set:", [int(mobius(b3)(0, s)) for s in range(8)])

# on a chain, an interval function depending only on b - a is a sequence
c = chain(6)
f = IncidenceFn.from_rule(c, lambda a, b: b - a + 1)
print("contraction of f:", [int(v) for v in chain_contraction(f).as_list()])
print("contraction of f * f:", [int(v) for v in chain_contraction(iconvolve(f, f)).as_list()])

# eval is multiplicative across distinct umbrae only
a = Umbra("a", (1, 1, 2))
b = Umbra("b", (1, 3, 10))
print("eval(a*b) =", eval_umbral(UmbralPoly.parse("a*b"), [a, b]))
print("eval(a) =", eval_umbral(UmbralPoly.parse("a"), [a]), "but eval(a^2) =", eval_umbral(UmbralPoly.parse("a^2"), [a]))

# the sum of two independent copies of the unity umbra has moments 2^k
print("2.u moments:", [int(m) for m in dot_power_moments(unity(8), 2, 8)])
