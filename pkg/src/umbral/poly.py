"""Dense univariate polynomials over the rationals.

A polynomial is a tuple of :class:`~fractions.Fraction` coefficients,
lowest degree first, with trailing zeros stripped.  The zero polynomial
is the empty tuple.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence

Poly = tuple


def poly(coeffs: Iterable) -> Poly:
    out = [c if type(c) is Fraction else Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def degree(p: Poly) -> int:
    """Degree of ``p``; the zero polynomial has degree -1."""
    return len(p) - 1


def add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return poly((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n))


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, scale(q, -1))


def scale(p: Poly, c) -> Poly:
    c = Fraction(c)
    return poly(c * a for a in p)


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly(out)


def derivative(p: Poly, k: int = 1) -> Poly:
    """k-th derivative."""
    if k == 0:
        return p
    return poly(p[j] * factorial(j) / factorial(j - k) for j in range(k, len(p)))


def evaluate(p: Poly, x) -> Fraction:
    acc = Fraction(0)
    for a in reversed(p):
        acc = acc * x + a
    return acc


def translate(p: Poly, h) -> Poly:
    """The polynomial ``x -> p(x + h)``."""
    h = Fraction(h)
    out = [Fraction(0)] * len(p)
    for j, a in enumerate(p):
        if a:
            for i in range(j + 1):
                out[i] += a * comb(j, i) * h ** (j - i)
    return poly(out)


def monomial(k: int, c=1) -> Poly:
    return poly([0] * k + [c])


def falling(n: int, shift=0, step=1) -> Poly:
    """Product ``(x + shift)(x + shift - step)...`` with ``n`` factors."""
    out: Poly = (Fraction(1),)
    for i in range(n):
        out = mul(out, poly([Fraction(shift) - i * Fraction(step), 1]))
    return out


def combine(polys: Sequence[Poly], weights: Iterable) -> Poly:
    """Linear combination ``sum(w * p)``."""
    out: Poly = ()
    for p, w in zip(polys, weights):
        if w:
            out = add(out, scale(p, w))
    return out
