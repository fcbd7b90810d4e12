"""Shift-invariant operators on polynomials, delta operators and their
basic sequences.

Every shift-invariant operator here is a power series in the derivative
``D``; a delta operator ``Q = q_1 D + q_2 D**2 + ...`` has ``q_1 != 0``.
Operators are stored by coordinates ``a_k`` in the delta family ``Q**k``
(``S = sum a_k Q**k``); black-box callables are accepted only by
:func:`expand_operator`, which coordinatizes them immediately.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Sequence

from . import poly as P
from .csemigroup import CFunction, NPlus, convolve
from .errors import (
    DegreeOverflow,
    NotADeltaOperator,
    NotShiftInvariant,
    ReconstructionFailed,
    SemigroupMismatch,
)
from .series import ORDINARY, Series, compose
from .token import DiscreteToken, PolySeq, umbral_apply

PolyMap = Callable[[tuple], tuple]


@dataclass(frozen=True)
class DeltaOp:
    series: Series

    def __post_init__(self):
        s = self.series
        if s.flavor != ORDINARY or s.order < 1:
            raise NotADeltaOperator("delta operator needs an ordinary series of order >= 1")
        if s[0] != 0:
            raise NotADeltaOperator("constant term must vanish")
        if s[1] == 0:
            raise NotADeltaOperator("coefficient of D must be nonzero")

    @property
    def N(self) -> int:
        return self.series.order

    def __call__(self, p) -> tuple:
        return apply_delta(self, p)


def derivative(N: int) -> DeltaOp:
    return DeltaOp(Series.x(N))


def forward_difference(N: int) -> DeltaOp:
    """``exp(D) - 1``: ``p(x) -> p(x+1) - p(x)``."""
    return DeltaOp(Series.exp(N) - 1)


def backward_difference(N: int) -> DeltaOp:
    """``1 - exp(-D)``: ``p(x) -> p(x) - p(x-1)``."""
    e = Series.exp(N)
    return DeltaOp(1 - Series(tuple(c * (-1) ** n for n, c in enumerate(e.coeffs))))


def abel(a, N: int) -> DeltaOp:
    """``D exp(a D)``."""
    a = Fraction(a)
    return DeltaOp(Series((0,) + tuple(a ** (k - 1) / factorial(k - 1) for k in range(1, N + 1))))


def apply_series(s: Series, p) -> tuple:
    """Apply ``sum s_k D**k`` to the polynomial ``p``."""
    p = P.poly(p)
    if P.degree(p) > s.order:
        raise DegreeOverflow(f"degree {P.degree(p)} exceeds operator order {s.order}")
    # [x**i] D**k p = p[i+k] (i+k)!/i!
    scaled = [c * factorial(j) for j, c in enumerate(p)]
    out = []
    for i in range(len(p)):
        acc = sum((s[k] * scaled[i + k] for k in range(len(p) - i) if s[k]), Fraction(0))
        out.append(acc / factorial(i))
    return P.poly(out)


def apply_delta(q: DeltaOp, p) -> tuple:
    return apply_series(q.series, p)


def basic_sequence(q: DeltaOp, N: int) -> PolySeq:
    """The unique ``p_n`` with ``p_0 = 1``, ``p_n(0) = 0`` and ``Q p_n = p_{n-1}``.

    Writing ``p_n = sum_j c_j x**j`` the coefficient of ``x**i`` in ``Q p_n`` is
    ``sum_k q_k c_{i+k} (i+k)!/i!``, so the ``c_j`` are found from the top down.
    """
    if q.N < N:
        raise DegreeOverflow(f"operator known to order {q.N}, need {N}")
    qs = q.series
    rows = [(Fraction(1),)]
    for n in range(1, N + 1):
        prev = rows[-1]
        c = [Fraction(0)] * (n + 1)
        for i in range(n - 1, -1, -1):
            s = prev[i] if i < len(prev) else Fraction(0)
            for k in range(2, n - i + 1):
                s -= qs[k] * c[i + k] * Fraction(factorial(i + k), factorial(i))
            c[i + 1] = s / (qs[1] * (i + 1))
        rows.append(tuple(c))
    return PolySeq(tuple(rows))


@dataclass(frozen=True)
class ShiftInvOp:
    """``S = sum_k a[k] Q**k``."""

    a: Series
    delta: DeltaOp

    @cached_property
    def _d_series(self) -> Series:
        n = min(self.a.order, self.delta.N)
        return compose(self.a.truncate(n), self.delta.series.truncate(n))

    def d_series(self) -> Series:
        """The same operator as a series in ``D``."""
        return self._d_series

    def __call__(self, p) -> tuple:
        return apply_series(self.d_series(), p)


def _random_rationals(rng: random.Random, count: int) -> list:
    return [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(count)]


def expand_operator(s_action: PolyMap, q: DeltaOp, N: int, seed: int = 0, spot_checks: int = 5) -> ShiftInvOp:
    """Coordinates ``a_k = [S p_k](0)`` of a black-box shift-invariant operator.

    Shift invariance is spot checked against translations by ``spot_checks``
    random rationals on ``1, x, ..., x**N``; the expansion is then verified by
    applying both sides to ``p_0, ..., p_N``.
    """
    rng = random.Random(seed)
    for h in _random_rationals(rng, spot_checks):
        for j in range(N + 1):
            xj = P.monomial(j)
            if P.poly(s_action(P.translate(xj, h))) != P.translate(P.poly(s_action(xj)), h):
                raise NotShiftInvariant(f"fails to commute with translation by {h} on x^{j}")
    basic = basic_sequence(q, N)
    polys = basic.polys()
    images = [P.poly(s_action(p)) for p in polys]
    a = [P.evaluate(img, 0) for img in images]
    for n in range(N + 1):
        rebuilt = P.combine([polys[n - k] for k in range(n + 1)], a[: n + 1])
        if rebuilt != images[n]:
            raise ReconstructionFailed(f"sum a_k Q^k p_{n} differs from S p_{n}")
    return ShiftInvOp(Series(tuple(a)), q)


def operator_to_convolution(s: ShiftInvOp) -> CFunction:
    """Kernel on N of ``s``: composition of operators becomes convolution."""
    return CFunction.from_series(s.a)


def operator_from_kernel(k: CFunction, q: DeltaOp) -> ShiftInvOp:
    return ShiftInvOp(k.to_series(), q)


def kernel_action(k: CFunction, coords: Sequence) -> list:
    """``(Sf)(n) = sum_c k(c) f(n + c)`` on coordinates ``f(n)`` in the basic sequence."""
    coords = [Fraction(c) for c in coords]
    return [
        sum((v * coords[n + c] for c, v in k.items() if n + c < len(coords)), Fraction(0))
        for n in range(len(coords))
    ]


def functional_of(s: PolyMap, N: int) -> list:
    """Moments ``l(x**j) = [S x**j](0)`` of the functional attached to ``s``."""
    return [P.evaluate(P.poly(s(P.monomial(j))), 0) for j in range(N + 1)]


def operator_from_functional(moments: Sequence) -> PolyMap:
    """The black-box operator ``[Sf](x) = l_y f(x + y)``."""
    m = [Fraction(v) for v in moments]

    def action(p):
        p = P.poly(p)
        if P.degree(p) >= len(m):
            raise DegreeOverflow("not enough moments for this degree")
        out = [Fraction(0)] * len(p)
        for j, c in enumerate(p):
            if c:
                for i in range(j + 1):
                    out[i] += c * comb(j, i) * m[j - i]
        return P.poly(out)

    return action


def kernel_from_functional(moments: Sequence, q: DeltaOp, N: int) -> CFunction:
    """``k(n) = l(p_n)`` with ``p`` basic for ``q``."""
    return umbral_apply(basic_sequence(q, N), moments)


def delta_family_kernels(q: DeltaOp, N: int) -> DiscreteToken:
    """Kernels of ``Q**k`` (``k <= N``) on N, found by expanding each power."""
    rows = []
    for k in range(N + 1):
        qk = q.series ** k
        ker = operator_to_convolution(expand_operator(lambda p, qk=qk: apply_series(qk, p), q, N))
        rows.append(tuple(ker.as_list()))
    return DiscreteToken(tuple(rows))


def hopf_product(l1: CFunction, l2: CFunction) -> CFunction:
    """Product of functionals given by their values ``l(p_n)``: convolution on N."""
    if not (isinstance(l1.semigroup, NPlus) and l1.semigroup == l2.semigroup):
        raise SemigroupMismatch("hopf product needs functionals on the same NPlus")
    return convolve(l1, l2)


def degree_lowering_check(q, p2: PolySeq) -> bool:
    """True iff ``deg(Q**k p2_n) == n - k`` for ``k <= n`` and ``Q**k p2_n == 0`` for ``k > n``.

    ``q`` may be a :class:`DeltaOp` or a raw :class:`Series` in ``D``.
    """
    qs = q.series if isinstance(q, DeltaOp) else q
    if qs.order > p2.N:
        qs = qs.truncate(p2.N)
    for k in range(p2.N + 2):
        qk = qs ** k
        for n in range(p2.N + 1):
            img = apply_series(qk, p2.poly(n))
            expected = n - k if k <= n else -1
            if P.degree(img) != expected:
                return False
    return True
