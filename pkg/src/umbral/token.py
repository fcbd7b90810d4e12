"""Tokens between semigroups: polynomial sequences of integral type and
discrete kernels ``t(n, m)`` on ``N x N``.

A polynomial sequence ``p_0, ..., p_N`` is stored as a lower-triangular
matrix, ``tri[n][k]`` being the coefficient of ``x**k`` in ``p_n``.  It is
a token exactly when

    p_n(x + y) = sum_{k=0}^{n} p_k(x) p_{n-k}(y)        for all n <= N,

which :func:`token_witness` checks coefficient by coefficient in the
bivariate monomial basis.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Sequence

from . import poly as P
from .csemigroup import CFunction, NPlus, convolve
from .errors import InsufficientMoments, ReproducingCheckFailed, SupportTooLarge


@dataclass(frozen=True)
class PolySeq:
    tri: tuple

    def __post_init__(self):
        rows = []
        for n, row in enumerate(self.tri):
            row = [Fraction(c) for c in row]
            if any(row[n + 1:]):
                raise ValueError(f"p_{n} has degree above {n}")
            row = (row + [Fraction(0)] * (n + 1))[: n + 1]
            if row[n] == 0:
                raise ValueError(f"p_{n} must have degree exactly {n}")
            rows.append(tuple(row))
        if not rows:
            raise ValueError("empty polynomial sequence")
        object.__setattr__(self, "tri", tuple(rows))

    @classmethod
    def from_polys(cls, polys: Sequence) -> "PolySeq":
        return cls(tuple(tuple(p) for p in polys))

    @property
    def N(self) -> int:
        return len(self.tri) - 1

    def poly(self, n: int) -> P.Poly:
        return P.poly(self.tri[n])

    def polys(self) -> list:
        return [self.poly(n) for n in range(self.N + 1)]

    def __call__(self, n: int, x) -> Fraction:
        return P.evaluate(self.poly(n), Fraction(x))

    def coordinates(self, p: P.Poly) -> list:
        """Coefficients ``c_n`` with ``p = sum c_n p_n`` (back-substitution)."""
        if P.degree(p) > self.N:
            raise ValueError("polynomial degree exceeds the sequence")
        rest = list(p) + [Fraction(0)] * (self.N + 1 - len(p))
        out = [Fraction(0)] * (self.N + 1)
        for n in range(self.N, -1, -1):
            c = rest[n] / self.tri[n][n]
            out[n] = c
            if c:
                for k in range(n + 1):
                    rest[k] -= c * self.tri[n][k]
        return out

    def to_json(self) -> list:
        return [[str(c) for c in row] for row in self.tri]

    @classmethod
    def from_json(cls, data: list) -> "PolySeq":
        return cls(tuple(tuple(Fraction(c) for c in row) for row in data))


# -- catalog ---------------------------------------------------------------

def exponential_sequence(N: int) -> PolySeq:
    """``x**n / n!``, basic for the derivative."""
    return PolySeq.from_polys(P.monomial(n, Fraction(1, factorial(n))) for n in range(N + 1))


def binomial_sequence(N: int) -> PolySeq:
    """``C(x, n)``, basic for the forward difference."""
    return PolySeq.from_polys(P.scale(P.falling(n), Fraction(1, factorial(n))) for n in range(N + 1))


def rising_sequence(N: int) -> PolySeq:
    """``C(x + n - 1, n)``, basic for the backward difference."""
    return PolySeq.from_polys(
        P.scale(P.falling(n, shift=0, step=-1), Fraction(1, factorial(n))) for n in range(N + 1)
    )


def abel_sequence(a, N: int) -> PolySeq:
    """``x (x - a n)**(n-1) / n!``, basic for ``D exp(a D)``."""
    a = Fraction(a)
    polys = [(Fraction(1),)]
    for n in range(1, N + 1):
        p = P.mul(P.monomial(1), _power(P.poly([-a * n, 1]), n - 1))
        polys.append(P.scale(p, Fraction(1, factorial(n))))
    return PolySeq.from_polys(polys)


def _power(p, k):
    out = (Fraction(1),)
    for _ in range(k):
        out = P.mul(out, p)
    return out


CATALOG: dict[str, Callable[[int], PolySeq]] = {
    "D": exponential_sequence,
    "forward-diff": binomial_sequence,
    "backward-diff": rising_sequence,
    "abel:a=1/2": lambda N: abel_sequence(Fraction(1, 2), N),
}


# -- token checks ----------------------------------------------------------

def _bivariate_sum(p: PolySeq, n: int) -> dict:
    """Coefficients of ``sum_k p_k(x) p_{n-k}(y)`` keyed by ``(deg_x, deg_y)``."""
    out: dict = {}
    for k in range(n + 1):
        for i, a in enumerate(p.tri[k]):
            if a:
                for j, b in enumerate(p.tri[n - k]):
                    if b:
                        out[i, j] = out.get((i, j), 0) + a * b
    return out


def _bivariate_shift(p: PolySeq, n: int) -> dict:
    """Coefficients of ``p_n(x + y)`` via the binomial theorem."""
    out: dict = {}
    for d, c in enumerate(p.tri[n]):
        if c:
            for i in range(d + 1):
                out[i, d - i] = out.get((i, d - i), 0) + c * comb(d, i)
    return out


def token_witness(p: PolySeq):
    """First ``(n, (i, j))`` where the token identity fails at ``x**i y**j``, or None."""
    for n in range(p.N + 1):
        lhs, rhs = _bivariate_shift(p, n), _bivariate_sum(p, n)
        for key in sorted(set(lhs) | set(rhs)):
            if lhs.get(key, 0) != rhs.get(key, 0):
                return n, key
    return None


def is_token(p: PolySeq) -> bool:
    return token_witness(p) is None


@dataclass(frozen=True)
class DiscreteToken:
    """Values ``t(n, m)`` for ``n <= N``, ``m <= M`` of a kernel on ``N x N``."""

    mat: tuple

    def __post_init__(self):
        mat = tuple(tuple(Fraction(v) for v in row) for row in self.mat)
        if not mat or len({len(r) for r in mat}) != 1:
            raise ValueError("token matrix must be rectangular and nonempty")
        object.__setattr__(self, "mat", mat)

    @classmethod
    def from_function(cls, t: Callable[[int, int], object], N: int, M: int) -> "DiscreteToken":
        return cls(tuple(tuple(t(n, m) for m in range(M + 1)) for n in range(N + 1)))

    @property
    def N(self) -> int:
        return len(self.mat) - 1

    @property
    def M(self) -> int:
        return len(self.mat[0]) - 1

    def __call__(self, n: int, m: int) -> Fraction:
        return self.mat[n][m]


def binomial_token(N: int, M: int) -> DiscreteToken:
    """``t(n, m) = C(m, n)``."""
    return DiscreteToken.from_function(lambda n, m: comb(m, n), N, M)


def discrete_token_witness(t: DiscreteToken):
    """First ``(n, m, m')`` violating the token identity, or None."""
    for n in range(t.N + 1):
        for m in range(t.M + 1):
            for m2 in range(t.M + 1 - m):
                s = sum((t(k, m) * t(n - k, m2) for k in range(n + 1)), Fraction(0))
                if s != t(n, m + m2):
                    return n, m, m2
    return None


def is_discrete_token(t: DiscreteToken) -> bool:
    return discrete_token_witness(t) is None


# -- reproducing kernel, t-transform, umbral functionals --------------------

def _sample_moments(N: int) -> list:
    """Deterministic moment lists standing in for functionals on the polynomials."""
    return [
        [Fraction(1)] * (N + 1),                                  # evaluation at 1
        [Fraction(2) ** k for k in range(N + 1)],                 # evaluation at 2
        [Fraction(k * k - 3, k + 2) for k in range(N + 1)],
        [Fraction((-1) ** k, factorial(k)) for k in range(N + 1)],
    ]


def reproducing_kernel(p: PolySeq) -> CFunction:
    """``k(n) = p_n(0)``, verified to reproduce the sequence under convolution.

    Checks ``p_n(x) = sum_j k(j) p_{n-j}(x)`` as polynomials, then the same identity
    for several functions ``f(n) = l(p_n)`` obtained from moment functionals ``l``.
    """
    k = CFunction.from_list([p(n, 0) for n in range(p.N + 1)])
    polys = p.polys()
    for n in range(p.N + 1):
        rebuilt = P.combine([polys[n - j] for j in range(n + 1)], [k(j) for j in range(n + 1)])
        if rebuilt != polys[n]:
            raise ReproducingCheckFailed(f"p_{n} is not reproduced by k = {k}")
    for moments in _sample_moments(p.N):
        f = umbral_apply(p, moments)
        if convolve(k, f) != f:
            raise ReproducingCheckFailed("convolution with k does not reproduce l(p_n)")
    return k


def t_transform(t: DiscreteToken, k: CFunction) -> CFunction:
    """``[Tk](n) = sum_m t(n, m) k(m)`` for a finitely supported ``k`` on N."""
    sup = k.support()
    if sup and sup[-1] > t.M:
        raise SupportTooLarge(f"support reaches {sup[-1]} > M = {t.M}")
    vals = [sum((t(n, m) * v for m, v in k.items()), Fraction(0)) for n in range(t.N + 1)]
    return CFunction(NPlus(t.N), dict(enumerate(vals)))


def umbral_apply(p: PolySeq, moments: Sequence) -> CFunction:
    """``f(n) = l(p_n)`` for the functional with ``l(x**k) = moments[k]``."""
    if len(moments) < p.N + 1:
        raise InsufficientMoments(f"need {p.N + 1} moments, got {len(moments)}")
    m = [Fraction(v) for v in moments]
    return CFunction.from_list(
        [sum((c * m[j] for j, c in enumerate(row)), Fraction(0)) for row in p.tri]
    )
