"""Recurrence operators and the generating functions of their solutions.

A recurrence is a lower-triangular kernel ``r(n, i)`` with nonzero
diagonal, so ``sum_i r(n, i) f(i) = rhs(n)`` is solved by forward
substitution.  Two transformed-operator checks are supported: a
shift-invariant tap list against the ordinary token ``x**n`` (the
transformed operator is multiplication by the tap polynomial) and the
Bell-type kernel ``r(n, i) = [n == i] - C(n-1, i)`` against the
exponential token ``x**n/n!`` (the transformed operator is
``I - integral(exp(x) * .)``).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .csemigroup import CFunction, convolve
from .errors import UnsupportedKernelShape, ZeroDiagonal
from .series import EXPONENTIAL, FLAVORS, ORDINARY, Series, derive, integrate, mul


@dataclass(frozen=True)
class Recurrence:
    taps: tuple | None = None
    matrix: tuple | None = None
    rhs: CFunction | None = None

    def __post_init__(self):
        if (self.taps is None) == (self.matrix is None):
            raise ValueError("give exactly one of taps or matrix")
        if self.taps is not None:
            taps = tuple(Fraction(t) for t in self.taps)
            if not taps or taps[0] == 0:
                raise ZeroDiagonal("first tap must be nonzero")
            object.__setattr__(self, "taps", taps)
        else:
            rows = []
            for n, row in enumerate(self.matrix):
                row = [Fraction(v) for v in row]
                if any(row[n + 1:]):
                    raise ValueError(f"row {n} is not lower triangular")
                row = (row + [Fraction(0)] * (n + 1))[: n + 1]
                if row[n] == 0:
                    raise ZeroDiagonal(f"r({n},{n}) = 0")
                rows.append(tuple(row))
            object.__setattr__(self, "matrix", tuple(rows))

    @classmethod
    def bell(cls, N: int, rhs: CFunction | None = None) -> "Recurrence":
        """``B_n - sum_{k<n} C(n-1, k) B_k = rhs(n)``."""
        return cls(matrix=_bell_matrix(N), rhs=rhs)

    @classmethod
    def from_json(cls, data: dict) -> "Recurrence":
        rhs = data.get("rhs")
        if rhs is not None:
            rhs = CFunction.from_list([Fraction(v) for v in rhs])
        if "taps" in data:
            return cls(taps=tuple(Fraction(t) for t in data["taps"]), rhs=rhs)
        return cls(matrix=tuple(tuple(Fraction(v) for v in row) for row in data["matrix"]), rhs=rhs)

    @property
    def max_index(self) -> int | None:
        return None if self.matrix is None else len(self.matrix) - 1

    def r(self, n: int, i: int) -> Fraction:
        if i > n:
            return Fraction(0)
        if self.taps is not None:
            d = n - i
            return self.taps[d] if d < len(self.taps) else Fraction(0)
        return self.matrix[n][i]

    def rhs_value(self, n: int) -> Fraction:
        if self.rhs is None:
            return Fraction(1 if n == 0 else 0)
        return self.rhs(n)

    def is_bell(self) -> bool:
        return self.matrix is not None and self.matrix == _bell_matrix(len(self.matrix) - 1)


def _bell_matrix(N: int) -> tuple:
    return tuple(
        tuple(Fraction(1) if i == n else Fraction(-comb(n - 1, i)) for i in range(n + 1))
        for n in range(N + 1)
    )


@dataclass(frozen=True)
class GenFunSpec:
    token: str = ORDINARY
    order: int = 12

    def __post_init__(self):
        if self.token not in FLAVORS:
            raise ValueError(f"token must be one of {FLAVORS}")


def _check_size(rec: Recurrence, N: int):
    if rec.max_index is not None and N > rec.max_index:
        raise ValueError(f"recurrence matrix only covers n <= {rec.max_index}")


def solve_recurrence(rec: Recurrence, N: int) -> CFunction:
    """Forward substitution for ``f(0..N)``."""
    _check_size(rec, N)
    f: list = []
    for n in range(N + 1):
        s = rec.rhs_value(n) - sum((rec.r(n, i) * f[i] for i in range(n)), Fraction(0))
        f.append(s / rec.r(n, n))
    return CFunction.from_list(f)


def apply_recurrence(rec: Recurrence, f: CFunction) -> CFunction:
    """``(Rf)(n) = sum_i r(n, i) f(i)`` on the carrier of ``f``."""
    N = f.semigroup.bound
    _check_size(rec, N)
    return CFunction.from_list(
        [sum((rec.r(n, i) * f(i) for i in range(n + 1)), Fraction(0)) for n in range(N + 1)]
    )


def generating_function(f: CFunction, spec: GenFunSpec) -> Series:
    """Ordinary: coefficient ``f(n)``; exponential: coefficient ``f(n)/n!``."""
    if f.semigroup.bound < spec.order:
        raise ValueError(f"f is only known up to {f.semigroup.bound}")
    return Series.from_values(f.as_list()[: spec.order + 1], spec.token)


def transformed_operator_check(rec: Recurrence, spec: GenFunSpec, N: int | None = None) -> bool:
    """Check that the generating function solves the transformed equation exactly."""
    N = spec.order if N is None else N
    spec = GenFunSpec(spec.token, N)
    f = solve_recurrence(rec, N)
    fhat = generating_function(f, spec)
    rhs_hat = Series.from_values([rec.rhs_value(n) for n in range(N + 1)], spec.token)
    if spec.token == ORDINARY and rec.taps is not None:
        taps = (list(rec.taps) + [0] * (N + 1))[: N + 1]
        return mul(Series(tuple(taps)), fhat) == rhs_hat
    if spec.token == EXPONENTIAL and rec.is_bell():
        e = Series.exp(N, EXPONENTIAL)
        ok = fhat - integrate(mul(e, fhat)) == rhs_hat
        if rec.rhs is None and N >= 1:
            ok = ok and fhat[0] == 1 and derive(fhat) == mul(e, fhat).truncate(N - 1)
        return ok
    raise UnsupportedKernelShape(
        f"no transformed operator for this kernel with the {spec.token} token"
    )


def umbral_moment_recover(F: Series, N: int) -> CFunction:
    """The combinatorial function paired with ``F`` against the dual token."""
    if F.order < N:
        raise ValueError(f"series known to order {F.order} < {N}")
    return CFunction.from_list(F.values()[: N + 1])


def fundamental_solution_apply(rec: Recurrence, g: CFunction) -> CFunction:
    """``h = g * f`` where ``R f = delta``; solves ``R h = g`` for tap recurrences."""
    if rec.taps is None:
        raise UnsupportedKernelShape("only shift-invariant recurrences have a fundamental solution")
    f = solve_recurrence(Recurrence(taps=rec.taps), g.semigroup.bound)
    return convolve(g, f)
