"""Finite posets, their incidence algebras and the Möbius function.

Functions live on intervals ``a <= b`` and multiply by

    (f * g)(a, b) = sum_{a <= z <= b} f(a, z) g(z, b).

On a chain, functions that depend only on ``b - a`` form a subalgebra
isomorphic to convolution on the non-negative integers;
:func:`chain_contraction` realizes that map.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, NamedTuple

from .csemigroup import CFunction
from .errors import InvalidPoset, PosetMismatch


@dataclass(frozen=True, eq=False)
class Poset:
    """Elements ``0..n-1`` with ``le[a][b]`` meaning ``a <= b``."""

    le: tuple
    labels: tuple | None = None

    def __post_init__(self):
        le = tuple(tuple(bool(v) for v in row) for row in self.le)
        n = len(le)
        if any(len(row) != n for row in le):
            raise InvalidPoset("relation matrix must be square")
        for a in range(n):
            if not le[a][a]:
                raise InvalidPoset(f"not reflexive at {a}")
            for b in range(n):
                if a != b and le[a][b] and le[b][a]:
                    raise InvalidPoset(f"not antisymmetric: {a} and {b}")
                if le[a][b]:
                    for c in range(n):
                        if le[b][c] and not le[a][c]:
                            raise InvalidPoset(f"not transitive: {a} <= {b} <= {c}")
        object.__setattr__(self, "le", le)
        if self.labels is not None and len(self.labels) != n:
            raise InvalidPoset("one label per element")

    @classmethod
    def from_relations(cls, n: int, pairs: Iterable, labels=None) -> "Poset":
        """Reflexive-transitive closure of the given ``(a, b)`` pairs."""
        le = [[a == b for b in range(n)] for a in range(n)]
        for a, b in pairs:
            le[a][b] = True
        for k in range(n):
            for i in range(n):
                if le[i][k]:
                    for j in range(n):
                        if le[k][j]:
                            le[i][j] = True
        return cls(tuple(map(tuple, le)), labels)

    @classmethod
    def from_json(cls, data: dict) -> "Poset":
        return cls.from_relations(data["n"], [tuple(p) for p in data.get("le", [])], data.get("labels"))

    @classmethod
    def load(cls, path) -> "Poset":
        with open(path) as fh:
            return cls.from_json(json.load(fh))

    @property
    def n(self) -> int:
        return len(self.le)

    def leq(self, a: int, b: int) -> bool:
        return self.le[a][b]

    def intervals(self):
        return [(a, b) for a in range(self.n) for b in range(self.n) if self.le[a][b]]

    def between(self, a: int, b: int) -> list:
        return [z for z in range(self.n) if self.le[a][z] and self.le[z][b]]

    def label(self, a: int):
        return a if self.labels is None else self.labels[a]

    def is_chain(self) -> bool:
        return all(self.le[a][b] == (a <= b) for a in range(self.n) for b in range(self.n))


def chain(n: int) -> Poset:
    """``0 < 1 < ... < n-1``."""
    return Poset(tuple(tuple(a <= b for b in range(n)) for a in range(n)))


def antichain(n: int) -> Poset:
    return Poset(tuple(tuple(a == b for b in range(n)) for a in range(n)))


def boolean_lattice(k: int) -> Poset:
    """Subsets of ``{0..k-1}`` (as bitmasks) ordered by inclusion."""
    n = 1 << k
    return Poset(tuple(tuple(a & b == a for b in range(n)) for a in range(n)), tuple(range(n)))


def divisor_lattice(m: int) -> Poset:
    divs = tuple(d for d in range(1, m + 1) if m % d == 0)
    return Poset(tuple(tuple(b % a == 0 for b in divs) for a in divs), divs)


class IncidenceFn:
    """A rational function on the intervals of a poset."""

    __slots__ = ("poset", "_values")

    def __init__(self, poset: Poset, values: dict | None = None):
        self.poset = poset
        vals = {}
        for (a, b), v in (values or {}).items():
            if not poset.leq(a, b):
                if v:
                    raise ValueError(f"({a},{b}) is not an interval")
                continue
            v = Fraction(v)
            if v:
                vals[a, b] = v
        self._values = vals

    @classmethod
    def from_rule(cls, poset: Poset, rule: Callable[[int, int], object]) -> "IncidenceFn":
        return cls(poset, {(a, b): rule(a, b) for a, b in poset.intervals()})

    def __call__(self, a: int, b: int) -> Fraction:
        return self._values.get((a, b), Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, IncidenceFn):
            return NotImplemented
        return self.poset is other.poset and self._values == other._values

    def __repr__(self):
        return f"IncidenceFn({self._values})"


def delta(p: Poset) -> IncidenceFn:
    return IncidenceFn(p, {(a, a): 1 for a in range(p.n)})


def zeta(p: Poset) -> IncidenceFn:
    return IncidenceFn.from_rule(p, lambda a, b: 1)


def iconvolve(f: IncidenceFn, g: IncidenceFn) -> IncidenceFn:
    if f.poset is not g.poset:
        raise PosetMismatch("incidence functions on different posets")
    p = f.poset
    return IncidenceFn(
        p,
        {(a, b): sum((f(a, z) * g(z, b) for z in p.between(a, b)), Fraction(0)) for a, b in p.intervals()},
    )


def mobius(p: Poset) -> IncidenceFn:
    """``mu(a, a) = 1``, ``mu(a, b) = -sum_{a <= z < b} mu(a, z)``."""
    mu: dict = {}
    # visit b in an order compatible with <= (by size of the down-set)
    order = sorted(range(p.n), key=lambda b: sum(p.le[z][b] for z in range(p.n)))
    for a in range(p.n):
        for b in order:
            if not p.leq(a, b):
                continue
            if a == b:
                mu[a, b] = Fraction(1)
            else:
                mu[a, b] = -sum((mu[a, z] for z in p.between(a, b) if z != b), Fraction(0))
    return IncidenceFn(p, mu)


class NotContractible(NamedTuple):
    """Returned by :func:`chain_contraction` with two intervals of equal length
    carrying different values."""

    first: tuple
    second: tuple


def chain_contraction(f: IncidenceFn):
    """``g(k) = f(0, k)`` when ``f(a, b)`` depends only on ``b - a``."""
    p = f.poset
    if not p.is_chain():
        raise ValueError("contraction is implemented for chains only")
    for a, b in p.intervals():
        if f(a, b) != f(0, b - a):
            return NotContractible((0, b - a), (a, b))
    return CFunction.from_list([f(0, k) for k in range(p.n)])
