"""Cancellative semigroups, functions on them, and their convolution.

Carriers are bounded: every "integral" is a finite sum over the
enumerated elements with counting measure.  A left quotient that does
not exist is reported as :data:`UNDEFINED`; functions evaluate to zero
there, which is what makes the convolution sum total.
"""
from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import ElementOutOfBounds, SemigroupMismatch, SupportTooLarge
from .series import ORDINARY, Series


class _Undefined:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNDEFINED"

    def __bool__(self):
        return False


UNDEFINED = _Undefined()


class CSemigroup(ABC):
    """A (left) cancellative semigroup truncated to a finite carrier."""

    source: Hashable = None

    @abstractmethod
    def mul(self, a, b):
        """The product ``a*b`` (may leave the truncated carrier)."""

    @abstractmethod
    def lquot(self, a, b):
        """The unique ``x`` with ``a*x == b``, or :data:`UNDEFINED`."""

    @abstractmethod
    def elements(self) -> Sequence:
        """Carrier elements within the bound."""

    def contains(self, a) -> bool:
        return a in set(self.elements())

    def check_cancellative(self) -> bool:
        """Exhaustive check of both cancellation laws and of ``lquot``."""
        els = list(self.elements())
        for a in els:
            left = {}
            right = {}
            for x in els:
                lx, rx = self.mul(a, x), self.mul(x, a)
                if left.setdefault(lx, x) != x or right.setdefault(rx, x) != x:
                    return False
                if self.lquot(a, lx) != x:
                    return False
        return True


@dataclass(frozen=True)
class NPlus(CSemigroup):
    """Non-negative integers ``0..bound`` under addition."""

    bound: int
    source = 0

    def mul(self, a, b):
        return a + b

    def lquot(self, a, b):
        return b - a if b >= a else UNDEFINED

    def elements(self):
        return range(self.bound + 1)

    def contains(self, a):
        return isinstance(a, int) and 0 <= a <= self.bound


@dataclass(frozen=True)
class DivisorMonoid(CSemigroup):
    """Positive integers ``1..bound`` under multiplication.

    Convolution over this carrier is Dirichlet convolution.
    """

    bound: int
    source = 1

    def mul(self, a, b):
        return a * b

    def lquot(self, a, b):
        return b // a if b % a == 0 else UNDEFINED

    def elements(self):
        return range(1, self.bound + 1)

    def contains(self, a):
        return isinstance(a, int) and 1 <= a <= self.bound


class CFunction:
    """A finitely supported rational function on a truncated semigroup.

    Elements outside the carrier (or :data:`UNDEFINED`) evaluate to 0.
    """

    __slots__ = ("semigroup", "_values")

    def __init__(self, semigroup: CSemigroup, values: Mapping | None = None):
        self.semigroup = semigroup
        vals = {}
        for k, v in (values or {}).items():
            if not semigroup.contains(k):
                raise ElementOutOfBounds(f"{k!r} outside carrier of {semigroup}")
            v = Fraction(v)
            if v:
                vals[k] = v
        self._values = vals

    @classmethod
    def from_list(cls, values: Iterable, bound: int | None = None) -> "CFunction":
        """Function on :class:`NPlus` with ``f(n) = values[n]``."""
        values = list(values)
        if bound is None:
            bound = len(values) - 1
        return cls(NPlus(bound), dict(enumerate(values)))

    @classmethod
    def delta(cls, semigroup: CSemigroup, at=None) -> "CFunction":
        return cls(semigroup, {semigroup.source if at is None else at: 1})

    @classmethod
    def from_series(cls, s: Series) -> "CFunction":
        return cls.from_list(s.coeffs)

    def __call__(self, a) -> Fraction:
        if a is UNDEFINED:
            return Fraction(0)
        return self._values.get(a, Fraction(0))

    def support(self) -> list:
        return sorted(self._values)

    def items(self):
        return self._values.items()

    def as_list(self) -> list:
        """Values on ``0..bound`` (for :class:`NPlus` carriers)."""
        return [self(n) for n in self.semigroup.elements()]

    def to_series(self, flavor: str = ORDINARY) -> Series:
        if not isinstance(self.semigroup, NPlus):
            raise SemigroupMismatch("only functions on NPlus are power series")
        return Series(tuple(self.as_list()), flavor)

    def __eq__(self, other):
        if not isinstance(other, CFunction):
            return NotImplemented
        return self.semigroup == other.semigroup and self._values == other._values

    def __hash__(self):
        return hash((self.semigroup, frozenset(self._values.items())))

    def __add__(self, other: "CFunction") -> "CFunction":
        _same(self, other)
        out = dict(self._values)
        for k, v in other.items():
            out[k] = out.get(k, 0) + v
        return CFunction(self.semigroup, out)

    def __sub__(self, other):
        return self + other * -1

    def __mul__(self, c):
        c = Fraction(c)
        return CFunction(self.semigroup, {k: c * v for k, v in self.items()})

    __rmul__ = __mul__

    def __repr__(self):
        if isinstance(self.semigroup, NPlus):
            return f"CFunction({[str(v) for v in self.as_list()]})"
        return f"CFunction({self.semigroup}, {self._values})"


def _same(f: CFunction, g: CFunction):
    if f.semigroup != g.semigroup:
        raise SemigroupMismatch(f"{f.semigroup} vs {g.semigroup}")


def convolve(k2: CFunction, k1: CFunction) -> CFunction:
    """``(k2*k1)(b) = sum_a k2(a) k1(a\\b)``; undefined quotients contribute 0."""
    _same(k2, k1)
    sg = k2.semigroup
    out = {}
    for b in sg.elements():
        s = Fraction(0)
        for a, v in k2.items():
            w = k1(sg.lquot(a, b))
            if w:
                s += v * w
        if s:
            out[b] = s
    return CFunction(sg, out)


def shift(a, f: CFunction) -> CFunction:
    """Left shift ``g(b) = f(a*b)``."""
    sg = f.semigroup
    if not sg.contains(a):
        raise ElementOutOfBounds(f"{a!r} outside carrier")
    out = {}
    for b in sg.elements():
        ab = sg.mul(a, b)
        if sg.contains(ab) and f(ab):
            out[b] = f(ab)
    return CFunction(sg, out)


def check_invariance(f: CFunction, a) -> bool:
    """Exact check that ``sum_c f(c) == sum_b f(a\\b)``.

    Each ``c`` in the support must satisfy ``a*c`` inside the carrier, otherwise the
    truncated right-hand sum cannot see it and :class:`SupportTooLarge` is raised.
    """
    sg = f.semigroup
    if not sg.contains(a):
        raise ElementOutOfBounds(f"{a!r} outside carrier")
    for c in f.support():
        if not sg.contains(sg.mul(a, c)):
            raise SupportTooLarge(f"a*c = {sg.mul(a, c)!r} leaves the carrier")
    lhs = sum((v for _, v in f.items()), Fraction(0))
    rhs = sum((f(sg.lquot(a, b)) for b in sg.elements()), Fraction(0))
    return lhs == rhs


def check_associative(sg: CSemigroup, triples: Iterable[tuple]) -> bool:
    """``(k1*k2)*k3 == k1*(k2*k3)`` on the given triples of functions."""
    return all(
        convolve(convolve(a, b), c) == convolve(a, convolve(b, c)) for a, b, c in triples
    )
