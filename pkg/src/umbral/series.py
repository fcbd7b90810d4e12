"""Truncated formal power series with exact rational coefficients.

A :class:`Series` is a function on the non-negative integers cut off at
``order``; its product is the Cauchy convolution.  Coefficients are
always the plain ``[x**n]`` coefficients.  The ``flavor`` tag records how
the series is read combinatorially: an *ordinary* series encodes the
sequence ``coeffs[n]``, an *exponential* series encodes
``n! * coeffs[n]`` (see :meth:`Series.values`).  Because the stored
numbers already carry the ``1/n!``, both flavors multiply with the same
convolution.

Text format::

    flavor:ordinary order:6 coeffs:1,-1,-1,0,0,0,0
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence

from .errors import FlavorMismatch, NonUnitConstantTerm, NonzeroInnerConstant

ORDINARY = "ordinary"
EXPONENTIAL = "exponential"
FLAVORS = (ORDINARY, EXPONENTIAL)


@dataclass(frozen=True)
class Series:
    coeffs: tuple
    flavor: str = ORDINARY

    def __post_init__(self):
        if self.flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {self.flavor!r}")
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", coeffs)

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, order: int, flavor: str = ORDINARY) -> "Series":
        return cls((0,) * (order + 1), flavor)

    @classmethod
    def one(cls, order: int, flavor: str = ORDINARY) -> "Series":
        return cls((1,) + (0,) * order, flavor)

    @classmethod
    def x(cls, order: int, flavor: str = ORDINARY) -> "Series":
        return cls(tuple(1 if n == 1 else 0 for n in range(order + 1)), flavor)

    @classmethod
    def exp(cls, order: int, flavor: str = ORDINARY) -> "Series":
        """Taylor coefficients of ``e**x``."""
        return cls(tuple(Fraction(1, factorial(n)) for n in range(order + 1)), flavor)

    @classmethod
    def from_values(cls, values: Sequence, flavor: str = ORDINARY) -> "Series":
        """Generating function of a sequence, in the given flavor."""
        if flavor == EXPONENTIAL:
            return cls(tuple(Fraction(v) / factorial(n) for n, v in enumerate(values)), flavor)
        return cls(tuple(values), flavor)

    @classmethod
    def parse(cls, text: str) -> "Series":
        """Read the ``flavor:... order:... coeffs:...`` literal."""
        fields = dict(re.findall(r"(\w+):(\S+)", text))
        if "coeffs" not in fields:
            raise ValueError(f"series literal without coeffs: {text!r}")
        coeffs = tuple(Fraction(c) for c in fields["coeffs"].split(","))
        flavor = fields.get("flavor", ORDINARY)
        if "order" in fields:
            order = int(fields["order"])
            if order + 1 != len(coeffs):
                raise ValueError(f"order {order} does not match {len(coeffs)} coefficients")
        return cls(coeffs, flavor)

    # -- accessors --------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def values(self) -> tuple:
        """The combinatorial sequence this series encodes."""
        if self.flavor == EXPONENTIAL:
            return tuple(c * factorial(n) for n, c in enumerate(self.coeffs))
        return self.coeffs

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return Series(self.coeffs[: order + 1], self.flavor)

    def with_flavor(self, flavor: str) -> "Series":
        return Series(self.coeffs, flavor)

    def __str__(self):
        return f"flavor:{self.flavor} order:{self.order} coeffs:" + ",".join(
            str(c) for c in self.coeffs
        )

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        return add(self, _coerce(other, self))

    __radd__ = __add__

    def __neg__(self):
        return Series(tuple(-c for c in self.coeffs), self.flavor)

    def __sub__(self, other):
        return add(self, -_coerce(other, self))

    def __rsub__(self, other):
        return add(_coerce(other, self), -self)

    def __mul__(self, other):
        if isinstance(other, Series):
            return mul(self, other)
        c = Fraction(other)
        return Series(tuple(c * a for a in self.coeffs), self.flavor)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return inverse(self) ** (-k)
        out = Series.one(self.order, self.flavor)
        base = self
        while k:
            if k & 1:
                out = mul(out, base)
            base = mul(base, base)
            k >>= 1
        return out


def _coerce(other, like: Series) -> Series:
    if isinstance(other, Series):
        return other
    return Series((other,) + (0,) * like.order, like.flavor)


def _check_flavor(a: Series, b: Series):
    if a.flavor != b.flavor:
        raise FlavorMismatch(f"{a.flavor} vs {b.flavor}")


def add(a: Series, b: Series) -> Series:
    _check_flavor(a, b)
    n = min(a.order, b.order)
    return Series(tuple(a.coeffs[i] + b.coeffs[i] for i in range(n + 1)), a.flavor)


def mul(a: Series, b: Series) -> Series:
    """Cauchy convolution ``c_n = sum_k a_k b_{n-k}``, truncated at the smaller order."""
    _check_flavor(a, b)
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = []
    for m in range(n + 1):
        s = Fraction(0)
        for k in range(m + 1):
            if ac[k] and bc[m - k]:
                s += ac[k] * bc[m - k]
        out.append(s)
    return Series(tuple(out), a.flavor)


def inverse(a: Series) -> Series:
    """Multiplicative inverse; the constant term must be nonzero."""
    a0 = a.coeffs[0]
    if a0 == 0:
        raise NonUnitConstantTerm("constant term is zero")
    out = [1 / a0]
    for m in range(1, a.order + 1):
        s = sum((a.coeffs[k] * out[m - k] for k in range(1, m + 1)), Fraction(0))
        out.append(-s / a0)
    return Series(tuple(out), a.flavor)


def compose(a: Series, b: Series) -> Series:
    """``a(b(x))`` for ``b`` with zero constant term (Horner in truncated arithmetic)."""
    _check_flavor(a, b)
    if b.coeffs[0] != 0:
        raise NonzeroInnerConstant("inner series must have zero constant term")
    n = min(a.order, b.order)
    b = b.truncate(n)
    out = Series.zero(n, a.flavor)
    for c in reversed(a.coeffs[: n + 1]):
        out = mul(out, b) + c
    return out


def derive(a: Series) -> Series:
    if a.order == 0:
        raise ValueError("derivative of an order-0 series has no known coefficients")
    return Series(tuple(n * a.coeffs[n] for n in range(1, a.order + 1)), a.flavor)


def integrate(a: Series, max_order: int | None = None) -> Series:
    """Antiderivative with zero constant term, optionally capped at ``max_order``."""
    out = Series((0,) + tuple(c / (n + 1) for n, c in enumerate(a.coeffs)), a.flavor)
    if max_order is not None and out.order > max_order:
        out = out.truncate(max_order)
    return out


def to_exponential(a: Series) -> Series:
    """Reinterpret the coefficients of an ordinary series as exponential values.

    ``coeffs[n]`` becomes the n-th value of the exponential series, so the
    stored coefficient is divided by ``n!``.
    """
    if a.flavor != ORDINARY:
        raise FlavorMismatch("expected an ordinary series")
    return Series.from_values(a.coeffs, EXPONENTIAL)


def to_ordinary(a: Series) -> Series:
    """Inverse of :func:`to_exponential`."""
    if a.flavor != EXPONENTIAL:
        raise FlavorMismatch("expected an exponential series")
    return Series(a.values(), ORDINARY)


def binomial_convolution(a: Sequence, b: Sequence) -> tuple:
    """``c_n = sum_k C(n, k) a_k b_{n-k}`` on plain sequences."""
    n = min(len(a), len(b))
    return tuple(
        sum((comb(m, k) * Fraction(a[k]) * Fraction(b[m - k]) for k in range(m + 1)), Fraction(0))
        for m in range(n)
    )


def series(coeffs: Iterable, flavor: str = ORDINARY) -> Series:
    return Series(tuple(coeffs), flavor)
