"""Umbrae as moment sequences and ``eval`` as a product functional.

Each umbra is a copy of the non-negative integers carrying its own
measure, listed as moments ``eval(alpha**i)``.  An umbral polynomial is a
finitely supported function on the product of those copies, and ``eval``
integrates it against the product measure:

    eval(alpha**i * beta**j) = eval(alpha**i) * eval(beta**j)

for distinct umbrae.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

from .errors import InsufficientMoments, UnknownUmbra
from .series import EXPONENTIAL, Series, mul


@dataclass(frozen=True)
class Umbra:
    name: str
    moments: tuple

    def __post_init__(self):
        moments = tuple(Fraction(m) for m in self.moments)
        if not moments or moments[0] != 1:
            raise ValueError("an umbra must have eval(1) = 1")
        object.__setattr__(self, "moments", moments)

    @classmethod
    def from_json(cls, data: dict) -> "Umbra":
        return cls(data["name"], tuple(Fraction(m) for m in data["moments"]))

    def moment(self, i: int) -> Fraction:
        if i >= len(self.moments):
            raise InsufficientMoments(f"{self.name} has {len(self.moments)} moments, need index {i}")
        return self.moments[i]

    def __pow__(self, k: int) -> "UmbralPoly":
        return UmbralPoly.atom(self.name) ** k


def augmentation(N: int, name: str = "eps") -> Umbra:
    """``eval(eps**i) = [i == 0]``."""
    return Umbra(name, (1,) + (0,) * N)


def unity(N: int, name: str = "u") -> Umbra:
    """All moments equal to one."""
    return Umbra(name, (1,) * (N + 1))


def _mono(exps: Mapping) -> tuple:
    return tuple(sorted((k, e) for k, e in exps.items() if e))


class UmbralPoly:
    """Rational combination of monomials ``alpha**i beta**j ...``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | None = None):
        out = {}
        for mono, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                out[mono] = out.get(mono, 0) + c
        self.terms = {m: c for m, c in out.items() if c}

    @classmethod
    def const(cls, c) -> "UmbralPoly":
        return cls({(): c})

    @classmethod
    def atom(cls, name: str) -> "UmbralPoly":
        return cls({((name, 1),): 1})

    @classmethod
    def parse(cls, text: str) -> "UmbralPoly":
        return _Parser(text).parse()

    def names(self) -> set:
        return {n for mono in self.terms for n, _ in mono}

    def __add__(self, other):
        other = _lift(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return UmbralPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UmbralPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                exps = dict(m1)
                for name, e in m2:
                    exps[name] = exps.get(name, 0) + e
                key = _mono(exps)
                out[key] = out.get(key, 0) + c1 * c2
        return UmbralPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not umbral polynomials")
        out = UmbralPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, UmbralPoly):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, c in sorted(self.terms.items()):
            body = "*".join(n if e == 1 else f"{n}^{e}" for n, e in mono)
            parts.append(f"{c}*{body}" if body else str(c))
        return " + ".join(parts)


def _lift(x) -> UmbralPoly:
    return x if isinstance(x, UmbralPoly) else UmbralPoly.const(x)


def _env(env) -> dict:
    if isinstance(env, Mapping):
        return dict(env)
    return {u.name: u for u in env}


def eval_umbral(p: UmbralPoly, env: Iterable[Umbra] | Mapping[str, Umbra]) -> Fraction:
    """Linear extension of the product rule over distinct umbrae."""
    umbrae = _env(env)
    total = Fraction(0)
    for mono, c in p.terms.items():
        v = c
        for name, e in mono:
            if name not in umbrae:
                raise UnknownUmbra(name)
            v *= umbrae[name].moment(e)
        total += v
    return total


def umbrally_equivalent(f: UmbralPoly, g: UmbralPoly, env) -> bool:
    return eval_umbral(_lift(f), env) == eval_umbral(_lift(g), env)


class Exchangeability(NamedTuple):
    """Moments compared up to ``bound``; ``witness`` is the first differing index."""

    equal: bool
    bound: int
    witness: int | None

    def __bool__(self):
        return self.equal


def exchangeable(alpha: Umbra, beta: Umbra, N: int) -> Exchangeability:
    """Compare ``eval(alpha**n)`` and ``eval(beta**n)`` for ``n <= N``."""
    for n in range(N + 1):
        if alpha.moment(n) != beta.moment(n):
            return Exchangeability(False, N, n)
    return Exchangeability(True, N, None)


def dot_power_moments(alpha: Umbra, n: int, N: int) -> tuple:
    """Moments of ``n.alpha``, the sum of ``n`` independent copies of ``alpha``.

    ``eval((n.alpha)**k)`` is the ``n``-fold binomial convolution of the moments,
    computed as a power of the exponential series of the moment sequence.
    """
    if n < 0:
        raise ValueError("dot power needs n >= 0")
    if len(alpha.moments) < N + 1:
        raise InsufficientMoments(f"need {N + 1} moments of {alpha.name}")
    base = Series.from_values(alpha.moments[: N + 1], EXPONENTIAL)
    out = Series.one(N, EXPONENTIAL)
    for _ in range(n):
        out = mul(out, base)
    return out.values()


def dot_power(alpha: Umbra, n: int, N: int, name: str | None = None) -> Umbra:
    return Umbra(name or f"{n}.{alpha.name}", dot_power_moments(alpha, n, N))


# -- expression grammar -----------------------------------------------------
#   expr   := term (("+" | "-") term)*
#   term   := ["-"] factor ("*" factor)*
#   factor := atom ["^" INT]
#   atom   := INT ["/" INT] | NAME | "(" expr ")"

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


class _Parser:
    def __init__(self, text: str):
        self.toks = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            num, name, sym = m.groups()
            self.toks.append(("num", int(num)) if num else ("name", name) if name else ("sym", sym))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            raise ValueError(f"unexpected {tok[1]!r} at token {self.i}")
        self.i += 1
        return tok[1]

    def parse(self) -> UmbralPoly:
        out = self.expr()
        if self.i != len(self.toks):
            raise ValueError(f"trailing input at token {self.i}")
        return out

    def expr(self):
        out = self.term()
        while self.peek() in (("sym", "+"), ("sym", "-")):
            op = self.take()
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self):
        sign = 1
        if self.peek() == ("sym", "-"):
            self.take()
            sign = -1
        out = self.factor()
        while self.peek() == ("sym", "*"):
            self.take()
            out = out * self.factor()
        return out * sign

    def factor(self):
        base = self.atom()
        if self.peek() == ("sym", "^"):
            self.take()
            base = base ** self.take("num")
        return base

    def atom(self):
        kind, val = self.peek()
        if kind == "num":
            self.take()
            if self.peek() == ("sym", "/"):
                self.take()
                return UmbralPoly.const(Fraction(val, self.take("num")))
            return UmbralPoly.const(val)
        if kind == "name":
            self.take()
            return UmbralPoly.atom(val)
        self.take("sym", "(")
        out = self.expr()
        self.take("sym", ")")
        return out
