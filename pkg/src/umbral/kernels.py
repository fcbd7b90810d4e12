"""Numerical checks of the one-dimensional Poisson and Gauss-Weierstrass
kernels as continuous tokens.

    poisson:      P(u; v, t)   = (1/pi) t / ((u - v)**2 + t**2)
    weierstrass:  W(z; w, tau) = (2 pi tau)**-1/2 exp(-(z - w)**2 / (2 tau))

Both satisfy the semigroup law

    K(u; v + v', s + s') = integral K(u'; v', s') K(u - u'; v, s) du'

which :func:`check_semigroup` verifies by composite Gauss-Legendre
quadrature on ``[-L, L]``.  The part of the integral outside ``[-L, L]``
is bounded analytically and folded into the verdict.  This is the only
floating-point module of the package.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import NonpositiveScale

POISSON = "poisson"
WEIERSTRASS = "weierstrass"
KINDS = (POISSON, WEIERSTRASS)


@dataclass(frozen=True)
class KernelParams:
    kind: str = POISSON
    panels: int = 400
    half_width: float = 200.0
    nodes: int = 16
    tolerance: float = 1e-6
    # replaces 1/pi (poisson) or (2 pi)**-1/2 (weierstrass); None means the true constant
    constant: float | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}")
        if self.half_width <= 0 or self.panels < 1 or self.nodes < 1 or self.tolerance <= 0:
            raise ValueError("half_width, panels, nodes and tolerance must be positive")

    @property
    def norm(self) -> float:
        if self.constant is not None:
            return self.constant
        return 1 / math.pi if self.kind == POISSON else 1 / math.sqrt(2 * math.pi)


@lru_cache(maxsize=32)
def _rule(panels: int, nodes: int, L: float):
    x, w = np.polynomial.legendre.leggauss(nodes)
    edges = np.linspace(-L, L, panels + 1)
    half = np.diff(edges)[:, None] / 2
    mid = (edges[:-1] + edges[1:])[:, None] / 2
    return (mid + half * x).ravel(), (half * w).ravel()


def quadrature_rule(kp: KernelParams):
    """Composite Gauss-Legendre nodes and weights on ``[-L, L]``."""
    return _rule(kp.panels, kp.nodes, float(kp.half_width))


def eval_kernel(kp: KernelParams, u, center: float, scale: float):
    """``K(u; center, scale)``, vectorized over ``u``."""
    if scale <= 0:
        raise NonpositiveScale(f"scale must be positive, got {scale}")
    d = np.asarray(u, dtype=float) - center
    if kp.kind == POISSON:
        return kp.norm * scale / (d * d + scale * scale)
    return kp.norm / math.sqrt(scale) * np.exp(-d * d / (2 * scale))


def _outside_mass(kp: KernelParams, center: float, scale: float) -> float:
    """Integral of ``K(.; center, scale)`` over ``|u| > L``."""
    L = kp.half_width
    if kp.kind == POISSON:
        inside = math.atan((L - center) / scale) + math.atan((L + center) / scale)
        return kp.norm * (math.pi - inside)
    r = math.sqrt(2 * scale)
    return kp.norm * math.sqrt(2 * math.pi) * 0.5 * (math.erfc((L - center) / r) + math.erfc((L + center) / r))


def _sup_outside(kp: KernelParams, u: float, center: float, scale: float) -> float:
    """``sup_{|u'| >= L} K(u - u'; center, scale)``."""
    d = max(kp.half_width - abs(u - center), 0.0)
    return float(eval_kernel(kp, d, 0.0, scale))


def total_mass(kp: KernelParams, center: float, scale: float) -> tuple:
    """``(quadrature integral over [-L, L], analytic mass outside)``."""
    x, w = quadrature_rule(kp)
    return float(w @ eval_kernel(kp, x, center, scale)), _outside_mass(kp, center, scale)


@dataclass
class SemigroupReport:
    kind: str
    first: tuple
    second: tuple
    max_discrepancy: float
    tail_bound: float
    tolerance: float
    samples: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.max_discrepancy + self.tail_bound <= self.tolerance

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_dict(self) -> dict:
        out = asdict(self)
        out["verdict"] = self.verdict
        return out


def check_semigroup(kp: KernelParams, first: tuple, second: tuple, samples=None) -> SemigroupReport:
    """Compare ``K(u; v + v', s + s')`` with the quadrature of the composition.

    ``first = (v, s)`` and ``second = (v', s')``; ``samples`` are the ``u`` values
    (default: 21 points on ``[-10, 10]``).
    """
    (v, s), (v2, s2) = first, second
    if s <= 0 or s2 <= 0:
        raise NonpositiveScale("scales must be positive")
    u = np.linspace(-10.0, 10.0, 21) if samples is None else np.asarray(samples, dtype=float)
    x, w = quadrature_rule(kp)
    outer = w * eval_kernel(kp, x, v2, s2)
    inner = eval_kernel(kp, u[:, None] - x[None, :], v, s)
    lhs = inner @ outer
    rhs = eval_kernel(kp, u, v + v2, s + s2)
    mass = _outside_mass(kp, v2, s2)
    tail = max(_sup_outside(kp, float(ui), v, s) for ui in u) * mass
    return SemigroupReport(
        kp.kind,
        (v, s),
        (v2, s2),
        float(np.max(np.abs(lhs - rhs))),
        float(tail),
        kp.tolerance,
        [float(ui) for ui in u],
    )


def refinement_discrepancies(kp: KernelParams, first: tuple, second: tuple, levels: int = 3) -> list:
    """Semigroup discrepancy for panel counts ``p, 2p, 4p, ...``."""
    out = []
    for i in range(levels):
        k = KernelParams(kp.kind, kp.panels * 2 ** i, kp.half_width, kp.nodes, kp.tolerance, kp.constant)
        out.append(check_semigroup(k, first, second).max_discrepancy)
    return out


def poisson_extension(kp: KernelParams, boundary: Callable, v, t: float):
    """Harmonic extension ``integral P(u; v, t) f(u) du`` at points ``v``."""
    x, w = quadrature_rule(kp)
    v = np.atleast_1d(np.asarray(v, dtype=float))
    return eval_kernel(kp, x[None, :] - v[:, None], 0.0, t) @ (w * boundary(x))


@dataclass
class ShiftReport:
    x: float
    x2: float
    composition_discrepancy: float
    commutation_discrepancy: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return max(self.composition_discrepancy, self.commutation_discrepancy) <= self.tolerance

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_dict(self) -> dict:
        out = asdict(self)
        out["verdict"] = self.verdict
        return out


def _gaussian(u):
    return np.exp(-u * u)


def check_shift_delta(kp: KernelParams, x: float, x2: float = 0.0, boundary: Callable = _gaussian,
                      points=None, scales=(0.5, 1.0, 2.0)) -> ShiftReport:
    """Shifts ``Q(x) F(v, t) = F(v + x, t)`` on Poisson extensions ``F``.

    Checks ``Q(x) Q(x2) = Q(x + x2)`` and that ``Q(x)`` applied to the extension of
    ``f`` equals the extension of the shifted boundary data ``f(. + x)``.
    """
    if kp.kind != POISSON:
        raise ValueError("shift delta family is defined for the Poisson kernel")
    v = np.linspace(-3.0, 3.0, 7) if points is None else np.asarray(points, dtype=float)
    comp = comm = 0.0
    for t in scales:
        def F(pts, t=t):
            return poisson_extension(kp, boundary, pts, t)

        composed = F((v + x2) + x)
        direct = F(v + (x + x2))
        comp = max(comp, float(np.max(np.abs(composed - direct))))
        shifted = poisson_extension(kp, lambda u: boundary(u + x), v, t)
        comm = max(comm, float(np.max(np.abs(F(v + x) - shifted))))
    return ShiftReport(x, x2, comp, comm, kp.tolerance)
