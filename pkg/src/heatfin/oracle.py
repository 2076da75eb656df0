"""Fixed-step classical RK4 reference integrator, kept independent of the
series code so the two can check each other."""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import BracketError
from .models import check_eps
from .numerics import ROOT_TOL, Bracket, find_root

DEFAULT_STEPS = 10_000
# Model 2 blows up in finite x for large u0*eps; past this the shot counts as overshooting.
_BLOWUP = 1e8
METHODS = ("exact", "taylor", "virial", "hypervirial", "lie", "rk4")


class IvpState(NamedTuple):
    x: float
    u: float
    v: float


@dataclass(frozen=True)
class SolutionProfile:
    """Sampled ``(x, u)`` pairs produced by one method at one ``eps``."""

    method: str
    eps: float
    x: np.ndarray
    u: np.ndarray

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method label {self.method!r}")
        if self.x.shape != self.u.shape or self.x.ndim != 1:
            raise ValueError("x and u must be 1-d arrays of equal length")
        if np.any(np.diff(self.x) <= 0) or self.x[0] < 0 or self.x[-1] > 1:
            raise ValueError("profile abscissae must increase strictly within [0, 1]")

    @property
    def samples(self) -> list[tuple[float, float]]:
        return list(zip(self.x.tolist(), self.u.tolist()))

    def at(self, x: float) -> float:
        i = int(np.searchsorted(self.x, x))
        if i == self.x.size or not np.isclose(self.x[i], x, rtol=0, atol=1e-12):
            raise KeyError(f"x={x!r} is not a sample point")
        return float(self.u[i])


def _rk4_model2(u0, eps, steps, record):
    h = 1.0 / steps
    u, v = u0, 0.0
    us = [u] if record else None
    for _ in range(steps):
        k1u, k1v = v, eps * u**4
        ua = u + 0.5 * h * k1u
        k2u, k2v = v + 0.5 * h * k1v, eps * ua**4
        ub = u + 0.5 * h * k2u
        k3u, k3v = v + 0.5 * h * k2v, eps * ub**4
        uc = u + h * k3u
        k4u, k4v = v + h * k3v, eps * uc**4
        u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u)
        v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v)
        if record:
            us.append(u)
    return IvpState(1.0, u, v), us


def rk4_model2(u0: float, eps: float, steps: int = DEFAULT_STEPS) -> SolutionProfile:
    """Integrate ``u' = v, v' = eps u^4`` from ``u(0) = u0, v(0) = 0`` to ``x = 1``."""
    eps = check_eps(eps, allow_zero=True)
    if u0 <= 0:
        raise ValueError(f"u0 must be positive, got {u0!r}")
    if steps < 10:
        raise ValueError("steps must be at least 10")
    _, us = _rk4_model2(u0, eps, steps, record=True)
    return SolutionProfile("rk4", eps, np.linspace(0.0, 1.0, steps + 1), np.array(us))


def rk4_model2_endpoint(u0: float, eps: float, steps: int = DEFAULT_STEPS) -> IvpState:
    return _rk4_model2(u0, eps, steps, record=False)[0]


def rk4_shoot_model2(eps: float, steps: int = DEFAULT_STEPS, tol: float = ROOT_TOL) -> float:
    """``u(0)`` for Model 2 by RK4 shooting on ``u(1) = 1`` over ``(0, 1]``."""
    eps = check_eps(eps)

    def mismatch(u0):
        try:
            end = rk4_model2_endpoint(u0, eps, steps).u
        except OverflowError:
            return _BLOWUP
        return min(end, _BLOWUP) - 1.0

    bracket = Bracket(1e-6, 1.0)
    if (mismatch(bracket.lo) < 0) == (mismatch(bracket.hi) < 0):
        raise BracketError(f"RK4 shooting found no sign change on (0, 1] at eps={eps}")
    return find_root(mismatch, bracket, tol=tol).root


def rk4_model3(eps: float, steps: int = DEFAULT_STEPS) -> SolutionProfile:
    """Integrate ``u' = -u / (1 + eps u)`` from ``u(0) = 1`` to ``x = 1``."""
    eps = check_eps(eps, allow_zero=True)
    if steps < 10:
        raise ValueError("steps must be at least 10")
    h = 1.0 / steps

    def rhs(u):
        return -u / (1.0 + eps * u)

    u = 1.0
    us = [u]
    for _ in range(steps):
        k1 = rhs(u)
        k2 = rhs(u + 0.5 * h * k1)
        k3 = rhs(u + 0.5 * h * k2)
        k4 = rhs(u + h * k3)
        u += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        us.append(u)
    return SolutionProfile("rk4", eps, np.linspace(0.0, 1.0, steps + 1), np.array(us))
