"""The three nonlinear heat-transfer models, their closed-form solutions and
the audit of the published Lie-symmetry expression for Model 2.

Model 1 (BVP):  (1 + eps*u) u'' + eps*u'^2 = 0,   u(0) = 1, u(1) = 0
Model 2 (BVP):  u'' - eps*u^4 = 0,                u'(0) = 0, u(1) = 1
Model 3 (IVP):  (1 + eps*u) u' + u = 0,           u(0) = 1
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, SingularityError
from .numerics import ROOT_TOL, Bracket, find_root


class ModelId(enum.Enum):
    MODEL1 = 1
    MODEL2 = 2
    MODEL3 = 3

    @classmethod
    def parse(cls, value) -> "ModelId":
        if isinstance(value, cls):
            return value
        return cls(int(value))


def check_eps(eps: float, *, allow_zero: bool = False) -> float:
    eps = float(eps)
    if not math.isfinite(eps) or eps < 0 or (eps == 0 and not allow_zero):
        bound = ">= 0" if allow_zero else "> 0"
        raise ValueError(f"eps must be finite and {bound}, got {eps!r}")
    return eps


# --- Model 1 -----------------------------------------------------------------

def _model1_root(x, eps):
    r = (1.0 + eps) ** 2 * (1.0 - x) + x
    if r < 0:
        raise DomainError(f"negative radicand {r!r} in Model 1 solution at x={x!r}", x=x)
    return math.sqrt(r)


# (sqrt(R) - 1) / eps rewritten with R - 1 = eps (2 + eps) (1 - x): no cancellation
# as eps -> 0, and eps = 0 gives the linear limit 1 - x without a special case.

def model1_exact(x: float, eps: float) -> float:
    """Exact Model 1 profile ``(sqrt((1+eps)^2 + (1-(1+eps)^2) x) - 1) / eps``."""
    eps = check_eps(eps, allow_zero=True)
    return (2.0 + eps) * (1.0 - x) / (_model1_root(x, eps) + 1.0)


def model1_exact_derivative(x: float, eps: float) -> float:
    eps = check_eps(eps, allow_zero=True)
    return -(2.0 + eps) / (2.0 * _model1_root(x, eps))


def model1_exact_second_derivative(x: float, eps: float) -> float:
    eps = check_eps(eps, allow_zero=True)
    return -eps * (2.0 + eps) ** 2 / (4.0 * _model1_root(x, eps) ** 3)


def model1_flux(u: float, uprime: float, eps: float) -> float:
    """Conserved flux ``(1 + eps*u) u'`` of Model 1."""
    return (1.0 + eps * u) * uprime


def model1_slope_at_0(eps: float) -> float:
    """Exact initial slope ``u'(0) = -(2+eps) / (2(1+eps))`` of Model 1."""
    eps = check_eps(eps, allow_zero=True)
    return -(2.0 + eps) / (2.0 * (1.0 + eps))


# --- Model 3 -----------------------------------------------------------------

def model3_implicit_residual(u: float, x: float, eps: float) -> float:
    return math.log(u) + eps * (u - 1.0) + x


def model3_implicit_solve(x: float, eps: float, tol: float = ROOT_TOL) -> float:
    """Solve ``ln u + eps (u - 1) + x = 0`` for ``u`` in ``(0, 1]``.

    The left side increases strictly in ``u`` and the root is at least
    ``exp(-x - eps)``; half of that is used as the lower end so the sign
    change survives rounding when ``eps`` is tiny.
    """
    eps = check_eps(eps, allow_zero=True)
    if x < 0:
        raise ValueError(f"x must be >= 0, got {x!r}")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if x == 0:
        return 1.0
    if eps == 0:
        return math.exp(-x)
    lo = 0.5 * math.exp(-x - eps)
    result = find_root(
        lambda u: model3_implicit_residual(u, x, eps), Bracket(lo, 1.0), tol=0.0, ftol=tol
    )
    return result.root


# --- Model 2: the published Lie-symmetry expression -------------------------

def _lie_slope(eps):
    return math.sqrt(0.9 * eps)


def _lie_base(x, eps):
    a = _lie_slope(eps)
    base = a * x + 1.0 - a
    if base <= 0:
        raise SingularityError(
            f"Lie expression has non-positive base {base!r} at x={x!r} (eps={eps!r})", x=x
        )
    return base


def model2_lie_claimed(x: float, eps: float) -> float:
    """The claimed Model 2 solution ``(a x + 1 - a)^(-2/3)`` with ``a = sqrt(9 eps/10)``.

    Raises
    ------
    SingularityError
        If the base is non-positive at ``x``; at ``eps = 10/9`` this happens at
        ``x = 0``, where the expression reduces to ``x^(-2/3)``.
    """
    eps = check_eps(eps)
    return _lie_base(x, eps) ** (-2.0 / 3.0)


def model2_lie_derivative(x: float, eps: float) -> float:
    eps = check_eps(eps)
    return -(2.0 / 3.0) * _lie_slope(eps) * _lie_base(x, eps) ** (-5.0 / 3.0)


def model2_lie_second_derivative(x: float, eps: float) -> float:
    eps = check_eps(eps)
    a = _lie_slope(eps)
    return (10.0 / 9.0) * a * a * _lie_base(x, eps) ** (-8.0 / 3.0)


@dataclass(frozen=True)
class LieAuditReport:
    epsilon: float
    bc_at_1_residual: float
    derivative_at_0: float
    max_ode_residual: float
    singular_at_origin: bool
    # First x in [0, 1] where the base vanishes; None when it stays positive.
    pole: float | None = None

    @property
    def verdict(self) -> str:
        if self.singular_at_origin:
            return "SINGULAR"
        ode = "PASS-ODE" if self.max_ode_residual < 1e-10 else "FAIL-ODE"
        bc = "FAIL-BC" if abs(self.derivative_at_0) > 1e-8 else "PASS-BC"
        return f"{ode}/{bc}"


def lie_claim_audit(eps: float, grid_n: int = 101) -> LieAuditReport:
    """Check the claimed Model 2 solution against the ODE and both boundary conditions.

    The expression solves ``u'' = eps u^4`` identically and meets ``u(1) = 1``,
    but its slope at the origin is ``-(2/3) a (1-a)^(-5/3)``, which is never
    zero for ``0 < eps < 10/9``. Grid points where the base is non-positive are
    left out of the ODE residual and reported through ``pole``.
    """
    eps = check_eps(eps)
    if grid_n < 2:
        raise ValueError("grid_n must be at least 2")
    a = _lie_slope(eps)
    singular = math.isclose(a, 1.0, rel_tol=0.0, abs_tol=1e-12)
    pole = None
    if a >= 1.0 or singular:
        pole = max(0.0, 1.0 - 1.0 / a)

    bc_residual = model2_lie_claimed(1.0, eps) - 1.0
    try:
        slope0 = model2_lie_derivative(0.0, eps)
    except SingularityError:
        slope0 = math.nan

    worst = 0.0
    for x in np.linspace(0.0, 1.0, grid_n):
        x = float(x)
        if pole is not None and x <= pole:
            continue
        try:
            u = model2_lie_claimed(x, eps)
            upp = model2_lie_second_derivative(x, eps)
        except SingularityError:
            continue
        worst = max(worst, abs(ode_residual(ModelId.MODEL2, u, 0.0, upp, eps)))

    return LieAuditReport(
        epsilon=eps,
        bc_at_1_residual=bc_residual,
        derivative_at_0=slope0,
        max_ode_residual=worst,
        singular_at_origin=singular,
        pole=pole,
    )


def ode_residual(model, u: float, uprime: float, usecond: float, eps: float) -> float:
    """Left-hand side of the model ODE evaluated at the jet ``(u, u', u'')``."""
    model = ModelId.parse(model)
    if model is ModelId.MODEL1:
        return (1.0 + eps * u) * usecond + eps * uprime**2
    if model is ModelId.MODEL2:
        return usecond - eps * u**4
    return (1.0 + eps * u) * uprime + u
