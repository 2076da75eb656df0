"""Cosh trial function for Model 2 fitted through virial-type integral identities.

For ``u'' = f(u)`` on [0, 1] and any differentiable weight ``w(u)``:

    w(u(1)) u'(1) - w(u(0)) u'(0) = int_0^1 [ w'(u) u'^2 + w(u) f(u) ] dx

The trial ``cosh(b x) / cosh(b)`` meets both Model 2 boundary conditions, so
the identity leaves one equation for ``b``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable

from .errors import BracketError, DomainError
from .models import check_eps
from .numerics import QUAD_TOL, ROOT_TOL, find_brackets, find_root, integrate

B_MIN = 0.01
B_MAX = 10.0
N_SCAN = 500
_B_OVERFLOW = 80.0


class WeightChoice(enum.Enum):
    VIRIAL = "virial"  # w(u) = u
    HYPERVIRIAL = "hypervirial"  # w(u) = 1

    def w(self, u: float) -> float:
        return u if self is WeightChoice.VIRIAL else 1.0

    def dw(self, u: float) -> float:
        return 1.0 if self is WeightChoice.VIRIAL else 0.0


def u_app(x: float, b: float) -> float:
    """Trial profile ``cosh(b x) / cosh(b)``."""
    if b < 0:
        raise ValueError(f"b must be >= 0, got {b!r}")
    return math.cosh(b * x) / math.cosh(b)


def u_app_derivative(x: float, b: float) -> float:
    if b < 0:
        raise ValueError(f"b must be >= 0, got {b!r}")
    return b * math.sinh(b * x) / math.cosh(b)


def residual_closed(b: float, eps: float, w: WeightChoice) -> float:
    """Closed-form fitting condition for ``b``, grouped in powers of ``exp(2b)``.

    Unnormalised: the value grows like ``exp(10 b)``, so only its sign and its
    zeros are meaningful. ``b = 0`` is always a (trivial) zero.
    """
    if b < 0:
        raise ValueError(f"b must be >= 0, got {b!r}")
    if b > _B_OVERFLOW:
        raise DomainError(f"b={b!r} overflows the closed-form residual (limit {_B_OVERFLOW})", x=b)
    try:
        value = _closed(b, eps, w)
    except OverflowError:
        value = math.inf
    if not math.isfinite(value):
        # exp(10 b) leaves double range below b = 71
        raise DomainError(f"closed-form residual overflows at b={b!r}", x=b)
    return value


def _closed(b, eps, w):
    e2 = math.exp(2.0 * b)
    b2 = b * b
    if w is WeightChoice.VIRIAL:
        b3 = b2 * b
        return (
            3.0 * e2**5 * (5.0 * b2 - 2.0 * eps)
            + 5.0 * e2**4 * (12.0 * b3 + 9.0 * b2 - 10.0 * eps)
            + 30.0 * e2**3 * (6.0 * b3 + b2 - 10.0 * eps)
            + 30.0 * e2**2 * (6.0 * b3 - b2 + 10.0 * eps)
            + 5.0 * e2 * (12.0 * b3 - 9.0 * b2 + 10.0 * eps)
            - 3.0 * (5.0 * b2 - 2.0 * eps)
        )
    return (
        3.0 * e2**5 * (5.0 * b2 - eps)
        + 5.0 * e2**4 * (9.0 * b2 - 5.0 * eps)
        + 30.0 * e2**3 * (b2 - 5.0 * eps)
        + 30.0 * e2**2 * (5.0 * eps - b2)
        + 5.0 * e2 * (5.0 * eps - 9.0 * b2)
        - 3.0 * (5.0 * b2 - eps)
    )


def residual_quadrature(b: float, eps: float, w: WeightChoice, tol: float = QUAD_TOL) -> float:
    """``w(1) u'(1) - int_0^1 [w'(u) u'^2 + eps w(u) u^4] dx`` for the cosh trial.

    Evaluated by adaptive quadrature, independently of :func:`residual_closed`.
    """
    if b < 0:
        raise ValueError(f"b must be >= 0, got {b!r}")
    cb = math.cosh(b)

    def integrand(x):
        u = math.cosh(b * x) / cb
        du = b * math.sinh(b * x) / cb
        return w.dw(u) * du * du + eps * w.w(u) * u**4

    return w.w(1.0) * b * math.tanh(b) - integrate(integrand, 0.0, 1.0, tol)


def general_hypervirial_residual(
    f: Callable[[float], float],
    w: Callable[[float], float],
    w_deriv: Callable[[float], float],
    trial: Callable[[float, object], float],
    trial_deriv: Callable[[float, object], float],
    params=None,
    tol: float = QUAD_TOL,
) -> float:
    """Defect of the weighted integral identity for ``u'' = f(u)`` on [0, 1].

    Returns ``w(u(1)) u'(1) - w(u(0)) u'(0) - int_0^1 [w'(u) u'^2 + w(u) f(u)] dx``
    for the trial ``u(x) = trial(x, params)``. Zero whenever the trial solves
    the ODE exactly.
    """

    def integrand(x):
        u = trial(x, params)
        du = trial_deriv(x, params)
        return w_deriv(u) * du * du + w(u) * f(u)

    boundary = w(trial(1.0, params)) * trial_deriv(1.0, params) - w(trial(0.0, params)) * trial_deriv(
        0.0, params
    )
    return boundary - integrate(integrand, 0.0, 1.0, tol)


@dataclass(frozen=True)
class AnsatzFit:
    weight: WeightChoice
    eps: float
    b: float
    u0_app: float
    closed_residual: float
    quad_residual: float

    def profile(self, x: float) -> float:
        return u_app(x, self.b)


def fit(
    eps: float,
    w: WeightChoice,
    tol: float = ROOT_TOL,
    *,
    b_min: float = B_MIN,
    b_max: float = B_MAX,
    n_scan: int = N_SCAN,
) -> AnsatzFit:
    """Fit ``b`` as the smallest root of :func:`residual_closed` in ``[b_min, b_max]``.

    ``tol`` bounds the width of the final bracket in ``b``; the residual
    magnitude is not used as a stopping test because of its exponential scale.
    """
    eps = check_eps(eps)
    w = WeightChoice(w)
    residual = lambda b: residual_closed(b, eps, w)  # noqa: E731
    brackets = find_brackets(residual, b_min, b_max, n_scan)
    if not brackets:
        raise BracketError(
            f"no sign change of the {w.value} residual for b in [{b_min}, {b_max}] at eps={eps}"
        )
    root = find_root(residual, brackets[0], tol=tol, ftol=0.0)
    b = root.root
    return AnsatzFit(
        weight=w,
        eps=eps,
        b=b,
        u0_app=1.0 / math.cosh(b),
        closed_residual=root.residual,
        quad_residual=residual_quadrature(b, eps, w),
    )
