"""Truncated Taylor series about x = 0 for Models 1 and 2, boundary shooting on
the partial sums and a ratio-test estimate of the radius of convergence."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BracketError, DomainError
from .models import check_eps
from .numerics import ROOT_TOL, Bracket, find_root

DEFAULT_ORDER = 30
MODEL2_U0_FLOOR = 1e-6


class PowerSeries:
    """Coefficients ``c[j]`` of ``sum_j c[j] x**j`` truncated at order ``N``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        c = np.array(coeffs, dtype=float).ravel()
        if c.size == 0:
            raise ValueError("a power series needs at least one coefficient")
        if not np.all(np.isfinite(c)):
            raise DomainError("power series coefficients must be finite")
        c.setflags(write=False)
        self.coeffs = c

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    def __len__(self):
        return self.coeffs.size

    def __getitem__(self, j):
        return self.coeffs[j]

    def __mul__(self, other):
        return cauchy_product(self, other)

    def __call__(self, x):
        return series_eval(self, x)

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return np.array_equal(self.coeffs, other.coeffs)

    def __repr__(self):
        return f"PowerSeries({self.coeffs.tolist()!r})"

    def derivative(self) -> "PowerSeries":
        return series_derivative(self)


def cauchy_product(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    n = min(a.order, b.order)
    return PowerSeries(np.convolve(a.coeffs[: n + 1], b.coeffs[: n + 1])[: n + 1])


def series_eval(s: PowerSeries, x: float) -> float:
    acc = 0.0
    for c in s.coeffs[::-1]:
        acc = acc * x + c
    return float(acc)


def series_derivative(s: PowerSeries) -> PowerSeries:
    if s.order == 0:
        return PowerSeries([0.0])
    k = np.arange(1, s.order + 1)
    return PowerSeries(k * s.coeffs[1:])


def model2_coeffs(u0: float, eps: float, N: int = DEFAULT_ORDER) -> PowerSeries:
    """Taylor coefficients of Model 2 with ``u(0) = u0`` and ``u'(0) = 0``.

    Uses ``u[n+2] = eps * (u^4)[n] / ((n+1)(n+2))``, where ``(u^4)[n]`` only
    needs coefficients up to ``n``.
    """
    eps = check_eps(eps, allow_zero=True)
    if u0 <= 0:
        raise ValueError(f"u0 must be positive, got {u0!r}")
    if N < 2:
        raise ValueError("N must be at least 2")
    c = np.zeros(N + 1)
    c[0] = u0
    for n in range(N - 1):
        head = c[: n + 1]
        sq = np.convolve(head, head)[: n + 1]
        quartic_n = float(np.dot(sq, sq[::-1]))
        c[n + 2] = eps * quartic_n / ((n + 1) * (n + 2))
    return PowerSeries(c)


def model1_coeffs(slope: float, eps: float, N: int = DEFAULT_ORDER) -> PowerSeries:
    """Taylor coefficients of Model 1 with ``u(0) = 1`` and ``u'(0) = slope``.

    Order ``n`` of ``(1 + eps u) u'' + eps u'^2 = 0`` is solved for ``u[n+2]``;
    with ``u[0] = 1`` the leading factor is ``(1 + eps)(n+1)(n+2)``.
    """
    eps = check_eps(eps, allow_zero=True)
    if N < 2:
        raise ValueError("N must be at least 2")
    c = np.zeros(N + 1)
    c[0] = 1.0
    c[1] = slope
    for n in range(N - 1):
        k = np.arange(1, n + 1)
        m = n - k + 2
        cross = float(np.sum(c[k] * (m - 1) * m * c[m]))
        j = np.arange(n + 1)
        grad_sq = float(np.sum((j + 1) * c[j + 1] * (n - j + 1) * c[n - j + 1]))
        c[n + 2] = -eps * (cross + grad_sq) / ((1.0 + eps) * (n + 1) * (n + 2))
    return PowerSeries(c)


@dataclass(frozen=True)
class ShootingResult:
    free_param: float
    order: int
    boundary_residual: float
    series: PowerSeries


def _shoot(mismatch, bracket, tol, what):
    try:
        lo_val, hi_val = mismatch(bracket.lo), mismatch(bracket.hi)
    except DomainError:
        lo_val = hi_val = math.nan
    if not (math.isfinite(lo_val) and math.isfinite(hi_val)) or (lo_val < 0) == (hi_val < 0):
        raise BracketError(
            f"{what}: no sign change of the boundary mismatch on [{bracket.lo}, {bracket.hi}]"
            " (series truncation too low or eps beyond the convergence range)"
        )
    return find_root(mismatch, bracket, tol=tol)


def shoot_model2(eps: float, N: int = DEFAULT_ORDER, tol: float = ROOT_TOL) -> ShootingResult:
    """Find ``u0 = u(0)`` for Model 2 as the root of ``u^[N](1) = 1`` in ``(0, 1]``."""
    eps = check_eps(eps)
    if N < 4:
        raise ValueError("N must be at least 4")
    if tol <= 0:
        raise ValueError("tol must be positive")
    root = _shoot(
        lambda u0: series_eval(model2_coeffs(u0, eps, N), 1.0) - 1.0,
        Bracket(MODEL2_U0_FLOOR, 1.0),
        tol,
        f"Model 2 shooting at eps={eps}, N={N}",
    )
    return ShootingResult(root.root, N, root.residual, model2_coeffs(root.root, eps, N))


def shoot_model1(eps: float, N: int = DEFAULT_ORDER, tol: float = ROOT_TOL) -> ShootingResult:
    """Find the initial slope for Model 1 as the root of ``u^[N](1) = 0``."""
    eps = check_eps(eps)
    if N < 4:
        raise ValueError("N must be at least 4")
    if tol <= 0:
        raise ValueError("tol must be positive")
    root = _shoot(
        lambda s: series_eval(model1_coeffs(s, eps, N), 1.0),
        Bracket(-(2.0 + eps) / 2.0 - 1.0, 0.0),
        tol,
        f"Model 1 shooting at eps={eps}, N={N}",
    )
    return ShootingResult(root.root, N, root.residual, model1_coeffs(root.root, eps, N))


def radius_estimate(s: PowerSeries, pairs: int = 3) -> float:
    """Ratio-test estimate of the radius of convergence from the tail coefficients.

    Even series (all odd coefficients zero) use ``|c[n] / c[n+2]|**0.5`` over
    even ``n``; otherwise ``|c[n] / c[n+1]|``. The last ``pairs`` ratios are
    averaged to damp odd/even oscillation.
    """
    c = s.coeffs
    even_only = c.size > 1 and np.all(c[1::2] == 0)
    step = 2 if even_only else 1
    usable = c[::step]
    # trailing run of consecutive nonzero coefficients in the parity class
    run = 0
    for value in usable[::-1]:
        if value == 0:
            break
        run += 1
    if run < 6:
        raise ValueError(
            f"radius estimate needs 6 consecutive nonzero coefficients, found {run}"
        )
    tail = np.abs(usable[usable.size - run :])
    ratios = tail[:-1] / tail[1:]
    if even_only:
        ratios = np.sqrt(ratios)
    return float(np.mean(ratios[-pairs:]))
