"""Scalar root finding and one-dimensional adaptive quadrature.

Everything here is a pure function of its arguments.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import BracketError, ConvergenceError, DomainError

ROOT_TOL = 1e-12
QUAD_TOL = 1e-10

# 7-point Gauss-Legendre on [-1, 1]; exact for polynomials up to degree 13.
_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(7)
_MAX_DEPTH = 50


@dataclass(frozen=True)
class Bracket:
    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"bracket requires lo < hi, got [{self.lo}, {self.hi}]")

    @property
    def width(self) -> float:
        return self.hi - self.lo


@dataclass(frozen=True)
class RootResult:
    root: float
    residual: float
    iterations: int


def _checked(f, x):
    fx = f(x)
    if not math.isfinite(fx):
        raise DomainError(f"function value {fx!r} is not finite at x={x!r}", x=x)
    return fx


def find_brackets(f: Callable[[float], float], lo: float, hi: float, n_scan: int) -> list[Bracket]:
    """Scan ``[lo, hi]`` on a uniform grid and return every sign-change interval.

    Scan points where ``f`` is exactly zero are skipped, so a simple root that
    lands on the grid is bracketed by its two neighbours while a tangent root
    (no sign change) produces nothing.

    Parameters
    ----------
    f : callable
        Scalar function of one variable.
    lo, hi : float
        Scan interval, ``lo < hi``.
    n_scan : int
        Number of scan points including both ends, at least 2.

    Returns
    -------
    list of Bracket
        Brackets in increasing order; empty if ``f`` never changes sign.
    """
    if not lo < hi:
        raise ValueError(f"scan interval requires lo < hi, got [{lo}, {hi}]")
    if n_scan < 2:
        raise ValueError("n_scan must be at least 2")
    xs = np.linspace(lo, hi, n_scan)
    brackets = []
    prev_x = prev_f = None
    for x in xs:
        x = float(x)
        fx = _checked(f, x)
        if fx == 0.0:
            continue
        if prev_f is not None and (prev_f < 0) != (fx < 0):
            brackets.append(Bracket(prev_x, x))
        prev_x, prev_f = x, fx
    return brackets


def find_root(
    f: Callable[[float], float],
    bracket: Bracket,
    tol: float = ROOT_TOL,
    *,
    ftol: float | None = None,
    maxiter: int = 200,
) -> RootResult:
    """Brent's method: inverse quadratic / secant steps safeguarded by bisection.

    Stops when the bracket is narrower than ``tol`` (relative to machine
    precision at the root) or ``|f(root)| <= ftol``; ``ftol`` defaults to
    ``tol``. Pass ``ftol=0`` to rely on the bracket width alone, which is what
    you want when ``f`` has a large scale.
    """
    if tol < 0:
        raise ValueError("tol must be non-negative")
    if ftol is None:
        ftol = tol
    a, b = bracket.lo, bracket.hi
    fa, fb = _checked(f, a), _checked(f, b)
    if fa == 0.0:
        return RootResult(a, fa, 0)
    if fb == 0.0:
        return RootResult(b, fb, 0)
    if (fa < 0) == (fb < 0):
        raise BracketError(f"f has the same sign at both ends of [{a}, {b}]")

    c, fc = a, fa
    d = e = b - a
    for it in range(1, maxiter + 1):
        if (fb < 0) == (fc < 0):
            c, fc = a, fa
            d = e = b - a
        if abs(fc) < abs(fb):
            a, b, c = b, c, b
            fa, fb, fc = fb, fc, fb
        tol1 = 2.0 * np.finfo(float).eps * abs(b) + 0.5 * tol
        m = 0.5 * (c - b)
        if abs(m) <= tol1 or abs(fb) <= ftol:
            return RootResult(b, fb, it)
        if abs(e) >= tol1 and abs(fa) > abs(fb):
            s = fb / fa
            if a == c:
                p = 2.0 * m * s
                q = 1.0 - s
            else:
                q = fa / fc
                r = fb / fc
                p = s * (2.0 * m * q * (q - r) - (b - a) * (r - 1.0))
                q = (q - 1.0) * (r - 1.0) * (s - 1.0)
            if p > 0:
                q = -q
            else:
                p = -p
            if 2.0 * p < min(3.0 * m * q - abs(tol1 * q), abs(e * q)):
                e, d = d, p / q
            else:
                d = e = m
        else:
            d = e = m
        a, fa = b, fb
        b += d if abs(d) > tol1 else math.copysign(tol1, m)
        fb = _checked(f, b)
    raise ConvergenceError(f"root not converged after {maxiter} iterations near x={b!r}")


def _gauss(f, a, b):
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    total = 0.0
    for node, weight in zip(_GL_NODES, _GL_WEIGHTS):
        total += weight * _checked(f, mid + half * node)
    return half * total


def integrate(f: Callable[[float], float], a: float, b: float, tol: float = QUAD_TOL) -> float:
    """Adaptive Gauss-Legendre quadrature with interval halving.

    Each panel is accepted once the 7-point rule on the whole panel and the
    sum over its two halves agree to within the panel's share of ``tol``.
    """
    if a > b:
        raise ValueError(f"integration requires a <= b, got [{a}, {b}]")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if a == b:
        return 0.0
    total = 0.0
    stack = [(a, b, _gauss(f, a, b), tol, 0)]
    while stack:
        lo, hi, whole, panel_tol, depth = stack.pop()
        mid = 0.5 * (lo + hi)
        left, right = _gauss(f, lo, mid), _gauss(f, mid, hi)
        if abs(left + right - whole) <= panel_tol:
            total += left + right
        elif depth >= _MAX_DEPTH:
            raise ConvergenceError(f"quadrature did not converge on [{lo}, {hi}]")
        else:
            stack.append((mid, hi, right, 0.5 * panel_tol, depth + 1))
            stack.append((lo, mid, left, 0.5 * panel_tol, depth + 1))
    return total
