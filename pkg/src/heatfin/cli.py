"""Command-line front end: ``solve``, ``sweep``, ``profile`` and ``audit-lie``.

Data goes to ``--out`` (or stdout); warnings and timings go to stderr.
Exit codes: 0 success, 1 usage error, 2 numerical failure.
"""
from __future__ import annotations

import argparse
import math
import sys
import time

import numpy as np

from . import csvio
from .ansatz import WeightChoice, fit, u_app
from .errors import HeatfinError, SingularityError
from .models import (
    ModelId,
    lie_claim_audit,
    model1_exact,
    model1_exact_derivative,
    model1_flux,
    model1_slope_at_0,
    model2_lie_claimed,
    model3_implicit_residual,
    model3_implicit_solve,
)
from .oracle import DEFAULT_STEPS, rk4_model2, rk4_model3, rk4_shoot_model2
from .series import DEFAULT_ORDER, series_eval, shoot_model1, shoot_model2

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2

SOLVE_METHODS = {
    ModelId.MODEL1: ("exact", "taylor"),
    ModelId.MODEL2: ("taylor", "rk4", "virial", "hypervirial", "lie"),
    ModelId.MODEL3: ("exact", "rk4"),
}
PROFILE_METHODS = {
    ModelId.MODEL1: ("exact", "taylor"),
    ModelId.MODEL2: ("taylor", "virial", "hypervirial", "lie", "rk4"),
    ModelId.MODEL3: ("exact", "rk4"),
}
SWEEP_HEADER = ["epsilon", "u0_taylor", "u0_virial", "u0_hypervirial", "b_virial", "b_hypervirial"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fmt(value) -> str:
    if isinstance(value, float):
        return csvio.format_value(value) or repr(value)
    return str(value)


def _report(out, **fields):
    for key, value in fields.items():
        print(f"{key}={_fmt(value)}", file=out)


def _warn(message):
    print(f"warning: {message}", file=sys.stderr)


def _positive(text):
    value = float(text)
    if not math.isfinite(value) or value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text!r}")
    return value


def _count(minimum):
    def parse(text):
        value = int(text)
        if value < minimum:
            raise argparse.ArgumentTypeError(f"expected an integer >= {minimum}, got {text!r}")
        return value

    return parse


# --- shared single-eps computations -------------------------------------------

def u0_taylor(eps, order=DEFAULT_ORDER):
    return shoot_model2(eps, order).free_param


def ansatz_fit(eps, method):
    return fit(eps, WeightChoice(method))


# --- solve --------------------------------------------------------------------

def cmd_solve(args, out=sys.stdout):
    model = ModelId.parse(args.model)
    method = args.method
    if method not in SOLVE_METHODS[model]:
        raise UsageError(
            f"method {method!r} is not available for model {model.value}; "
            f"choose from {', '.join(SOLVE_METHODS[model])}"
        )
    eps = args.eps
    start = time.perf_counter()
    fields = {"model": model.value, "method": method, "eps": eps}

    if model is ModelId.MODEL1:
        if method == "exact":
            slope = model1_slope_at_0(eps)
            flux = [
                model1_flux(model1_exact(x, eps), model1_exact_derivative(x, eps), eps)
                for x in unit_grid(args.grid)
            ]
            fields.update(slope=slope, flux=flux[0], flux_spread=max(flux) - min(flux))
        else:
            res = shoot_model1(eps, args.order)
            fields.update(
                slope=res.free_param,
                order=res.order,
                boundary_residual=res.boundary_residual,
                slope_error=res.free_param - model1_slope_at_0(eps),
            )
    elif model is ModelId.MODEL2:
        if method == "taylor":
            res = shoot_model2(eps, args.order)
            fields.update(u0=res.free_param, order=res.order, boundary_residual=res.boundary_residual)
        elif method == "rk4":
            fields.update(u0=rk4_shoot_model2(eps, args.steps), steps=args.steps)
        elif method == "lie":
            report = lie_claim_audit(eps, args.grid)
            try:
                u0 = model2_lie_claimed(0.0, eps)
            except SingularityError:
                u0 = math.nan
            fields.update(u0=u0, derivative_at_0=report.derivative_at_0, verdict=report.verdict)
        else:
            result = ansatz_fit(eps, method)
            fields.update(
                b=result.b,
                u0=result.u0_app,
                closed_residual=result.closed_residual,
                quad_residual=result.quad_residual,
            )
    else:
        if method == "exact":
            u1 = model3_implicit_solve(1.0, eps)
        else:
            u1 = float(rk4_model3(eps, args.steps).u[-1])
        fields.update(u_at_1=u1, implicit_residual=model3_implicit_residual(u1, 1.0, eps))

    _report(out, **fields)
    print(f"time: {time.perf_counter() - start:.3f} s", file=sys.stderr)
    return EXIT_OK


# --- sweep --------------------------------------------------------------------

def eps_grid(eps_min, eps_max, eps_steps):
    if eps_steps == 1:
        return [eps_min]
    # rounding keeps grid values such as 0.7 exact instead of 0.7000000000000001
    return [float(f"{v:.12g}") for v in np.linspace(eps_min, eps_max, eps_steps)]


def sweep_row(eps, order=DEFAULT_ORDER):
    row = [eps]
    cells = {}
    try:
        cells["u0_taylor"] = u0_taylor(eps, order)
    except HeatfinError as exc:
        _warn(f"eps={eps}: taylor failed: {exc}")
    for method in ("virial", "hypervirial"):
        try:
            result = ansatz_fit(eps, method)
            cells[f"u0_{method}"] = result.u0_app
            cells[f"b_{method}"] = result.b
        except HeatfinError as exc:
            _warn(f"eps={eps}: {method} fit failed: {exc}")
    row.extend(cells.get(name) for name in SWEEP_HEADER[1:])
    return row


def cmd_sweep(args, out=sys.stdout):
    if not 0 < args.eps_min <= args.eps_max:
        raise UsageError("sweep requires 0 < eps-min <= eps-max")
    start = time.perf_counter()
    rows = [sweep_row(eps, args.order) for eps in eps_grid(args.eps_min, args.eps_max, args.eps_steps)]
    _emit(args.out, SWEEP_HEADER, rows, out)
    print(f"time: {time.perf_counter() - start:.3f} s ({len(rows)} rows)", file=sys.stderr)
    return EXIT_OK


# --- profile ------------------------------------------------------------------

def _rk4_steps(grid_n):
    stride = math.ceil(DEFAULT_STEPS / (grid_n - 1))
    return stride, stride * (grid_n - 1)


def unit_grid(n):
    return [i / (n - 1) for i in range(n)]


def profile_column(model, method, eps, xs, order=DEFAULT_ORDER):
    """Values of one method on the grid ``xs``; ``None`` marks a failed cell."""
    if model is ModelId.MODEL1:
        if method == "exact":
            return [model1_exact(x, eps) for x in xs]
        series = shoot_model1(eps, order).series
        return [series_eval(series, x) for x in xs]
    if model is ModelId.MODEL3:
        if method == "exact":
            return [model3_implicit_solve(x, eps) for x in xs]
        stride, steps = _rk4_steps(len(xs))
        return rk4_model3(eps, steps).u[::stride].tolist()
    if method == "taylor":
        series = shoot_model2(eps, order).series
        return [series_eval(series, x) for x in xs]
    if method in ("virial", "hypervirial"):
        b = ansatz_fit(eps, method).b
        return [u_app(x, b) for x in xs]
    if method == "rk4":
        stride, steps = _rk4_steps(len(xs))
        return rk4_model2(rk4_shoot_model2(eps, steps), eps, steps).u[::stride].tolist()
    column = []
    for x in xs:
        try:
            column.append(model2_lie_claimed(x, eps))
        except SingularityError as exc:
            _warn(f"lie expression singular at x={x}: {exc}")
            column.append(None)
    return column


def profile_table(model, eps, grid_n, methods, order=DEFAULT_ORDER):
    xs = unit_grid(grid_n)
    columns = [profile_column(model, m, eps, xs, order) for m in methods]
    return ["x", *methods], [[x, *vals] for x, *vals in zip(xs, *columns)]


def cmd_profile(args, out=sys.stdout):
    model = ModelId.parse(args.model)
    methods = args.method.split(",") if args.method else list(PROFILE_METHODS[model])
    bad = [m for m in methods if m not in PROFILE_METHODS[model]]
    if bad or len(set(methods)) != len(methods):
        raise UsageError(
            f"invalid or repeated profile methods {bad or methods} for model {model.value}; "
            f"choose from {', '.join(PROFILE_METHODS[model])}"
        )
    start = time.perf_counter()
    header, rows = profile_table(model, args.eps, args.grid, methods, args.order)
    _emit(args.out, header, rows, out)
    print(f"time: {time.perf_counter() - start:.3f} s", file=sys.stderr)
    return EXIT_OK


# --- audit-lie ----------------------------------------------------------------

def cmd_audit_lie(args, out=sys.stdout):
    report = lie_claim_audit(args.eps, args.grid)
    _report(
        out,
        eps=report.epsilon,
        bc_at_1_residual=report.bc_at_1_residual,
        derivative_at_0=report.derivative_at_0,
        max_ode_residual=report.max_ode_residual,
        singular_at_origin=str(report.singular_at_origin).lower(),
        pole="none" if report.pole is None else report.pole,
        verdict=report.verdict,
    )
    return EXIT_OK


def _emit(path, header, rows, out):
    if path:
        csvio.write(path, header, rows)
    else:
        out.write(csvio.dumps(header, rows))


def build_parser():
    parser = _Parser(prog="heatfin", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="solve one model at one eps and report the free parameter")
    p.add_argument("--model", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--eps", type=_positive, required=True)
    p.add_argument("--method", required=True)
    p.add_argument("--order", type=_count(4), default=DEFAULT_ORDER)
    p.add_argument("--grid", type=_count(2), default=101)
    p.add_argument("--steps", type=_count(10), default=DEFAULT_STEPS)
    p.set_defaults(handler=cmd_solve)

    p = sub.add_parser("sweep", help="CSV of u(0) against eps for taylor, virial and hypervirial")
    p.add_argument("--eps-min", type=_positive, default=0.1)
    p.add_argument("--eps-max", type=_positive, default=5.0)
    p.add_argument("--eps-steps", type=_count(1), default=50)
    p.add_argument("--order", type=_count(4), default=DEFAULT_ORDER)
    p.add_argument("--out")
    p.set_defaults(handler=cmd_sweep)

    p = sub.add_parser("profile", help="CSV of u(x) on a uniform grid for several methods")
    p.add_argument("--model", type=int, choices=(1, 2, 3), default=2)
    p.add_argument("--eps", type=_positive, default=0.7)
    p.add_argument("--method", help="comma-separated method labels (default: all for the model)")
    p.add_argument("--grid", type=_count(2), default=101)
    p.add_argument("--order", type=_count(4), default=DEFAULT_ORDER)
    p.add_argument("--out")
    p.set_defaults(handler=cmd_profile)

    p = sub.add_parser("audit-lie", help="check the claimed Lie-symmetry solution of Model 2")
    p.add_argument("--eps", type=_positive, required=True)
    p.add_argument("--grid", type=_count(2), default=101)
    p.set_defaults(handler=cmd_audit_lie)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"heatfin: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HeatfinError as exc:
        print(f"heatfin: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
