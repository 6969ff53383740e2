"""Command-line interface.

Six subcommands operate on polynomial expressions in X and Y (see
``expressions`` for the grammar):

* ``solve``: coefficients of the f with f = P(X, f(X)).
* ``lagrange``: coefficients of the f with f = X * phi(f).
* ``hasse``: a Hasse derivative of P, as a coefficient grid.
* ``factor``: split Q = (Y - f) * R at a simple root f.
* ``verify``: run every applicable solve method and cross-check.
* ``diag``: the main diagonal of a bivariate series.

Exit status: 0 on success, 1 for domain or validation failures (bad
field, invalid problem, literal outside the field), 2 for syntax errors
in the expression or the command line.  Plain output is one value per
line on stdout; ``--output json`` emits a single JSON line.  All output
is deterministic: equal invocations produce byte-identical results.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import ExpressionSyntaxError, ImplicitSeriesError
from .expressions import lower_expression, lower_univariate, parse_expression
from .fields import Field, PrimeField, RationalField
from .series import BiSeries, UniSeries
from .solver import (
    ImplicitProblem,
    LagrangeVariant,
    RootProblem,
    SolveMethod,
    factor_out_root,
    furstenberg_solve,
    lagrange_coefficient,
    solve_series,
)


def make_field(spec: str) -> Field:
    """Build the coefficient field for a ``--field`` value.

    ``q`` is the rationals; ``fp:<p>`` is the prime field of order p.
    """
    if spec == "q":
        return RationalField()
    if spec.startswith("fp:"):
        return PrimeField(int(spec[3:]))
    raise ValueError(f"unknown field {spec!r}: use q or fp:<prime>")


def _box_argument(text: str):
    parts = text.split("x") if "x" in text else text.split(",")
    if len(parts) != 2 or not all(p.strip().isdigit() for p in parts):
        raise argparse.ArgumentTypeError(
            f"expected a box like 4x3 (x-order by y-order), got {text!r}"
        )
    return int(parts[0]), int(parts[1])


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError("order must be >= 0")
    return value


def _emit(args, record: dict, plain_lines) -> int:
    if args.output == "json":
        print(json.dumps(record))
    else:
        for line in plain_lines:
            print(line)
    return 0


def _series_strings(f: UniSeries) -> list:
    return [str(c) for c in f._c]


def _grid_strings(p: BiSeries) -> list:
    return [[str(c) for c in row] for row in p._rows]


def _coeff_lines(strings) -> list:
    return [f"{n}: {c}" for n, c in enumerate(strings)]


def _grid_lines(rows, prefix="") -> list:
    return [
        f"{prefix}{i},{j}: {c}"
        for i, row in enumerate(rows)
        for j, c in enumerate(row)
    ]


def _solve_box(order: int):
    # wide enough in Y that every term able to influence coefficients
    # through `order` survives lowering, and the linear-Y validation
    # always has a column to inspect
    return order, max(1, 2 * order - 1)


def cmd_solve(args) -> int:
    field = make_field(args.field)
    node = parse_expression(args.poly, field)
    nx, ny = _solve_box(args.order)
    p = lower_expression(node, field, nx, ny)
    prob = ImplicitProblem(p)
    report = solve_series(prob, args.order, SolveMethod(args.method))
    coeffs = _series_strings(report.solution)
    record = {
        "method": report.method.value,
        "field": field.tag,
        "order": args.order,
        "coeffs": coeffs,
        "residual_zero": report.residual_zero,
    }
    return _emit(args, record, _coeff_lines(coeffs))


def cmd_lagrange(args) -> int:
    field = make_field(args.field)
    node = parse_expression(args.phi, field)
    n = args.order
    phi = lower_univariate(node, field, max(n - 1, 0))
    variant = LagrangeVariant(args.variant)
    values = [lagrange_coefficient(phi, k, variant) for k in range(1, n + 1)]
    f = UniSeries(field, [0] + values)
    # f solves f = P(X, f) for P = X * phi(Y); re-substitute to check
    p = BiSeries.from_terms(
        field,
        [(1, j, c) for j, c in enumerate(phi._c)],
        n,
        max(1, n),
    )
    work = p.resized(n, min(p.y_order, n))
    coeffs = _series_strings(f)
    record = {
        "method": f"lagrange-{variant.value}",
        "field": field.tag,
        "order": n,
        "coeffs": coeffs,
        "residual_zero": work.subst_y(f) == f,
    }
    return _emit(args, record, _coeff_lines(coeffs))


def cmd_hasse(args) -> int:
    field = make_field(args.field)
    node = parse_expression(args.poly, field)
    nx, ny = args.box
    p = lower_expression(node, field, nx, ny)
    h = p.hasse_derivative(args.m)
    grid = _grid_strings(h)
    record = {
        "method": "hasse",
        "field": field.tag,
        "order": [h.x_order, h.y_order],
        "coeffs": grid,
    }
    return _emit(args, record, _grid_lines(grid))


def cmd_factor(args) -> int:
    field = make_field(args.field)
    node = parse_expression(args.poly, field)
    n = args.order
    q = lower_expression(node, field, n, max(n, 1))
    rp = RootProblem(q)
    f = furstenberg_solve(rp, n)
    r = factor_out_root(rp, f)
    fs = _series_strings(f)
    rs = _grid_strings(r)
    record = {
        "method": "factor",
        "field": field.tag,
        "order": n,
        "f": fs,
        "r": rs,
    }
    lines = [f"f {n}: {c}" for n, c in enumerate(fs)]
    lines.extend(_grid_lines(rs, prefix="R "))
    return _emit(args, record, lines)


def cmd_verify(args) -> int:
    field = make_field(args.field)
    node = parse_expression(args.poly, field)
    nx, ny = _solve_box(args.order)
    p = lower_expression(node, field, nx, ny)
    prob = ImplicitProblem(p)
    methods = [SolveMethod.THEOREM, SolveMethod.FIXED_POINT, SolveMethod.FURSTENBERG]
    if not field.characteristic:
        methods.insert(1, SolveMethod.CHAR0)
    reports = [solve_series(prob, args.order, m) for m in methods]
    baseline = reports[0].solution
    agree = all(r.solution == baseline for r in reports[1:])
    residual_zero = all(r.residual_zero for r in reports)
    if not agree or not residual_zero:
        print("error: solve methods disagree or leave a residual", file=sys.stderr)
        return 1
    coeffs = _series_strings(baseline)
    names = [m.value for m in methods]
    record = {
        "method": "verify",
        "field": field.tag,
        "order": args.order,
        "methods": names,
        "agree": True,
        "residual_zero": True,
        "coeffs": coeffs,
    }
    lines = [
        "methods: " + " ".join(names),
        "agree: true",
        "residual_zero: true",
    ]
    lines.extend(_coeff_lines(coeffs))
    return _emit(args, record, lines)


def cmd_diag(args) -> int:
    field = make_field(args.field)
    node = parse_expression(args.poly, field)
    n = args.order
    p = lower_expression(node, field, n, n)
    d = p.diagonal()
    coeffs = _series_strings(d)
    record = {
        "method": "diag",
        "field": field.tag,
        "order": n,
        "coeffs": coeffs,
    }
    return _emit(args, record, _coeff_lines(coeffs))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="implicitseries",
        description="exact power-series solvers for implicit equations",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--field",
        required=True,
        help="coefficient field: q (rationals) or fp:<p> (prime field)",
    )
    common.add_argument(
        "--output",
        choices=("plain", "json"),
        default="plain",
        help="plain value lines (default) or a single JSON record",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser(
        "solve", parents=[common], help="solve f = P(X, f(X))"
    )
    p_solve.add_argument("--poly", required=True, help="P as an expression in X, Y")
    p_solve.add_argument("--order", required=True, type=_nonnegative)
    p_solve.add_argument(
        "--method",
        choices=[m.value for m in SolveMethod],
        default=SolveMethod.THEOREM.value,
    )
    p_solve.set_defaults(func=cmd_solve)

    p_lag = sub.add_parser(
        "lagrange", parents=[common], help="solve f = X * phi(f)"
    )
    p_lag.add_argument("--phi", required=True, help="phi as an expression in Y")
    p_lag.add_argument("--order", required=True, type=_nonnegative)
    p_lag.add_argument(
        "--variant",
        choices=[v.value for v in LagrangeVariant],
        default=LagrangeVariant.GENERAL.value,
    )
    p_lag.set_defaults(func=cmd_lagrange)

    p_hasse = sub.add_parser(
        "hasse", parents=[common], help="Hasse derivative of P in Y"
    )
    p_hasse.add_argument("--poly", required=True, help="P as an expression in X, Y")
    p_hasse.add_argument(
        "--box",
        required=True,
        type=_box_argument,
        help="truncation box as x-order by y-order (for example 4x3)",
    )
    p_hasse.add_argument("--m", required=True, type=_nonnegative)
    p_hasse.set_defaults(func=cmd_hasse)

    p_factor = sub.add_parser(
        "factor", parents=[common], help="split Q = (Y - f) * R at its root"
    )
    p_factor.add_argument("--poly", required=True, help="Q as an expression in X, Y")
    p_factor.add_argument("--order", required=True, type=_nonnegative)
    p_factor.set_defaults(func=cmd_factor)

    p_verify = sub.add_parser(
        "verify", parents=[common], help="cross-check every solve method"
    )
    p_verify.add_argument("--poly", required=True, help="P as an expression in X, Y")
    p_verify.add_argument("--order", required=True, type=_nonnegative)
    p_verify.set_defaults(func=cmd_verify)

    p_diag = sub.add_parser(
        "diag", parents=[common], help="main diagonal of a series"
    )
    p_diag.add_argument("--poly", required=True, help="expression in X, Y")
    p_diag.add_argument("--order", required=True, type=_nonnegative)
    p_diag.set_defaults(func=cmd_diag)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ExpressionSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ImplicitSeriesError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
