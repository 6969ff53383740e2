"""Taylor expansion around a series root, and dividing the root out.

Two structural identities behind the solvers, shown concretely on
Q = Y - X - Y^2 (whose root is the Catalan series):

1. A bivariate polynomial equals its finite Taylor-style expansion around
   Y = f(X), written with divided-power (Hasse) derivatives so that no
   factorials are inverted — the identity survives in characteristic p.
   `taylor_residual` computes the difference, which must be exactly zero.

2. If f is a root of Q, then (Y - f) divides Q exactly:
   Q = (Y - f(X)) * R(X, Y) with R a unit.  `factor_out_root` performs
   the division and refuses non-roots.
"""

from implicitseries import (
    NotARootError,
    PrimeField,
    RationalField,
    RootProblem,
    UniSeries,
    factor_out_root,
    furstenberg_solve,
    lower_expression,
    parse_expression,
    taylor_residual,
)

ORDER = 8

for field in (RationalField(), PrimeField(2)):
    q = lower_expression(
        parse_expression("Y - X - Y^2", field), field, ORDER, ORDER
    )
    problem = RootProblem(q)
    f = furstenberg_solve(problem, ORDER)
    print(f"field {field.tag}: root f = {[f.coeff(n).value for n in range(ORDER + 1)]}")

    residual = taylor_residual(q, f)
    print(f"  taylor residual around Y = f is zero: {residual.is_zero()}")

    r = factor_out_root(problem, f)
    print(f"  cofactor R(X, 0) column: {[r.coeff(i, 0).value for i in range(4)]}")
    # for this Q the cofactor has the closed form R = 1 - f - Y
    closed = [field.coerce(1)] + [(0 - f.coeff(i)).value for i in range(1, 4)]
    assert [r.coeff(i, 0).value for i in range(4)] == closed
    print(f"  matches the closed form R = 1 - f - Y: True")

print("\na wrong candidate is rejected:")
q = lower_expression(
    parse_expression("Y - X - Y^2", RationalField()), RationalField(), ORDER, ORDER
)
wrong = UniSeries(RationalField(), [0, 1] + [0] * (ORDER - 1))  # f = X is not a root
try:
    factor_out_root(RootProblem(q), wrong)
except NotARootError as exc:
    print(f"  NotARootError: {exc}")
