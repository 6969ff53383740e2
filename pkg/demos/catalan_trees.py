"""Counting binary trees four different ways.

The generating function for binary trees counted by leaves satisfies
f = X + f^2: a tree is a leaf (X) or an ordered pair of subtrees (f^2).
Its coefficients are the Catalan numbers.  This demo solves that equation
with every method the library offers and checks them against the closed
form C_{n-1} = binom(2n-2, n-1) / n.
"""

import math

from implicitseries import (
    BiSeries,
    ImplicitProblem,
    RationalField,
    SolveMethod,
    solve_series,
)

ORDER = 12

field = RationalField()
p = BiSeries.from_terms(field, [(1, 0, 1), (0, 2, 1)], ORDER, 2 * ORDER - 1)
problem = ImplicitProblem(p)

print("equation: f = X + f^2 over the rationals")
print(f"solving through order {ORDER} with every method:\n")

solutions = {}
for method in SolveMethod:
    report = solve_series(problem, ORDER, method)
    solutions[method.value] = report.solution
    status = "residual zero" if report.residual_zero else "RESIDUAL NONZERO"
    print(f"  {method.value:12s} -> {status}")

closed_form = [0] + [math.comb(2 * n - 2, n - 1) // n for n in range(1, ORDER + 1)]

print(f"\n{'n':>3s}  {'closed form':>12s}  methods agree")
reference = solutions["theorem"]
for n in range(1, ORDER + 1):
    values = {name: f.coeff(n).value for name, f in solutions.items()}
    agree = len(set(values.values())) == 1
    assert values["theorem"] == closed_form[n]
    print(f"{n:3d}  {closed_form[n]:12d}  {'yes' if agree else 'NO: ' + str(values)}")

print("\nall four methods reproduce the Catalan numbers exactly")
