"""Lagrange inversion, with and without division by n.

For equations of the shape f = X * phi(f) the coefficients of f have a
closed form.  The classical statement divides by n:

    [X^n] f = (1/n) [Y^(n-1)] phi(Y)^n

which is unavailable over GF(p) whenever p divides n.  The division-free
form replaces the 1/n weight with a correction term:

    [X^n] f = [Y^(n-1)] phi^n - [Y^(n-2)] (phi' * phi^(n-1))

and works over every field.  Here phi = (1+Y)^2, whose inversion counts
plane trees by edges: [X^n] f = binom(2n, n-1) / n.
"""

import math

from implicitseries import (
    LagrangeVariant,
    PrimeField,
    RationalField,
    UniSeries,
    lagrange_coefficient,
)

N_MAX = 10

phi = UniSeries(RationalField(), [1, 2, 1] + [0] * (N_MAX - 3))  # (1+Y)^2
print("inversion problem: f = X * (1 + f)^2\n")
print(f"{'n':>3s}  {'general form':>12s}  {'1/n form':>9s}  {'binom(2n,n-1)/n':>15s}")
for n in range(1, N_MAX + 1):
    general = lagrange_coefficient(phi, n, LagrangeVariant.GENERAL).value
    weighted = lagrange_coefficient(phi, n, LagrangeVariant.CHAR0).value
    closed = math.comb(2 * n, n - 1) // n
    assert general == weighted == closed
    print(f"{n:3d}  {general:12d}  {weighted:9d}  {closed:15d}")

print("\nover GF(3) only the general form applies; it gives the same")
print("numbers reduced mod 3:")
phi3 = UniSeries(PrimeField(3), [1, 2, 1] + [0] * (N_MAX - 3))
values = [lagrange_coefficient(phi3, n).value for n in range(1, N_MAX + 1)]
print(f"  {values}")
assert values == [math.comb(2 * n, n - 1) // n % 3 for n in range(1, N_MAX + 1)]
