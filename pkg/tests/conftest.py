"""Shared fixtures: the field roster and seeded random generators.

Randomized tests draw from ``random.Random`` seeded per test label, so
every run exercises identical cases; failures are reproducible from the
label alone.
"""

import random
from fractions import Fraction

from implicitseries import BiSeries, PrimeField, RationalField, UniSeries

FIELDS = [
    RationalField(),
    PrimeField(2),
    PrimeField(3),
    PrimeField(5),
    PrimeField(7),
    PrimeField(101),
]


def make_rng(label: str) -> random.Random:
    return random.Random(f"implicitseries:{label}")


def random_value(rng, field):
    """A small raw value; over the rationals, occasionally a fraction."""
    if field.characteristic:
        return rng.randrange(field.characteristic)
    if rng.random() < 0.25:
        return Fraction(rng.randint(-9, 9), rng.randint(1, 9))
    return rng.randint(-9, 9)


def random_nonzero_value(rng, field):
    if field.characteristic:
        return rng.randrange(1, field.characteristic)
    num = rng.choice([n for n in range(-9, 10) if n])
    if rng.random() < 0.25:
        return Fraction(num, rng.randint(1, 9))
    return num


def random_uniseries(rng, field, order, zero_constant=False):
    coeffs = [random_value(rng, field) for _ in range(order + 1)]
    if zero_constant:
        coeffs[0] = 0
    return UniSeries(field, coeffs)


def random_biseries(rng, field, x_order, y_order):
    rows = [
        [random_value(rng, field) for _ in range(y_order + 1)]
        for _ in range(x_order + 1)
    ]
    return BiSeries(field, rows)


def random_implicit_poly(rng, field, x_order, y_order, max_degree=4, n_terms=3):
    """A random polynomial with a00 = a01 = 0: a valid implicit-problem P.

    Term exponents stay within ``max_degree`` in each variable; a term
    that would land on a forbidden slot is pushed up in X instead.
    """
    terms = []
    for _ in range(n_terms):
        i = rng.randint(0, max_degree)
        j = rng.randint(0, max_degree)
        if (i, j) in ((0, 0), (0, 1)):
            i += 1
        terms.append((i, j, random_value(rng, field)))
    return BiSeries.from_terms(field, terms, x_order, y_order)


def random_root_poly(rng, field, x_order, y_order, max_degree=4, n_terms=3):
    """A random polynomial with q00 = 0 and q01 invertible: a RootProblem Q."""
    terms = []
    for _ in range(n_terms):
        i = rng.randint(0, max_degree)
        j = rng.randint(0, max_degree)
        if (i, j) in ((0, 0), (0, 1)):
            i += 1
        terms.append((i, j, random_value(rng, field)))
    terms.append((0, 1, random_nonzero_value(rng, field)))
    return BiSeries.from_terms(field, terms, x_order, y_order)
