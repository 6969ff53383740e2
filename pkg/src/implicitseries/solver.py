"""Solvers for the implicit series equation f(X) = P(X, f(X)).

Given a bivariate series P with P(0,0) = 0 and vanishing linear-Y
coefficient, the equation has exactly one solution f with f(0) = 0, in
any characteristic.  This module offers four independent routes to its
coefficients plus the surrounding machinery:

* ``solve_fixed_point``: substitution iteration, the ground truth the
  other methods are tested against.
* ``coeff_extraction``: [X^n] f as a finite sum over m of the
  coefficient of X^n Y^(m-1) in (1 - dP/dY) * P^m.  Works over any
  field; the sum stops at m = 2n - 1.
* ``coeff_extraction_char0``: the characteristic-zero variant that
  weights the m-th term by 1/m and drops the derivative factor.
* ``furstenberg_solve``: reads the root of Q(X, Y) = 0 off the main
  diagonal of a rational bivariate series, after the substitution
  X -> X*Y.

``taylor_residual`` checks the finite Taylor-style expansion of P
around a substituted series (with Hasse derivatives supplying the
divided powers), and ``factor_out_root`` splits off an exact root by
synthetic division.  ``lagrange_coefficient`` inverts f = X * phi(f).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    FieldMismatchError,
    InsufficientTruncationError,
    NonzeroConstantTermError,
    NonzeroLinearYTermError,
    NotARootError,
    PositiveCharacteristicError,
    ShapeMismatchError,
    ZeroConstantTermError,
    ZeroLinearYTermError,
)
from .fields import FieldElement
from .series import BiSeries, UniSeries


class SolveMethod(enum.Enum):
    """The implemented solution methods, named as on the command line."""

    THEOREM = "theorem"
    CHAR0 = "char0"
    FIXED_POINT = "fixpoint"
    FURSTENBERG = "furstenberg"


class LagrangeVariant(enum.Enum):
    GENERAL = "general"
    CHAR0 = "char0"


class ImplicitProblem:
    """A validated instance of f = P(X, f(X)).

    ``is_polynomial`` records that ``p`` is exact (all omitted
    coefficients are truly zero), which licenses resizing to whatever
    working box a method needs; for genuinely truncated input the
    methods instead check that the stored box is large enough.
    """

    __slots__ = ("field", "p", "is_polynomial")

    def __init__(self, p: BiSeries, *, is_polynomial: bool = True):
        if p._rows[0][0]:
            raise NonzeroConstantTermError("P(0, 0) must vanish")
        if p.y_order >= 1 and p._rows[0][1]:
            raise NonzeroLinearYTermError(
                "the coefficient of Y in P(0, Y) must vanish"
            )
        self.field = p.field
        self.p = p
        self.is_polynomial = bool(is_polynomial)

    def __repr__(self):
        return f"ImplicitProblem({self.p!r}, is_polynomial={self.is_polynomial})"


def validate_problem(p: BiSeries, *, is_polynomial: bool = True) -> ImplicitProblem:
    """Check the two problem invariants and wrap ``p``."""
    return ImplicitProblem(p, is_polynomial=is_polynomial)


class RootProblem:
    """A validated instance of Q(X, f(X)) = 0 with a simple Y-root at 0.

    Requires Q(0, 0) = 0 and an invertible linear-Y coefficient, so the
    root f with f(0) = 0 exists and is unique.
    """

    __slots__ = ("field", "q")

    def __init__(self, q: BiSeries):
        if q._rows[0][0]:
            raise NonzeroConstantTermError("Q(0, 0) must vanish")
        if q.y_order < 1 or not q._rows[0][1]:
            raise ZeroLinearYTermError(
                "the coefficient of Y in Q(0, Y) must be nonzero"
            )
        self.field = q.field
        self.q = q

    def __repr__(self):
        return f"RootProblem({self.q!r})"


@dataclass(frozen=True)
class SolveReport:
    """Outcome of ``solve_series``.

    ``m_terms_used`` lists the m-range summed by the extraction
    methods (empty for the others); ``residual_zero`` records the
    literal re-substitution check of the solution.
    """

    method: SolveMethod
    solution: UniSeries
    residual_zero: bool
    m_terms_used: tuple


def solve_fixed_point(prob: ImplicitProblem, n_max: int) -> UniSeries:
    """Solve by iterating f <- P(X, f) from f = 0.

    The iteration is a contraction for the X-adic distance: each pass
    fixes at least one further coefficient, so ``n_max + 1`` rounds
    always suffice and the loop stops as soon as two successive
    iterates agree.  This is the designated ground truth for the other
    methods.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    p = prob.p
    if not prob.is_polynomial and (p.x_order < n_max or p.y_order < n_max):
        raise InsufficientTruncationError(
            f"need P on a box of at least ({n_max}, {n_max}), "
            f"have ({p.x_order}, {p.y_order})"
        )
    work = p.resized(n_max, min(p.y_order, n_max))
    f = UniSeries.zero(prob.field, n_max)
    for _ in range(n_max + 1):
        nxt = work.subst_y(f)
        if nxt == f:
            break
        f = nxt
    return f


def _extraction_vectors(prob, n_max, extra_m=0, char_zero_form=False):
    """Shared sweep behind the extraction formulas.

    Returns ``(sums, tails, m_stop)``: ``sums[n]`` collects the terms
    with m <= 2n - 1 and ``tails[n]`` the terms with 2n - 1 < m <=
    2n - 1 + extra_m, both as raw payloads; ``m_stop`` is the largest m
    actually accumulated.  The truncation bound says every tail term
    extracts to zero; they are kept separate so callers can verify
    exactly that.  P^m is maintained as a running product and the sweep
    stops early once the power vanishes on the working box (all later
    terms are then identically zero).
    """
    field = prob.field
    p = prob.p
    sums = [0] * (n_max + 1)
    tails = [0] * (n_max + 1)
    if n_max == 0:
        return sums, tails, 0
    if not prob.is_polynomial and (p.x_order < n_max or p.y_order < 2 * n_max - 1):
        raise InsufficientTruncationError(
            f"need P on a box of at least ({n_max}, {2 * n_max - 1}), "
            f"have ({p.x_order}, {p.y_order})"
        )
    m_top = 2 * n_max - 1 + extra_m
    # columns up to m_top - 1 feed the extractions; the derivative
    # factor additionally reads P's column m_top
    work = p.resized(n_max, m_top)
    if char_zero_form:
        d_terms = None
    else:
        d = BiSeries.one(field, n_max, m_top - 1) - work.partial_y()
        d_terms = d.nonzero_terms()
    factor = work.resized(n_max, m_top - 1)
    cur = factor
    m_stop = m_top
    for m in range(1, m_top + 1):
        col = m - 1
        n_lo_sum = (m + 2) // 2  # smallest n with m <= 2n - 1
        n_lo = max(1, (m + 2 - extra_m) // 2)
        rows = cur._rows
        if char_zero_form:
            w = Fraction(1, m)
            for n in range(n_lo, n_max + 1):
                val = rows[n][col]
                if val:
                    bucket = sums if n >= n_lo_sum else tails
                    bucket[n] += w * val
        else:
            for n in range(n_lo, n_max + 1):
                s = 0
                for a, b, c in d_terms:
                    if a <= n and b <= col:
                        v = rows[n - a][col - b]
                        if v:
                            s += c * v
                if s:
                    bucket = sums if n >= n_lo_sum else tails
                    bucket[n] += s
        if m < m_top:
            cur = cur * factor
            if cur.is_zero():
                m_stop = m
                break  # all later powers vanish on the box too
    # prime fields: reduce the deferred sums; rationals: re-coerce so
    # integral Fraction results land back on plain ints
    norm = field.normalize if field.characteristic else field.coerce
    sums = [norm(v) for v in sums]
    tails = [norm(v) for v in tails]
    return sums, tails, m_stop


def coeff_extraction(prob: ImplicitProblem, n: int) -> FieldElement:
    """[X^n] f by the characteristic-free extraction formula.

    Sums, for m = 1 .. 2n - 1, the coefficient of X^n Y^(m-1) in
    (1 - dP/dY) * P^m.  Valid over any coefficient field.
    """
    if n < 1:
        raise ValueError("coefficient index must be >= 1")
    sums, _, _ = _extraction_vectors(prob, n)
    return FieldElement(prob.field, sums[n])


def coeff_extraction_char0(prob: ImplicitProblem, n: int) -> FieldElement:
    """[X^n] f as sum over m = 1 .. 2n - 1 of (1/m) [X^n Y^(m-1)] P^m.

    The 1/m weight restricts this form to characteristic zero.
    """
    if n < 1:
        raise ValueError("coefficient index must be >= 1")
    if prob.field.characteristic:
        raise PositiveCharacteristicError(
            "the 1/m-weighted form needs characteristic zero; "
            "use the derivative-corrected form instead"
        )
    sums, _, _ = _extraction_vectors(prob, n, char_zero_form=True)
    return FieldElement(prob.field, sums[n])


def extraction_tail(prob: ImplicitProblem, n_max: int, extra_m: int = 4) -> UniSeries:
    """Per-coefficient sums of the extraction terms just past the cutoff.

    Entry n collects the terms with 2n - 1 < m <= 2n - 1 + extra_m.
    The truncation bound guarantees a zero series; this is exposed so
    tests can check the bound is genuinely tight rather than trusted.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if extra_m < 0:
        raise ValueError("extra_m must be >= 0")
    _, tails, _ = _extraction_vectors(prob, n_max, extra_m=extra_m)
    return UniSeries._raw(prob.field, tails)


def lagrange_coefficient(
    phi: UniSeries, n: int, variant: LagrangeVariant = LagrangeVariant.GENERAL
) -> FieldElement:
    """[X^n] f for the inversion problem f = X * phi(f), phi(0) != 0.

    The general form extracts [Y^(n-1)] (phi^n - Y * phi' * phi^(n-1))
    and holds in any characteristic; the char-0 form is the classical
    (1/n) [Y^(n-1)] phi^n.
    """
    variant = LagrangeVariant(variant)
    if n < 1:
        raise ValueError("coefficient index must be >= 1")
    field = phi.field
    if not phi._c[0]:
        raise ZeroConstantTermError("phi(0) must be nonzero")
    if phi.order < n - 1:
        raise InsufficientTruncationError(
            f"phi is truncated at order {phi.order}, need at least {n - 1}"
        )
    w = phi.resized(max(n - 1, 0))
    if variant is LagrangeVariant.CHAR0:
        if field.characteristic:
            raise PositiveCharacteristicError(
                "the 1/n-weighted form needs characteristic zero"
            )
        val = w.pow(n)._c[n - 1]
        return FieldElement(field, field.divide(val, n))
    pw = w.pow(n - 1)
    val = (pw * w)._c[n - 1]
    if n >= 2:
        correction = (w.derivative().resized(n - 1) * pw)._c[n - 2]
        val = field.normalize(val - correction)
    return FieldElement(field, field.coerce(val))


def taylor_residual(p: BiSeries, f: UniSeries) -> BiSeries:
    """P minus its finite Taylor-style expansion around Y = f(X).

    The expansion sums (Y - f)^m times the m-th Hasse derivative of P
    evaluated at Y = f, for m = 0 .. y_order; on the truncation box the
    higher terms vanish, so the contract is a residual of exactly
    zero.  Requires f(0) = 0 and f.order >= p.x_order.
    """
    if f.field != p.field:
        raise FieldMismatchError(
            f"series over {p.field.tag} expanded around a {f.field.tag} series"
        )
    if f._c[0]:
        raise NonzeroConstantTermError("expansion point must vanish at the origin")
    nx, ny = p.x_order, p.y_order
    if f.order < nx:
        raise ShapeMismatchError(
            f"expansion point has order {f.order}, need at least {nx}"
        )
    fw = f.resized(nx)
    base = BiSeries.monomial(p.field, 1, 0, 1, nx, ny) - BiSeries.from_uniseries(
        fw, ny
    )
    residual = p
    pw = BiSeries.one(p.field, nx, ny)
    for m in range(ny + 1):
        hm = p.hasse_derivative(m)
        value = hm.subst_y(fw)
        residual = residual - pw * BiSeries.from_uniseries(value, ny)
        if m < ny:
            pw = pw * base
    return residual


def factor_out_root(rp: RootProblem, f: UniSeries) -> BiSeries:
    """Divide Q exactly by (Y - f), returning the cofactor R.

    Synthetic division in Y over truncated series in X; the remainder
    is Q(X, f(X)) and must vanish on the working precision, otherwise
    ``NotARootError`` is raised.  The result lives on the box
    ``(min(q.x_order, f.order), q.y_order - 1)`` and satisfies
    ``(Y - f) * R = Q`` there.
    """
    q = rp.q
    if f.field != q.field:
        raise FieldMismatchError(
            f"root over {f.field.tag} for a polynomial over {q.field.tag}"
        )
    if f._c[0]:
        raise NonzeroConstantTermError("the root must vanish at the origin")
    nx = min(q.x_order, f.order)
    ny = q.y_order
    qw = q.resized(nx, ny)
    fw = f.resized(nx)
    cols = [qw.column(j) for j in range(ny + 1)]
    r = [None] * ny
    r[ny - 1] = cols[ny]
    for j in range(ny - 1, 0, -1):
        r[j - 1] = cols[j] + fw * r[j]
    remainder = cols[0] + fw * r[0]
    if not remainder.is_zero():
        raise NotARootError(
            "substituting the claimed root into Q leaves a nonzero remainder"
        )
    rows = [[r[j]._c[i] for j in range(ny)] for i in range(nx + 1)]
    return BiSeries._raw(q.field, rows)


def _drop_y_factor(t: BiSeries) -> BiSeries:
    # divide by Y; every column-0 entry is structurally zero here
    assert all(row[0] == 0 for row in t._rows)
    return BiSeries._raw(t.field, [row[1:] for row in t._rows])


def furstenberg_solve(rp: RootProblem, n_max: int) -> UniSeries:
    """Solve Q(X, f) = 0 by the diagonal method.

    After the substitution X -> X*Y the root becomes readable off the
    main diagonal:  f = diag(Y * dQ/dY(XY, Y) / Q(XY, Y)), where one
    factor of Y cancels against Q(XY, Y) (whose terms all carry Y) so
    the division is by a genuine unit.  Internal boxes have y-order up
    to 2 * n_max, which keeps every diagonal entry through n_max exact.
    Requires q stored on a box of at least (n_max, n_max).
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    field = rp.field
    if n_max == 0:
        return UniSeries.zero(field, 0)
    q = rp.q
    if q.x_order < n_max or q.y_order < n_max:
        raise InsufficientTruncationError(
            f"need Q on a box of at least ({n_max}, {n_max}), "
            f"have ({q.x_order}, {q.y_order})"
        )
    qw = q.resized(n_max, n_max)
    shifted = qw.subst_x_times_y()  # box (n_max, 2 * n_max)
    unit = _drop_y_factor(shifted)  # constant term q01, invertible
    numer = qw.partial_y().subst_x_times_y()  # box (n_max, 2 * n_max - 1)
    g = numer * unit.reciprocal()
    y = BiSeries.monomial(field, 1, 0, 1, n_max, 2 * n_max - 1)
    return (y * g).diagonal().resized(n_max)


def _implicit_residual_zero(prob: ImplicitProblem, f: UniSeries) -> bool:
    work = prob.p.resized(f.order, min(prob.p.y_order, f.order))
    return work.subst_y(f) == f


def _root_residual_zero(rp: RootProblem, f: UniSeries) -> bool:
    qw = rp.q.resized(f.order, rp.q.y_order)
    return qw.subst_y(f).is_zero()


def _as_root_problem(prob: ImplicitProblem, n_max: int) -> RootProblem:
    """Rewrite f = P(X, f) as the root problem Q = P - Y = 0."""
    p = prob.p
    if not prob.is_polynomial and (p.x_order < n_max or p.y_order < n_max):
        raise InsufficientTruncationError(
            f"need P on a box of at least ({n_max}, {n_max}), "
            f"have ({p.x_order}, {p.y_order})"
        )
    ny = max(n_max, 1)
    work = p.resized(n_max, ny)
    q = work - BiSeries.monomial(prob.field, 1, 0, 1, n_max, ny)
    return RootProblem(q)


def solve_series(prob, n_max: int, method) -> SolveReport:
    """Compute f through order ``n_max`` with the chosen method.

    ``prob`` is an :class:`ImplicitProblem` (any method) or a
    :class:`RootProblem` (furstenberg only).  The report carries the
    solution, the m-range the extraction methods summed, and the
    outcome of re-substituting the solution into its equation.
    """
    if not isinstance(method, SolveMethod):
        method = SolveMethod(method)
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if isinstance(prob, RootProblem):
        if method is not SolveMethod.FURSTENBERG:
            raise ValueError(
                "a RootProblem is solved by the furstenberg method only"
            )
        f = furstenberg_solve(prob, n_max)
        return SolveReport(method, f, _root_residual_zero(prob, f), ())
    if not isinstance(prob, ImplicitProblem):
        raise TypeError(f"expected a problem object, got {type(prob).__name__}")

    m_terms = ()
    if method is SolveMethod.FIXED_POINT:
        f = solve_fixed_point(prob, n_max)
    elif method is SolveMethod.THEOREM:
        sums, _, m_stop = _extraction_vectors(prob, n_max)
        f = UniSeries._raw(prob.field, sums)
        m_terms = tuple(range(1, m_stop + 1))
    elif method is SolveMethod.CHAR0:
        if prob.field.characteristic:
            raise PositiveCharacteristicError(
                "the char0 method needs characteristic zero"
            )
        sums, _, m_stop = _extraction_vectors(prob, n_max, char_zero_form=True)
        f = UniSeries._raw(prob.field, sums)
        m_terms = tuple(range(1, m_stop + 1))
    elif method is SolveMethod.FURSTENBERG:
        if n_max == 0:
            f = UniSeries.zero(prob.field, 0)
        else:
            f = furstenberg_solve(_as_root_problem(prob, n_max), n_max)
    else:  # pragma: no cover - enum is closed
        raise ValueError(f"unknown method {method!r}")
    return SolveReport(method, f, _implicit_residual_zero(prob, f), m_terms)
