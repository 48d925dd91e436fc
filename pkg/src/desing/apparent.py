"""Apparentness analysis of trailing/leading singularities.

The operator is lifted by replacing z with z + eps; running its recurrence
backwards from a window of unit initial values at q = sigma + n down to a
singular point sigma yields d exact rational functions of eps.  A pole at
eps = 0 in any of them is exactly the obstruction to pole-free solution
values at sigma; the homogeneous relations among generic initial Taylor
coefficients are read off from the Laurent principal parts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Poly, RatFun, laurent_expand, rational_roots
from .errors import DesingError, UnsupportedAlgebraicPointError
from .linalg import rref
from .shiftop import ShiftOp, op_automorphism, singularity_data


def _as_rational(sigma):
    if isinstance(sigma, (int, Fraction)):
        return Fraction(sigma)
    raise UnsupportedAlgebraicPointError(
        "only rational singularities are supported, got %r" % (sigma,)
    )


@dataclass(frozen=True)
class RSet:
    """The d rational functions of eps obtained from unit initial windows.

    ``values[i]`` is the value at sigma computed from the window that is 1
    at q + i and 0 elsewhere, where q = sigma + q_offset.  By linearity the
    value for an arbitrary initial window v is sum(v[i] * values[i]).
    """

    sigma: Fraction
    q_offset: int
    values: tuple

    @property
    def pole_free(self):
        return not any(laurent_expand(v, -1).has_pole for v in self.values)


@dataclass(frozen=True)
class RelationMatrix:
    """Homogeneous relations on generic initial Taylor coefficients.

    Columns are labelled (i, j): the eps^j coefficient of the series at
    q + i.  Rows are in reduced row-echelon form; no rows means there is
    no constraint at all.
    """

    columns: tuple
    rows: tuple

    @property
    def is_empty(self):
        return not self.rows


def choose_q(op: ShiftOp, sigma) -> int:
    """Offset n such that q = sigma + n is a valid test point.

    q must lie beyond every singularity congruent to sigma and beyond the
    certified upper bound on the real parts of all singularities, so that
    windows propagate through root-free territory and a single test at q
    decides apparentness.
    """
    sigma = _as_rational(sigma)
    if not op.is_poly_form:
        raise DesingError("operator must have polynomial coefficients")
    data = singularity_data(op)
    if data.t_poly(sigma) != 0:
        raise DesingError(
            "%s is not a root of the trailing coefficient" % sigma
        )
    hits = [-1]
    for poly in (data.t_poly, data.l_poly):
        roots, _ = rational_roots(poly)
        for r in roots:
            m = r - sigma
            if m.denominator == 1 and m >= 0:
                hits.append(int(m))
    n = 1 + max(hits) if max(hits) >= 0 else 0
    if data.kappa_upper is not None:
        n = max(n, math.floor(data.kappa_upper - sigma) + 1)
    return max(n, 1)


def r_set(op: ShiftOp, sigma, n: int) -> RSet:
    """Run the lifted recurrence from unit windows at sigma + n down to sigma."""
    sigma = _as_rational(sigma)
    if n < 1:
        raise DesingError("q offset must be positive")
    if not op.is_poly_form:
        raise DesingError("operator must have polynomial coefficients")
    d = op.order
    coeffs = op.poly_coeffs()
    # vals[j] is the vector of d values at the point sigma + j,
    # one entry per unit initial window.
    width = n + d
    vals = [None] * width
    for j in range(n, width):
        vals[j] = [
            RatFun(1, var="eps") if j - n == i else RatFun(0, var="eps")
            for i in range(d)
        ]
    for j in range(n - 1, -1, -1):
        z0 = sigma + j
        lifted = [c.shift(z0).relabel("eps") for c in coeffs]
        a0 = RatFun(lifted[0])
        acc = [RatFun(0, var="eps")] * d
        for i in range(1, d + 1):
            ai = lifted[i]
            if ai:
                for u in range(d):
                    acc[u] = acc[u] + ai * vals[j + i][u]
        vals[j] = [-(v / a0) for v in acc]
    return RSet(sigma, n, tuple(vals[0]))


def c_relations(op: ShiftOp, sigma, n: int) -> RelationMatrix:
    """Relations forcing a pole-free value at sigma, from Laurent data.

    The value at sigma for a generic initial series with coefficients
    F_{i,j} equals sum_{i,j} F_{i,j} eps^j Phi_i(sigma), so every
    negative-exponent coefficient of that sum gives one homogeneous row.
    """
    rs = r_set(op, sigma, n)
    expansions = [laurent_expand(v, -1) for v in rs.values]
    pole = 0
    for e in expansions:
        if e.has_pole:
            pole = max(pole, -e.valuation)
    d = len(rs.values)
    columns = tuple((i, j) for i in range(d) for j in range(pole))
    raw = []
    for k in range(-1, -pole - 1, -1):
        row = [expansions[i].coefficient(k - j) for (i, j) in columns]
        raw.append(row)
    rows, _ = rref(raw)
    return RelationMatrix(columns, tuple(rows))


def is_apparent_t(op: ShiftOp, sigma) -> bool:
    """Whether no right-holomorphic solution has a pole at sigma.

    Equivalent formulations: the relation system at the chosen q is empty,
    or every rational function in the R-set is pole-free at eps = 0.
    """
    n = choose_q(op, sigma)
    return r_set(op, sigma, n).pole_free


def is_apparent_l(op: ShiftOp, sigma) -> bool:
    """Leading-side apparentness via the z -> -z, E -> E^{-1} automorphism."""
    sigma = _as_rational(sigma)
    data = singularity_data(op)
    if data.l_poly(sigma) != 0:
        raise DesingError("%s is not an l-singularity" % sigma)
    return is_apparent_t(op_automorphism(op), -sigma)
