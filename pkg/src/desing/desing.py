"""Desingularization of difference operators.

t_desing removes (at least) all apparent trailing singularities by building
the unique right multiple with trailing coefficient 1 and cleared low-order
E-coefficients, then combining it with the input through an extended gcd of
the two trailing coefficients.  The leading side is handled through the
z -> -z, E -> E^{-1} automorphism, and both sides at once by stacking the
two outputs with a separating power of E.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Poly, RatFun, content_primpart, dispersion, poly_gcd, poly_gcdex
from .errors import DesingError
from .shiftop import E, ShiftOp, op_automorphism, op_right_divrem


@dataclass(frozen=True)
class DesingResult:
    """Outcome of one desingularization run.

    output = cofactor * (the input), exactly; removed_factor is the factor
    that disappeared from the relevant boundary coefficient (trailing for
    the t-side, leading-shifted for the l-side).
    """

    output: ShiftOp
    cofactor: ShiftOp
    removed_factor: Poly
    dispersion_used: int


def _scalar(p) -> ShiftOp:
    return ShiftOp([p])


def t_desing(op: ShiftOp) -> DesingResult:
    """Trailing-side desingularization.

    Steps: n = dispersion(leading, trailing); divide by the trailing
    coefficient; clear the E^1..E^n coefficients by subtracting shifted
    copies of the same quotient; clear denominators and take the primitive
    part; combine with the input via an extended gcd of the old and new
    trailing coefficients.
    """
    if not op.is_poly_form:
        raise DesingError(
            "t_desing needs polynomial coefficients and a non-zero trailing one"
        )
    a0 = op.trailing.to_poly()
    ad = op.leading.to_poly()
    d = op.order
    n = dispersion(ad, a0)
    inv_a0 = RatFun(Poly.const(1, "z"), a0)
    base = [c * inv_a0 for c in op.coeffs]  # coefficients of (1/a0)*L
    l2 = {i: c for i, c in enumerate(base) if c}
    for i in range(1, n + 1):
        c = l2.get(i)
        if not c:
            continue
        for j, b in enumerate(base):
            if b:
                k = i + j
                l2[k] = l2.get(k, RatFun(0, var="z")) - c * b.shift(i)
        l2 = {k: v for k, v in l2.items() if v}
    lcm = Poly.const(1, "z")
    for c in l2.values():
        g = poly_gcd(lcm, c.den)
        lcm = lcm * (c.den // g)
    top = max(l2)
    cleared = [
        (l2[k] * lcm).to_poly() if k in l2 else Poly((), "z")
        for k in range(top + 1)
    ]
    _, parts = content_primpart(cleared)
    l3 = ShiftOp(parts)
    b0 = l3.trailing.to_poly()
    if b0.monic() != lcm:
        raise DesingError("internal: trailing of primitive part != lcm of denominators")
    g, s, t = poly_gcdex(a0, b0)
    out = _scalar(s) * op + _scalar(t) * l3
    cofactor, rem = op_right_divrem(out, op)
    if rem:
        raise DesingError("internal: output not right-divisible by the input")
    return DesingResult(out, cofactor, a0 // g, n)


def _reduce_below_top(out: ShiftOp, op: ShiftOp) -> ShiftOp:
    """Canonical representative of out modulo lower-order left multiples.

    Subtracting p(z) E^k op for k < ord(out) - ord(op) keeps the leading
    coefficient and right-divisibility; choosing p as the polynomial part
    of the cofactor's coefficient makes the cofactor strictly proper below
    its top term.  This also keeps the coefficient degrees small.
    """
    cofactor, rem = op_right_divrem(out, op)
    if rem:
        raise DesingError("internal: output not right-divisible by the input")
    parts = {}
    for k in range(cofactor.order):
        c = cofactor.coeff(k)
        if c and c.num.degree >= c.den.degree:
            parts[k] = c.num // c.den
    if not parts:
        return out
    return out - ShiftOp.from_dict(parts) * op


def l_desing(op: ShiftOp) -> DesingResult:
    """Leading-side desingularization via the ring automorphism.

    Conjugate by z -> -z, E -> E^{-1}, run t_desing, conjugate back without
    rescaling, make the leading coefficient monic, then reduce everything
    below the top cofactor term to keep the coefficient degrees minimal.
    """
    conj = op_automorphism(op)
    inner = t_desing(conj)
    raw = op_automorphism(inner.output, canonical=False)
    lead = raw.leading.to_poly()
    out = _scalar(Fraction(1) / lead.lc) * raw
    out = _reduce_below_top(out, op)
    cofactor, rem = op_right_divrem(out, op)
    if rem:
        raise DesingError("internal: output not right-divisible by the input")
    removed = inner.removed_factor.reflect()
    if removed:
        removed = removed.monic()
    return DesingResult(out, cofactor, removed, inner.dispersion_used)


def desing_both(op: ShiftOp) -> DesingResult:
    """Simultaneous t- and l-desingularization: L_t + E^m L_l.

    m >= 1 keeps the trailing coefficient of the t-part and pushes the
    l-part high enough that its leading coefficient becomes the leading
    coefficient of the sum.
    """
    rt = t_desing(op)
    rl = l_desing(op)
    m = max(1, rt.output.order - rl.output.order + 1)
    out = rt.output + (E**m) * rl.output
    cofactor, rem = op_right_divrem(out, op)
    if rem:
        raise DesingError("internal: output not right-divisible by the input")
    return DesingResult(out, cofactor, rt.removed_factor, rt.dispersion_used)


def is_completely_desingularizable(op: ShiftOp, side: str):
    """Decide whether all singularities on the given side are removable.

    Returns (answer, witness): the witness is the operator with the
    constant boundary coefficient(s) when the answer is yes.
    """
    if side == "t":
        res = t_desing(op)
        ok = res.output.trailing.to_poly().degree == 0
        return ok, (res.output if ok else None)
    if side == "l":
        res = l_desing(op)
        ok = res.output.leading.to_poly().degree == 0
        return ok, (res.output if ok else None)
    if side == "lt":
        ok_t = t_desing(op).output.trailing.to_poly().degree == 0
        ok_l = l_desing(op).output.leading.to_poly().degree == 0
        if ok_t and ok_l:
            return True, desing_both(op).output
        return False, None
    raise DesingError("side must be one of t, l, lt")
