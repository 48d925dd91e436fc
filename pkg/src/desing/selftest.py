"""Built-in regression fixtures for the published worked examples.

Every fixture returns True/False; run_selftest evaluates all of them and
the CLI prints one line per fixture.  These are the same checks the test
suite runs, packaged so an installed copy can verify itself.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import Poly, RatFun
from .apparent import c_relations, is_apparent_l, is_apparent_t
from .continuation import SequenceWindow, denominator_primes, extend, extend_via_desing
from .ddesing import annihilator_of_ratfuns, d_desing, jet_match, local_exponents
from .desing import desing_both, l_desing, t_desing
from .diffop import DiffOp, diff_right_divrem
from .parsing import parse_operator
from .shiftop import ShiftOp, op_right_divrem


def _z():
    return Poly.gen()


def fixtures():
    z = _z()
    F = Fraction
    L_ex1 = parse_operator("(z-1)*z*E^2-(3*z+7)*(z-3)*E+(z+2)*(z+1)")
    L_thm = ShiftOp([z * (1 + 2 * z), Poly([-1, 5, -9, 2]), (2 * z - 1) * (z - 1)])
    L_fromex2 = ShiftOp([z * (z - 1), (z - 3) * (z - 2)])
    L_exar = ShiftOp([-(z + 1) * z * (z - 2) ** 2, (z + 2) ** 2 * (z - 1) ** 2])
    L_ex5 = ShiftOp([-z, z - 2])
    L_41 = parse_operator(
        "(1+16*z)^2*E^2-(224+512*z)*E-(z+1)*(17+16*z)^2"
    )
    L_app = parse_operator("D^2 - (2/z)*D + 1 + 2/z^2", "diff")

    p_thm = Poly([-1, 5, -9, 2])
    out_thm = ShiftOp(
        [
            Poly([1]),
            F(1, 3) * Poly([7, 4]) * p_thm,
            Poly([F(11, 3), F(-43, 3), F(26, 3), F(85, 3), -18, F(8, 3)]),
            F(1, 3) * Poly([-1, 4]) * p_thm,
        ]
    )
    out_fromex2 = ShiftOp(
        [
            Poly([1]),
            F(1, 72) * Poly([108, 106, 39, 5]) * (z - 3) * (z - 2),
            0,
            0,
            F(1, 72) * Poly([-6, 5]) * (z - 3) * (z - 2) ** 2 * (z - 1),
        ]
    )
    out_exar = ShiftOp([z * (z - 2) ** 2, 0, 0, -(z + 3) * (z + 4) ** 2])
    out_41_l = ShiftOp(
        [
            F(-1, 32) * Poly([143, 112]) * (z + 1),
            -(z + 11),
            Poly([F(-81, 32), F(7, 2)]),
            Poly([1]),
        ]
    )
    witness_exar = ShiftOp(
        [
            2 * (z - 2) ** 2,
            3 * (z + 2) * (z - 1) ** 2,
            -3 * z * (z + 3) * (z + 4),
            4 * (z + 4) ** 2,
        ]
    )

    def c_ex1():
        rel = c_relations(L_ex1, -1, 5)
        if rel.columns != ((0, 0), (1, 0)):
            return False
        if len(rel.rows) != 1:
            return False
        a, b = rel.rows[0]
        return a * Fraction(-39) == b * Fraction(20)

    def c_fromex2():
        return (
            c_relations(L_fromex2, 1, 3).is_empty
            and c_relations(L_fromex2, 0, 4).is_empty
        )

    def apparent_table():
        return (
            is_apparent_t(L_fromex2, 0)
            and is_apparent_t(L_fromex2, 1)
            and not is_apparent_t(L_ex1, -1)
            and not any(is_apparent_t(L_exar, s) for s in (-1, 0, 2))
        )

    def witnesses():
        _, r1 = op_right_divrem(witness_exar, L_exar)
        _, r2 = op_right_divrem(ShiftOp([-1, 3, -3, 1]), L_ex5)
        return not r1 and not r2

    def both_ex5():
        res = desing_both(L_ex5)
        _, rem = op_right_divrem(res.output, L_ex5)
        return (
            not rem
            and res.output.trailing.to_poly().degree == 0
            and res.output.leading.to_poly().degree == 0
        )

    def section41():
        v1, _ = extend(L_41, SequenceWindow(0, [1, 0]), "right", 2)
        v2, _ = extend(L_41, SequenceWindow(0, [0, 1]), "right", 2)
        if v1 != [289, 736] or v2 != [224, 578]:
            return False
        rng = random.Random(41)
        for _ in range(20):
            a, b = rng.randint(-50, 50), rng.randint(-50, 50)
            vals, events = extend_via_desing(
                L_41, SequenceWindow(0, [a, b]), "right", 200
            )
            if len(vals) != 200:
                return False
            if any(v.denominator != 1 for v in vals):
                return False
            if not denominator_primes(vals) <= {2}:
                return False
        return True

    def diff_appendix():
        data = local_exponents(L_app, 0)
        if data.exponent_list() != [Fraction(1), Fraction(2)]:
            return False
        l1 = annihilator_of_ratfuns([RatFun(z ** 2 + 2, z ** 2)])
        if l1 != DiffOp([RatFun(Poly([4]), z ** 3 + 2 * z), 1]):
            return False
        b = jet_match(l1.coeff(0), [(0, 2)])
        if b != RatFun(Poly([2, 0, -1]), z):
            return False
        res = d_desing(L_app)
        expect = DiffOp([-z, Poly([3]), -z, Poly([1])])
        if res.cleared != expect:
            return False
        _, rem = diff_right_divrem(res.cleared, L_app)
        return not rem

    return [
        ("t-desing: example after the theorem", lambda: t_desing(L_thm).output == out_thm),
        ("t-desing: complete order-4 example", lambda: t_desing(L_fromex2).output == out_fromex2),
        ("t-desing: non-apparent removal example", lambda: t_desing(L_exar).output == out_exar),
        ("l-desing: section 4.1 operator", lambda: l_desing(L_41).output == out_41_l),
        ("C-system: one relation with ratio 20:-39", c_ex1),
        ("C-system: both systems empty", c_fromex2),
        ("apparentness table", apparent_table),
        ("printed witnesses are right-divisible", witnesses),
        ("complete two-sided desingularization", both_ex5),
        ("section 4.1 continuation and integrality", section41),
        ("differential appendix", diff_appendix),
    ]


def run_selftest():
    """Returns a list of (name, passed) pairs."""
    out = []
    for name, fn in fixtures():
        try:
            ok = bool(fn())
        except Exception:
            ok = False
        out.append((name, ok))
    return out
