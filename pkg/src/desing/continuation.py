"""Sequence continuation driven by a difference operator.

A window of d consecutive values determines the solution sequence in both
directions, except where the recurrence would divide by zero: the trailing
coefficient blocks steps to the left, the leading one blocks steps to the
right.  Those blocks can often be crossed by driving with a desingularized
left multiple of the operator instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .desing import l_desing, t_desing
from .errors import DesingError
from .shiftop import ShiftOp


@dataclass(frozen=True)
class SequenceWindow:
    """d consecutive exact values, the first one sitting at base_index."""

    base_index: Fraction
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "base_index", Fraction(self.base_index))
        object.__setattr__(
            self, "values", tuple(Fraction(v) for v in self.values)
        )

    def __len__(self):
        return len(self.values)


def _check_window(op: ShiftOp, w: SequenceWindow):
    if not op.is_poly_form:
        raise DesingError("driving operator must have polynomial coefficients")
    if len(w) != op.order:
        raise DesingError(
            "window length %d != operator order %d" % (len(w), op.order)
        )


def _run(op, known, direction, count):
    """Iterate the recurrence over a dict index -> value.

    Steps to the right divide by the leading coefficient at the window
    start, steps to the left by the trailing coefficient at the new point.
    Stops early with a singularity_hit event when the divisor vanishes.
    """
    coeffs = op.poly_coeffs()
    d = op.order
    out, events = [], []
    top = max(known)
    bottom = min(known)
    for _ in range(count):
        if direction == "right":
            t = top + 1
            z0 = t - d
            div = coeffs[d](z0)
            if div == 0:
                events.append(("singularity_hit", t))
                break
            acc = Fraction(0)
            for i in range(d):
                c = coeffs[i](z0)
                if c:
                    acc += c * known[z0 + i]
            val = -acc / div
            top = t
        else:
            t = bottom - 1
            div = coeffs[0](t)
            if div == 0:
                events.append(("singularity_hit", t))
                break
            acc = Fraction(0)
            for i in range(1, d + 1):
                c = coeffs[i](t)
                if c:
                    acc += c * known[t + i]
            val = -acc / div
            bottom = t
        known[t] = val
        out.append(val)
        events.append(("divided_by", t, div))
    return out, events


def extend(op: ShiftOp, w: SequenceWindow, direction: str, count: int):
    """Continue the window count steps; returns (new values, events).

    On a vanishing divisor the run stops and the last event names the
    blocked index; the values computed so far are still returned.
    """
    _check_window(op, w)
    if direction not in ("left", "right"):
        raise DesingError("direction must be left or right")
    if count < 0:
        raise DesingError("count must be non-negative")
    known = {w.base_index + i: v for i, v in enumerate(w.values)}
    return _run(op, known, direction, count)


def extend_via_desing(op: ShiftOp, w: SequenceWindow, direction: str, count: int):
    """Continue across apparent singularities with a desingularized driver.

    Left runs use the t-desing output, right runs the l-desing output.  The
    wider window the driver needs is seeded by first extending with op
    itself; if op blocks already inside the seed stretch, the run reports
    that and returns what it has.
    """
    _check_window(op, w)
    if direction not in ("left", "right"):
        raise DesingError("direction must be left or right")
    if count < 0:
        raise DesingError("count must be non-negative")
    driver = (t_desing(op) if direction == "left" else l_desing(op)).output
    dd = driver.order
    d = op.order
    known = {w.base_index + i: v for i, v in enumerate(w.values)}
    out, events = [], []
    need = dd - d
    if need > 0:
        seed, ev = _run(op, known, "right", min(need, count))
        out.extend(seed)
        events.extend(ev)
        if len(seed) < min(need, count):
            events.append(("seed_blocked", "cannot widen the window with the input operator"))
            return out, events
    remaining = count - len(out)
    if remaining > 0:
        cleared = _clear_constants(driver)
        more, ev = _run(cleared, known, direction, remaining)
        out.extend(more)
        events.extend(ev)
    return out, events


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _clear_constants(op: ShiftOp) -> ShiftOp:
    """Multiply by the lcm of the rational-coefficient denominators."""
    lcm = 1
    for c in op.coeffs:
        if c.den.degree != 0:
            raise DesingError("driver has non-constant denominators")
        for x in c.num.coeffs:
            q = Fraction(x).denominator
            lcm = lcm * q // _gcd(lcm, q)
    return ShiftOp([c * Fraction(lcm) for c in op.coeffs])


def denominator_primes(values) -> set:
    """Prime factors occurring in any denominator, by trial division."""
    primes = set()
    for v in values:
        n = Fraction(v).denominator
        p = 2
        while p * p <= n:
            if n % p == 0:
                primes.add(p)
                while n % p == 0:
                    n //= p
            p += 1 if p == 2 else 2
        if n > 1:
            primes.add(n)
    return primes
