"""The skew ring of linear difference operators.

Operators are sums c_0 + c_1 E + ... + c_d E^d with rational-function
coefficients in z and the commutation rule E f(z) = f(z+1) E.  Negative
powers of E (the Laurent ring) appear only transiently, inside the
z -> -z, E -> E^{-1} automorphism; the public type always has powers >= 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    Poly,
    RatFun,
    cauchy_root_bound,
    content_primpart,
    poly_gcd,
    rational_roots,
)
from .errors import DesingError


def _coeff(x):
    if isinstance(x, RatFun):
        return x
    if isinstance(x, Poly):
        return RatFun(x)
    if isinstance(x, (int, Fraction)):
        return RatFun(Poly.const(x, "z"))
    raise TypeError("bad operator coefficient: %r" % (x,))


class ShiftOp:
    """Difference operator; ``coeffs[i]`` is the coefficient of E^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_coeff(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *_):
        raise AttributeError("ShiftOp is immutable")

    @classmethod
    def from_dict(cls, d):
        if not d:
            return cls()
        top = max(d)
        if min(d) < 0:
            raise DesingError("negative E power in a plain ShiftOp")
        return cls([d.get(i, 0) for i in range(top + 1)])

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def order(self):
        if not self.coeffs:
            raise DesingError("the zero operator has no order")
        return len(self.coeffs) - 1

    def coeff(self, i) -> RatFun:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return RatFun(0, var="z")

    @property
    def trailing(self) -> RatFun:
        return self.coeff(0)

    @property
    def leading(self) -> RatFun:
        if not self:
            raise DesingError("zero operator")
        return self.coeffs[-1]

    @property
    def is_poly_form(self):
        """Polynomial coefficients with non-zero trailing and leading ones."""
        return bool(self) and all(c.is_poly for c in self.coeffs) and bool(
            self.coeffs[0]
        )

    @property
    def is_poly_normal(self):
        """Polynomial form with no non-constant common coefficient factor."""
        if not self.is_poly_form:
            return False
        g = None
        for c in self.coeffs:
            if c:
                g = c.num if g is None else poly_gcd(g, c.num)
        return g.degree == 0

    def poly_coeffs(self):
        return [c.to_poly() for c in self.coeffs]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Poly, RatFun)):
            other = ShiftOp([other])
        if not isinstance(other, ShiftOp):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    @staticmethod
    def _coerce(x):
        if isinstance(x, ShiftOp):
            return x
        if isinstance(x, (int, Fraction, Poly, RatFun)):
            return ShiftOp([x])
        return None

    def __add__(self, other):
        other = ShiftOp._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return ShiftOp([self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return ShiftOp([-c for c in self.coeffs])

    def __sub__(self, other):
        other = ShiftOp._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = ShiftOp._coerce(other)
        if other is None:
            return NotImplemented
        if not self or not other:
            return ShiftOp()
        out = [RatFun(0, var="z")] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b.shift(i)
        return ShiftOp(out)

    def __rmul__(self, other):
        other = ShiftOp._coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def __pow__(self, k):
        if k < 0:
            raise DesingError("negative operator power")
        out = ShiftOp([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __repr__(self):
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c:
                terms.append("(%r)*E^%d" % (c, i))
        return "ShiftOp<%s>" % (" + ".join(terms) or "0")


#: The shift generator.
E = ShiftOp([0, 1])


def op_mul(a: ShiftOp, b: ShiftOp) -> ShiftOp:
    return a * b


def op_right_divrem(a: ShiftOp, b: ShiftOp):
    """a = q*b + r in the rational-coefficient ring, ord r < ord b."""
    if not b:
        raise DesingError("right division by the zero operator")
    q = {}
    w = a
    while w and w.order >= b.order:
        k = w.order - b.order
        c = w.leading / b.leading.shift(k)
        q[k] = q.get(k, RatFun(0, var="z")) + c
        w = w - ShiftOp.from_dict({k: c}) * b
    return ShiftOp.from_dict(q), w


def laurent_mul(a: dict, b: dict) -> dict:
    """Product of Laurent operators given as {E-power: RatFun}."""
    out = {}
    for i, ca in a.items():
        if not ca:
            continue
        for j, cb in b.items():
            if cb:
                out[i + j] = out.get(i + j, RatFun(0, var="z")) + ca * cb.shift(i)
    return {k: v for k, v in out.items() if v}


def laurent_automorphism(a) -> dict:
    """Image under z -> -z, E -> E^{-1}, as a Laurent operator."""
    if isinstance(a, ShiftOp):
        items = enumerate(a.coeffs)
    else:
        items = a.items()
    return {-i: _coeff(c).reflect() for i, c in items if _coeff(c)}


def op_normalize(a, remove_content=True) -> ShiftOp:
    """Left-multiply by a power of E so the trailing index is 0, clear
    denominators, and (optionally) remove content and fix the sign so the
    leading coefficient has a positive leading rational."""
    if isinstance(a, ShiftOp):
        d = {i: c for i, c in enumerate(a.coeffs) if c}
    else:
        d = {i: _coeff(c) for i, c in a.items() if _coeff(c)}
    if not d:
        raise DesingError("cannot normalize the zero operator")
    t = min(d)
    if t:
        d = {i - t: c.shift(-t) for i, c in d.items()}
    lcm = Poly.const(1, "z")
    for c in d.values():
        g = poly_gcd(lcm, c.den)
        lcm = lcm * (c.den // g)
    top = max(d)
    polys = []
    for i in range(top + 1):
        c = d.get(i)
        polys.append((c * lcm).to_poly() if c else Poly((), "z"))
    if remove_content:
        _, polys = content_primpart(polys)
    return ShiftOp(polys)


def op_automorphism(a: ShiftOp, canonical=True) -> ShiftOp:
    """Apply z -> -z, E -> E^{-1} and renormalize into E-powers >= 0.

    With canonical=True the result is content- and sign-normalized; with
    canonical=False only the trailing index is shifted back to 0, which
    preserves exact coefficient scaling (needed to reproduce printed
    desingularization outputs on the leading side).
    """
    if not a:
        raise DesingError("automorphism of the zero operator")
    return op_normalize(laurent_automorphism(a), remove_content=canonical)


@dataclass(frozen=True)
class SingularityData:
    """Trailing/leading singularity bookkeeping for one operator."""

    t_poly: Poly
    l_poly: Poly
    rational_t_sings: dict
    rational_l_sings: dict
    kappa_upper: object  # Fraction, or None when there are no singularities
    iota_lower: object

    def all_rational_t(self):
        """Whether the trailing coefficient splits over Q."""
        return sum(self.rational_t_sings.values()) == self.t_poly.degree

    def all_rational_l(self):
        return sum(self.rational_l_sings.values()) == self.l_poly.degree


def singularity_data(a: ShiftOp) -> SingularityData:
    """Singularity sets and certified real-part bounds.

    The t-singularities are the roots of the trailing coefficient, the
    l-singularities the roots of the leading coefficient shifted by -d.
    kappa_upper/iota_lower bound the real parts of all singularities: exact
    rational roots are used where the polynomials split, Cauchy bounds
    cover any non-rational cofactor.
    """
    if not a.is_poly_form:
        raise DesingError("operator must be in polynomial form")
    t_poly = a.trailing.to_poly()
    l_poly = a.leading.to_poly().shift(-a.order)
    t_roots, t_cof = rational_roots(t_poly)
    l_roots, l_cof = rational_roots(l_poly)
    highs, lows = [], []
    for r in list(t_roots) + list(l_roots):
        highs.append(r)
        lows.append(r)
    for cof in (t_cof, l_cof):
        if cof.degree > 0:
            b = cauchy_root_bound(cof)
            highs.append(b)
            lows.append(-b)
    kappa = max(highs) if highs else None
    iota = min(lows) if lows else None
    return SingularityData(t_poly, l_poly, t_roots, l_roots, kappa, iota)
