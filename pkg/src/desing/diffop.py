"""The skew ring of linear differential operators.

Operators are sums c_0 + c_1 D + ... + c_n D^n with rational-function
coefficients in z and the Leibniz rule D f = f D + f'.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .algebra import Poly, RatFun, content_primpart, poly_gcd
from .errors import DesingError


def _coeff(x):
    if isinstance(x, RatFun):
        return x
    if isinstance(x, Poly):
        return RatFun(x)
    if isinstance(x, (int, Fraction)):
        return RatFun(Poly.const(x, "z"))
    raise TypeError("bad operator coefficient: %r" % (x,))


class DiffOp:
    """Differential operator; ``coeffs[i]`` is the coefficient of D^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_coeff(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *_):
        raise AttributeError("DiffOp is immutable")

    @classmethod
    def from_dict(cls, d):
        if not d:
            return cls()
        if min(d) < 0:
            raise DesingError("negative D power")
        return cls([d.get(i, 0) for i in range(max(d) + 1)])

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
    def leading(self) -> RatFun:
        if not self:
            raise DesingError("zero operator")
        return self.coeffs[-1]

    @property
    def is_monic(self):
        return bool(self) and self.leading == RatFun(Poly.const(1, "z"))

    def monic(self) -> "DiffOp":
        lead = self.leading
        return DiffOp([c / lead for c in self.coeffs])

    @property
    def is_poly_form(self):
        return bool(self) and all(c.is_poly for c in self.coeffs)

    def poly_coeffs(self):
        return [c.to_poly() for c in self.coeffs]

    def clear_denominators(self) -> "DiffOp":
        """Smallest polynomial-coefficient multiple c(z) * self, primitive."""
        lcm = Poly.const(1, "z")
        for c in self.coeffs:
            g = poly_gcd(lcm, c.den)
            lcm = lcm * (c.den // g)
        polys = [(c * lcm).to_poly() for c in self.coeffs]
        _, polys = content_primpart(polys)
        return DiffOp(polys)

    def apply(self, f: RatFun) -> RatFun:
        """The action on a rational function: sum a_i f^(i)."""
        out = RatFun(0, var="z")
        g = _coeff(f)
        for c in self.coeffs:
            if c:
                out = out + c * g
            g = g.derivative()
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Poly, RatFun)):
            other = DiffOp([other])
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("diff", self.coeffs))

    @staticmethod
    def _coerce(x):
        if isinstance(x, DiffOp):
            return x
        if isinstance(x, (int, Fraction, Poly, RatFun)):
            return DiffOp([x])
        return None

    def __add__(self, other):
        other = DiffOp._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return DiffOp([self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return DiffOp([-c for c in self.coeffs])

    def __sub__(self, other):
        other = DiffOp._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = DiffOp._coerce(other)
        if other is None:
            return NotImplemented
        if not self or not other:
            return DiffOp()
        out = {}
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if not b:
                    continue
                # D^i b = sum_k C(i,k) b^(k) D^(i-k)
                der = b
                for k in range(i + 1):
                    term = a * der * comb(i, k)
                    key = i - k + j
                    out[key] = out.get(key, RatFun(0, var="z")) + term
                    der = der.derivative()
        top = max(out)
        return DiffOp([out.get(i, 0) for i in range(top + 1)])

    def __rmul__(self, other):
        other = DiffOp._coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def __pow__(self, k):
        if k < 0:
            raise DesingError("negative operator power")
        out = DiffOp([1])
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
                terms.append("(%r)*D^%d" % (c, i))
        return "DiffOp<%s>" % (" + ".join(terms) or "0")


#: The derivation generator.
D = DiffOp([0, 1])


def diff_mul(a: DiffOp, b: DiffOp) -> DiffOp:
    return a * b


def diff_right_divrem(a: DiffOp, b: DiffOp):
    """a = q*b + r with ord r < ord b; the top coefficient of D^k b is
    the leading coefficient of b itself, so the usual elimination works."""
    if not b:
        raise DesingError("right division by the zero operator")
    q = {}
    w = a
    while w and w.order >= b.order:
        k = w.order - b.order
        c = w.leading / b.leading
        q[k] = q.get(k, RatFun(0, var="z")) + c
        w = w - DiffOp.from_dict({k: c}) * b
    return DiffOp.from_dict(q), w
