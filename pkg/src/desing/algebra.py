"""Exact scalar arithmetic: univariate polynomials and rational functions over Q.

Polynomials are stored densely (tuple of Fractions indexed by exponent) and
are immutable; rational functions are reduced num/den pairs with a monic
denominator.  These are the coefficients everything else is built on, so all
operations here are exact -- no floats anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DesingError


def _frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError("expected an exact rational, got %r" % (x,))


class Poly:
    """Dense univariate polynomial over Q.

    The zero polynomial has an empty coefficient tuple and degree -1.
    Binary operations require matching variables; constants are coerced.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var="z"):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "var", var)

    def __setattr__(self, *_):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, c, var="z"):
        return cls([c], var)

    @classmethod
    def gen(cls, var="z"):
        return cls([0, 1], var)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other, self.var)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs and (
            self.var == other.var or self.degree <= 0 or other.degree <= 0
        )

    def __hash__(self):
        if self.degree <= 0:
            return hash(self.coeffs)
        return hash((self.coeffs, self.var))

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    @property
    def lc(self):
        if not self:
            raise DesingError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly.const(other, self.var)
        if isinstance(other, Poly):
            if other.var != self.var and other.degree > 0 and self.degree > 0:
                raise DesingError(
                    "variable mismatch: %s vs %s" % (self.var, other.var)
                )
            return other
        return None

    def _var_of(self, other):
        return self.var if self.degree > 0 or other.degree <= 0 else other.var

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(
            [self[i] + other[i] for i in range(n)], self._var_of(other)
        )

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self or not other:
            return Poly((), self._var_of(other))
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out, self._var_of(other))

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise DesingError("negative polynomial power")
        out = Poly.const(1, self.var)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other:
            raise DesingError("polynomial division by zero")
        q = [Fraction(0)] * max(len(self.coeffs) - len(other.coeffs) + 1, 1)
        r = list(self.coeffs)
        db, lb = other.degree, other.lc
        while len(r) - 1 >= db and any(r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) - 1 < db:
                break
            c = r[-1] / lb
            k = len(r) - 1 - db
            q[k] = c
            for i, b in enumerate(other.coeffs):
                r[k + i] -= c * b
        return Poly(q, self.var), Poly(r, self.var)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        x = _frac(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, k):
        """p(z+k) by Horner re-expansion; k is an exact rational."""
        k = _frac(k)
        lin = Poly([k, 1], self.var)
        acc = Poly((), self.var)
        for c in reversed(self.coeffs):
            acc = acc * lin + c
        return acc

    def reflect(self):
        """p(-z)."""
        return Poly(
            [-c if i % 2 else c for i, c in enumerate(self.coeffs)], self.var
        )

    def derivative(self):
        return Poly(
            [i * c for i, c in enumerate(self.coeffs)][1:], self.var
        )

    def monic(self):
        if not self:
            raise DesingError("cannot normalize the zero polynomial")
        lb = self.lc
        return Poly([c / lb for c in self.coeffs], self.var)

    @property
    def valuation(self):
        """Index of the lowest non-zero coefficient (None for zero)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def relabel(self, var):
        return Poly(self.coeffs, var)

    def __repr__(self):
        return "Poly(%r, %r)" % (list(self.coeffs), self.var)

    def __str__(self):
        if not self:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self[i]
            if not c:
                continue
            if i == 0:
                term = str(c)
            else:
                v = self.var if i == 1 else "%s^%d" % (self.var, i)
                term = v if c == 1 else "%s*%s" % (c, v)
            parts.append(term)
        return " + ".join(parts).replace("+ -", "- ")


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor."""
    if not a and not b:
        raise DesingError("gcd of two zero polynomials")
    while b:
        a, b = b, a % b
        if b:
            b = b.monic()
    return a.monic()


def poly_gcdex(a: Poly, b: Poly):
    """Extended gcd: (g, s, t) with s*a + t*b = g, g monic.

    Normalized the classical way: deg s < deg(b/g), deg t < deg(a/g).
    """
    if not a and not b:
        raise DesingError("gcd of two zero polynomials")
    var = a.var if a.degree > 0 else b.var
    one = Poly.const(1, var)
    zero = Poly((), var)
    if not b:
        return a.monic(), Poly.const(1 / a.lc, var), zero
    if not a:
        return b.monic(), zero, Poly.const(1 / b.lc, var)
    r0, r1 = a, b
    s0, s1 = one, zero
    t0, t1 = zero, one
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    lb = r0.lc
    g = r0.monic()
    s = Poly([c / lb for c in s0.coeffs], var)
    t = Poly([c / lb for c in t0.coeffs], var)
    bg = b // g
    if bg.degree > 0:
        q, s = divmod(s, bg)
        t = t + q * (a // g)
    elif s.degree >= 0 and bg:
        # b/g constant: push everything into t
        t = t + s * (a // g) * (1 / bg[0])
        s = zero
    return g, s, t


def rational_content(p: Poly) -> Fraction:
    """gcd of the coefficients as a positive rational (0 for the zero poly)."""
    num = 0
    den = 1
    for c in p.coeffs:
        if c:
            num = math.gcd(num, abs(c.numerator))
            den = den * c.denominator // math.gcd(den, c.denominator)
    if num == 0:
        return Fraction(0)
    return Fraction(num, den)


def content_primpart(p):
    """Content/primitive-part split.

    For a single Poly: removes the rational content (sign folded into the
    content so the primitive part has a positive leading coefficient).
    For a list of Polys (operator coefficients): additionally removes the
    monic polynomial gcd; the sign convention is that the highest-index
    entry ends with a positive leading rational.
    """
    if isinstance(p, Poly):
        if not p:
            raise DesingError("content of zero")
        c = rational_content(p)
        if p.lc < 0:
            c = -c
        return Poly.const(c, p.var), Poly([x / c for x in p.coeffs], p.var)
    polys = list(p)
    if not polys or not any(polys):
        raise DesingError("content of zero coefficient list")
    nz = [q for q in polys if q]
    g = nz[0]
    for q in nz[1:]:
        g = poly_gcd(g, q)
    parts = [q // g if q else q for q in polys]
    c = Fraction(0)
    for q in parts:
        if q:
            r = rational_content(q)
            c = Fraction(
                math.gcd(c.numerator, r.numerator),
                (c.denominator * r.denominator)
                // math.gcd(c.denominator, r.denominator),
            ) if c else r
    for q in reversed(parts):
        if q:
            if q.lc / c < 0:
                c = -c
            break
    parts = [Poly([x / c for x in q.coeffs], q.var) for q in parts]
    return Poly.const(c, g.var) * g, parts


def _divisors(n):
    n = abs(n)
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def rational_roots(p: Poly):
    """All rational roots with multiplicities, plus the root-free cofactor.

    Rational-root-theorem candidates, verified by exact division.
    """
    if not p:
        raise DesingError("roots of the zero polynomial")
    roots = {}
    var = p.var
    v = p.valuation
    if v:
        roots[Fraction(0)] = v
        p = Poly(p.coeffs[v:], var)
    if p.degree == 0:
        return roots, p
    c = rational_content(p)
    ip = [int(x / c) for x in p.coeffs]
    cands = set()
    for pn in _divisors(ip[0]):
        for qn in _divisors(ip[-1]):
            cands.add(Fraction(pn, qn))
            cands.add(Fraction(-pn, qn))
    for r in sorted(cands):
        while p.degree > 0 and p(r) == 0:
            roots[r] = roots.get(r, 0) + 1
            p = p // Poly([-r, 1], var)
    return roots, p


def cauchy_root_bound(p: Poly) -> Fraction:
    """1 + max|c_i|/|c_d|: every complex root has absolute value <= this."""
    if p.degree < 1:
        raise DesingError("root bound needs a non-constant polynomial")
    top = abs(p.lc)
    return 1 + max(abs(c) / top for c in p.coeffs[:-1])


def dispersion(a: Poly, b: Poly) -> int:
    """Largest n in N with (root of a) = n + (root of b); 0 if none.

    Found by the gcd-shift loop gcd(a(z), b(z-n)) over n up to the sum of
    the Cauchy root bounds.
    """
    if not a or not b:
        raise DesingError("dispersion of zero polynomial")
    if a.degree < 1 or b.degree < 1:
        return 0
    bound = math.ceil(cauchy_root_bound(a) + cauchy_root_bound(b))
    for n in range(bound, -1, -1):
        if poly_gcd(a, b.shift(-n)).degree > 0:
            return n
    return 0


class RatFun:
    """Reduced fraction of two polynomials; the denominator is monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, var=None):
        if isinstance(num, RatFun):
            if den is not None:
                raise TypeError("RatFun(num) takes no denominator")
            object.__setattr__(self, "num", num.num)
            object.__setattr__(self, "den", num.den)
            return
        if not isinstance(num, Poly):
            num = Poly.const(num, var or "z")
        if den is None:
            den = Poly.const(1, num.var)
        elif not isinstance(den, Poly):
            den = Poly.const(den, num.var)
        if not den:
            raise DesingError("zero denominator")
        if not num:
            num, den = Poly((), den.var), Poly.const(1, den.var)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
            lb = den.lc
            if lb != 1:
                num = num * (1 / lb)
                den = den.monic()
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *_):
        raise AttributeError("RatFun is immutable")

    @property
    def var(self):
        return self.num.var if self.num else self.den.var

    def __bool__(self):
        return bool(self.num)

    @property
    def is_poly(self):
        return self.den.degree == 0

    def to_poly(self):
        if not self.is_poly:
            raise DesingError("not a polynomial: %s" % self)
        return self.num

    @staticmethod
    def _coerce(x, var):
        if isinstance(x, RatFun):
            return x
        if isinstance(x, Poly):
            return RatFun(x)
        if isinstance(x, (int, Fraction)):
            return RatFun(Poly.const(x, var))
        return None

    def __eq__(self, other):
        other = RatFun._coerce(other, self.var)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = RatFun._coerce(other, self.var)
        if other is None:
            return NotImplemented
        return RatFun(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den)

    def __sub__(self, other):
        other = RatFun._coerce(other, self.var)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = RatFun._coerce(other, self.var)
        if other is None:
            return NotImplemented
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RatFun._coerce(other, self.var)
        if other is None:
            return NotImplemented
        if not other:
            raise DesingError("division by zero rational function")
        return RatFun(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = RatFun._coerce(other, self.var)
        return other / self

    def __pow__(self, k):
        if k < 0:
            return RatFun(self.den, self.num) ** (-k)
        return RatFun(self.num**k, self.den**k)

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise DesingError("evaluation at a pole")
        return self.num(x) / d

    def shift(self, k):
        return RatFun(self.num.shift(k), self.den.shift(k))

    def reflect(self):
        return RatFun(self.num.reflect(), self.den.reflect())

    def derivative(self):
        return RatFun(
            self.num.derivative() * self.den
            - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def pole_order(self, p) -> int:
        """Order of the pole at p (0 when regular there)."""
        if not self:
            return 0
        k = 0
        d = self.den
        lin = Poly([-_frac(p), 1], d.var)
        while d(p) == 0:
            d = d // lin
            k += 1
        return k

    def __repr__(self):
        if self.is_poly:
            return "RatFun(%s)" % (self.num,)
        return "RatFun((%s)/(%s))" % (self.num, self.den)


@dataclass(frozen=True)
class PrincipalPart:
    """Low-order Laurent data of a rational function at 0.

    ``coeffs[j]`` is the coefficient of exponent ``valuation + j``.  The
    zero function is represented with valuation 0 and no coefficients.
    """

    valuation: int
    coeffs: tuple

    @property
    def is_zero(self):
        return not any(self.coeffs)

    @property
    def has_pole(self):
        return self.valuation < 0 and bool(self.coeffs) and self.coeffs[0] != 0

    def coefficient(self, k):
        j = k - self.valuation
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        if j >= len(self.coeffs) and self.coeffs:
            raise DesingError("coefficient beyond the expanded range")
        return Fraction(0)


def laurent_expand(f: RatFun, upto: int) -> PrincipalPart:
    """Exact Laurent coefficients of f at 0 through exponent `upto`."""
    if not f:
        return PrincipalPart(0, ())
    vn = f.num.valuation
    vd = f.den.valuation
    val = vn - vd
    if upto < val:
        return PrincipalPart(val, ())
    k = upto - val + 1
    u = f.num.coeffs[vn:]
    w = f.den.coeffs[vd:]
    inv = [Fraction(1) / w[0]]
    for j in range(1, k):
        s = Fraction(0)
        for i in range(1, min(j, len(w) - 1) + 1):
            s += w[i] * inv[j - i]
        inv.append(-s / w[0])
    out = []
    for j in range(k):
        s = Fraction(0)
        for i in range(min(j, len(u) - 1) + 1):
            s += u[i] * inv[j - i]
        out.append(s)
    return PrincipalPart(val, tuple(out))
