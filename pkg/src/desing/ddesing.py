"""Desingularization of differential operators at apparent singularities.

A point is apparent when the operator is singular there but still has a
full basis of power-series solutions.  The desingularizer multiplies the
operator on the left by L3 = D^k + sum b_i D^i, where the b_i are jets of
the coefficients of the annihilator L1 of L applied to hand-picked
polynomial solutsom candidates y_j.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .algebra import Poly, RatFun, laurent_expand, poly_gcd, poly_gcdex, rational_roots
from .diffop import DiffOp, diff_right_divrem
from .errors import DesingError, UnsupportedAlgebraicPointError
from .linalg import solve


def _as_rational(p):
    if isinstance(p, (int, Fraction)):
        return Fraction(p)
    raise UnsupportedAlgebraicPointError(
        "only rational points are supported, got %r" % (p,)
    )


def _falling(s, i):
    """s(s-1)...(s-i+1) as a polynomial in s (Poly over var 's')."""
    out = Poly.const(1, "s")
    x = Poly((0, 1), "s")
    for k in range(i):
        out = out * (x - k)
    return out


def _recentered_poly_coeffs(op: DiffOp, p):
    """Coefficients as polynomials in t = z - p after clearing denominators."""
    lcm = Poly.const(1, "z")
    for c in op.coeffs:
        g = poly_gcd(lcm, c.den)
        lcm = lcm * (c.den // g)
    return [(c * lcm).to_poly().shift(p).relabel("z") for c in op.coeffs]


@dataclass(frozen=True)
class LocalData:
    """Local information of a differential operator at one point."""

    point: Fraction
    indicial: Poly  # polynomial in the exponent variable s
    exponents: dict  # rational root -> multiplicity
    is_ordinary: bool

    def exponent_list(self):
        out = []
        for r in sorted(self.exponents):
            out.extend([r] * self.exponents[r])
        return out


def local_exponents(op: DiffOp, p) -> LocalData:
    """Indicial polynomial and its rational roots at p.

    Applying the denominator-cleared operator to t^s gives
    sum_i A_i(t) falling(s, i) t^(s-i); the coefficient of the minimal
    power of t is the indicial polynomial.
    """
    p = _as_rational(p)
    if not op:
        raise DesingError("zero operator")
    coeffs = _recentered_poly_coeffs(op, p)
    n = op.order
    # contribution of A_i t^(v+i) to the coefficient of t^(s+v)
    by_v = {}
    for i, a in enumerate(coeffs):
        fall = _falling(0, i)
        for w, cw in enumerate(a.coeffs):
            if cw:
                v = w - i
                by_v[v] = by_v.get(v, Poly((), "s")) + Poly.const(cw, "s") * fall
    vmin = min(v for v, pol in by_v.items() if pol)
    indicial = by_v[vmin]
    roots, _ = rational_roots(indicial)
    ordinary = _is_ordinary(op, p)
    return LocalData(p, indicial, roots, ordinary)


def _is_ordinary(op: DiffOp, p) -> bool:
    """Ordinary point: no coefficient of the monic form has a pole at p."""
    monic = op.monic()
    return all(c.pole_order(p) == 0 for c in monic.coeffs)


def series_solution_dim(op: DiffOp, p, order: int) -> int:
    """Dimension of the power-series solution space at p.

    Runs the coefficient recurrence symbolically over free parameters:
    a non-resonant index determines the next coefficient, a resonance
    either opens a new parameter (consistent) or imposes a relation on the
    earlier ones (obstruction).  The result counts only jets that extend
    through every resonance below the truncation order.
    """
    p = _as_rational(p)
    data = local_exponents(op, p)
    max_int_root = max(
        [int(r) for r in data.exponents if r.denominator == 1] + [0]
    )
    if order < max_int_root + op.order + 2:
        raise DesingError(
            "truncation order %d below the margin %d"
            % (order, max_int_root + op.order + 2)
        )
    coeffs = _recentered_poly_coeffs(op, p)
    n = op.order
    falls = [_falling(0, i) for i in range(n + 1)]

    def kcoef(w, j):
        # coefficient of c_j in the equation for t^w
        out = Fraction(0)
        for i, a in enumerate(coeffs):
            e = w - j + i
            if 0 <= e <= a.degree and a.coeffs[e]:
                out += Fraction(a.coeffs[e]) * falls[i](j)
        return out

    vmin = min(
        w - i
        for i, a in enumerate(coeffs)
        for w, cw in enumerate(a.coeffs)
        if cw
    )
    indicial = data.indicial
    params = 0
    cvec = []  # c_j as dict param_index -> Fraction
    alive = set()

    def sub_constraint(row):
        # impose sum row[k]*param_k = 0 on all stored vectors
        nonlocal cvec
        piv = None
        for k in sorted(row, reverse=True):
            if row[k]:
                piv = k
                break
        if piv is None:
            return True
        alive.discard(piv)
        rep = {k: -v / row[piv] for k, v in row.items() if k != piv and v}
        for vec in cvec:
            if piv in vec and vec[piv]:
                f = vec.pop(piv)
                for k, v in rep.items():
                    vec[k] = vec.get(k, Fraction(0)) + f * v
        return True

    for j in range(order):
        w = j + vmin
        rhs = {}
        for jj in range(j):
            kc = kcoef(w, jj)
            if kc:
                for k, v in cvec[jj].items():
                    rhs[k] = rhs.get(k, Fraction(0)) + kc * v
        ind = indicial(Fraction(j))
        if ind:
            cvec.append({k: -v / ind for k, v in rhs.items() if v})
        else:
            sub_constraint(rhs)
            cvec.append({params: Fraction(1)})
            alive.add(params)
            params += 1
    return len(alive)


def is_apparent_diff(op: DiffOp, p) -> bool:
    """Singular but with a full power-series solution basis (or ordinary)."""
    p = _as_rational(p)
    if _is_ordinary(op, p):
        return True
    data = local_exponents(op, p)
    n = op.order
    exps = data.exponent_list()
    if len(exps) != n:
        return False
    if len(set(exps)) != n:
        return False
    if any(e.denominator != 1 or e < 0 for e in exps):
        return False
    m = max(int(e) for e in exps)
    return series_solution_dim(op, p, m + n + 2) == n


def annihilator_of_ratfuns(fs) -> DiffOp:
    """The monic operator of order len(fs) annihilating every f in fs.

    Solves sum_i b_i f^(i) = -f^(k) for all f simultaneously; a singular
    Wronskian system means the inputs are dependent.
    """
    fs = [f if isinstance(f, RatFun) else RatFun(f) for f in fs]
    k = len(fs)
    if k == 0:
        raise DesingError("empty function list")
    ders = []
    for f in fs:
        row = [f]
        for _ in range(k):
            row.append(row[-1].derivative())
        ders.append(row)
    matrix = [[ders[r][i] for i in range(k)] for r in range(k)]
    rhs = [-ders[r][k] for r in range(k)]
    sol = solve(matrix, rhs)
    if sol is None:
        raise DesingError("functions are linearly dependent over constants")
    return DiffOp(sol + [RatFun(Poly.const(1, "z"))])


def _taylor_jet(f: RatFun, p, m) -> Poly:
    """Taylor polynomial of f at p through degree m-1, in the variable z."""
    shifted = RatFun(f.num.shift(p), f.den.shift(p))
    exp = laurent_expand(shifted, m - 1)
    if exp.valuation < 0 and any(
        exp.coefficient(k) for k in range(exp.valuation, 0)
    ):
        raise DesingError("jet of a function with a pole")
    jet = Poly([exp.coefficient(k) for k in range(m)], "z")
    return jet.shift(-p)


def jet_match(a: RatFun, points) -> RatFun:
    """The smallest function with poles only at the given points whose
    Laurent expansion at each p agrees with a through exponent M(p)-1.

    Write b = N / prod (z-p)^k(p) with k(p) = pole order of a at p; the
    congruences N = jet(a * denominator) mod (z-p)^(M(p)+k(p)) determine N
    by Chinese remaindering.
    """
    a = a if isinstance(a, RatFun) else RatFun(a)
    pts = [(_as_rational(p), int(m)) for p, m in points]
    if len({p for p, _ in pts}) != len(pts):
        raise DesingError("duplicate points")
    den = Poly.const(1, "z")
    korders = {}
    for p, m in pts:
        k = a.pole_order(p)
        korders[p] = k
        lin = Poly((-p, 1), "z")
        den = den * lin ** k
    cleared = a * den
    residue = Poly((), "z")
    modulus = Poly.const(1, "z")
    for p, m in pts:
        k = korders[p]
        lin = Poly((-p, 1), "z")
        mod_p = lin ** (m + k)
        jet = _taylor_jet(cleared, p, m + k)
        jet = jet % mod_p
        # combine: residue mod modulus, jet mod mod_p
        g, s, t = poly_gcdex(modulus, mod_p)
        if g.degree != 0:
            raise DesingError("internal: moduli not coprime")
        # modulus * s = g mod mod_p, so modulus * s / g = 1 mod mod_p
        ginv = Fraction(1) / Fraction(g.coeffs[0])
        residue = residue + modulus * (((jet - residue) * s * ginv) % mod_p)
        modulus = modulus * mod_p
        residue = residue % modulus
    return RatFun(residue, den)


@dataclass(frozen=True)
class DDesingResult:
    """Outcome of d_desing: the monic output, its cleared polynomial form,
    and the intermediate construction data."""

    output: DiffOp
    cleared: DiffOp
    apparent_points: tuple
    annihilator: DiffOp  # L1
    multiplier: DiffOp  # L3, so output = multiplier * input (monic)


def _apparent_points(op: DiffOp):
    """Rational apparent singularities of the monic form.

    Candidate points are the poles of the monic coefficients; a
    non-rational pole cannot be tested and raises.
    """
    monic = op.monic()
    den = Poly.const(1, "z")
    for c in monic.coeffs:
        g = poly_gcd(den, c.den)
        den = den * (c.den // g)
    roots, cof = rational_roots(den)
    if cof.degree > 0:
        raise UnsupportedAlgebraicPointError(
            "singular points outside the rationals: factor %s" % (cof,)
        )
    pts = []
    for p in sorted(roots):
        if not _is_ordinary(op, p) and is_apparent_diff(op, p):
            pts.append(p)
    return monic, pts


def d_desing(op: DiffOp) -> DDesingResult:
    """Remove all (rational) apparent singularities.

    For exponent sets e(p) at the apparent points, pick polynomial
    candidates y_j = prod (z-p)^(j-th missing order); the annihilator L1
    of the L(y_j) has the right solution behaviour but too many poles, so
    each coefficient is replaced by its jet at the apparent points.  The
    output is L3 * L with L3 = D^k + sum jet_i D^i.
    """
    if not op:
        raise DesingError("zero operator")
    monic, pts = _apparent_points(op)
    n = op.order
    if not pts:
        return DDesingResult(monic, monic.clear_denominators(), (), DiffOp([1]), DiffOp([1]))
    exps = {p: set(int(e) for e in local_exponents(monic, p).exponents) for p in pts}
    m = max(max(s) for s in exps.values())
    k = m + 1 - n
    if k <= 0:
        return DDesingResult(monic, monic.clear_denominators(), tuple(pts), DiffOp([1]), DiffOp([1]))
    ys = []
    for j in range(1, k + 1):
        y = Poly.const(1, "z")
        for p in pts:
            missing = sorted(set(range(m + 1)) - exps[p])
            o = missing[j - 1]
            y = y * Poly((-p, 1), "z") ** o
        ys.append(RatFun(y))
    images = [monic.apply(y) for y in ys]
    l1 = annihilator_of_ratfuns(images)
    margins = []
    for p in pts:
        maxpole = max(c.pole_order(p) for c in monic.coeffs)
        margins.append((p, maxpole + l1.order - 1))
    bs = [jet_match(l1.coeff(i), margins) for i in range(k)]
    l3 = DiffOp(bs + [RatFun(Poly.const(1, "z"))])
    out = l3 * monic
    for p in pts:
        if any(c.pole_order(p) for c in out.coeffs):
            raise DesingError(
                "internal: output still has a pole at %s" % (p,)
            )
    return DDesingResult(out, out.clear_denominators(), tuple(pts), l1, l3)


def is_completely_d_desingularizable(op: DiffOp):
    """True when the cleared d_desing output has a constant leading
    coefficient; returns (answer, witness operator)."""
    res = d_desing(op)
    ok = res.cleared.leading.to_poly().degree == 0
    return ok, (res.cleared if ok else None)
