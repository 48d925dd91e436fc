import random
from fractions import Fraction

import pytest

from desing.algebra import (
    Poly,
    RatFun,
    cauchy_root_bound,
    content_primpart,
    dispersion,
    laurent_expand,
    poly_gcd,
    poly_gcdex,
    rational_roots,
)
from desing.errors import DesingError

z = Poly.gen()


def random_poly(rng, deg=4, zero_ok=True):
    d = rng.randint(0, deg)
    coeffs = [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(d + 1)]
    p = Poly(coeffs)
    if not zero_ok and not p:
        return random_poly(rng, deg, zero_ok)
    return p


def test_poly_basics():
    p = 3 * z**2 - z + Fraction(1, 2)
    assert p.degree == 2
    assert p(2) == 12 - 2 + Fraction(1, 2)
    assert p.shift(1)(0) == p(1)
    assert (p - p) == Poly(())
    assert str(Poly([Fraction(1, 2), -1, 1])) == "z^2 - 1*z + 1/2"


def test_poly_ring_axioms():
    rng = random.Random(11)
    for _ in range(200):
        a, b, c = (random_poly(rng) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)


def test_divmod_reconstruction():
    rng = random.Random(12)
    for _ in range(200):
        a = random_poly(rng)
        b = random_poly(rng, zero_ok=False)
        q, r = divmod(a, b)
        assert q * b + r == a
        assert not r or r.degree < b.degree


def test_gcdex():
    rng = random.Random(13)
    for _ in range(100):
        a = random_poly(rng, zero_ok=False)
        b = random_poly(rng, zero_ok=False)
        g, s, t = poly_gcdex(a, b)
        assert s * a + t * b == g
        assert g == poly_gcd(a, b)
        assert g.lc == 1
        # the canonical solution keeps s small
        if (b // g).degree > 0:
            assert not s or s.degree < (b // g).degree


def test_shift_is_a_ring_map():
    rng = random.Random(14)
    for _ in range(50):
        a, b = random_poly(rng), random_poly(rng)
        k = rng.randint(-3, 3)
        assert (a * b).shift(k) == a.shift(k) * b.shift(k)
        assert (a + b).shift(k) == a.shift(k) + b.shift(k)


def test_rational_roots():
    p = (2 * z - 1) * (z + 3) ** 2 * (z**2 + 1)
    roots, cof = rational_roots(p)
    assert roots == {Fraction(1, 2): 1, Fraction(-3): 2}
    assert cof.monic() == z**2 + 1


def test_cauchy_bound_dominates_roots():
    rng = random.Random(15)
    for _ in range(50):
        roots = [Fraction(rng.randint(-8, 8), rng.randint(1, 3)) for _ in range(rng.randint(1, 4))]
        p = Poly([1])
        for r in roots:
            p = p * (z - r)
        bound = cauchy_root_bound(p)
        assert all(abs(r) <= bound for r in roots)


def enumerate_dispersion(a, b):
    """Brute force: largest n >= 0 with a root of a equal to n plus a root of b."""
    ra, _ = rational_roots(a)
    rb, _ = rational_roots(b)
    best = 0
    for x in ra:
        for y in rb:
            n = x - y
            if n.denominator == 1 and n >= 0:
                best = max(best, int(n))
    return best


def test_dispersion_matches_enumeration():
    rng = random.Random(16)
    for _ in range(100):
        ra = [Fraction(rng.randint(-5, 5)) for _ in range(rng.randint(1, 3))]
        rb = [Fraction(rng.randint(-5, 5)) for _ in range(rng.randint(1, 3))]
        a, b = Poly([1]), Poly([1])
        for r in ra:
            a = a * (z - r)
        for r in rb:
            b = b * (z - r)
        assert dispersion(a, b) == enumerate_dispersion(a, b)


def test_ratfun_reduction_and_arithmetic():
    f = RatFun((z**2 - 1) * (z + 2), (z - 1) * (z + 2) ** 2)
    assert f == RatFun(z + 1, z + 2)
    assert f.den.lc == 1
    g = RatFun(1, z)
    assert f + g - g == f
    assert (f * g) / g == f
    assert f.shift(2) == RatFun(z + 3, z + 4)


def test_ratfun_derivative_product_rule():
    rng = random.Random(17)
    for _ in range(30):
        f = RatFun(random_poly(rng), random_poly(rng, zero_ok=False))
        g = RatFun(random_poly(rng), random_poly(rng, zero_ok=False))
        assert (f * g).derivative() == f.derivative() * g + f * g.derivative()


def test_laurent_expand():
    f = RatFun(1, z * (1 - z))
    e = laurent_expand(f, 2)
    # 1/(z(1-z)) = 1/z + 1 + z + z^2 + ...
    assert e.valuation == -1
    assert e.coefficient(-1) == 1
    assert e.coefficient(0) == 1
    assert e.coefficient(2) == 1
    assert e.has_pole
    g = laurent_expand(RatFun(z, z + 1), -1)
    assert not g.has_pole


def test_content_primpart():
    polys = [Fraction(4, 3) * (z - 1) * (z + 2), Fraction(2, 3) * (z + 2) ** 2]
    content, parts = content_primpart(polys)
    assert parts[1].lc > 0
    # both the rational content and the common factor z + 2 are gone
    g = poly_gcd(parts[0], parts[1])
    assert g.degree == 0
    ratio = RatFun(polys[0], parts[0])
    assert RatFun(polys[1], parts[1]) == ratio


def test_gcd_errors():
    with pytest.raises(DesingError):
        poly_gcd(Poly(()), Poly(()))
