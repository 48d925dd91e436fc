import random
from fractions import Fraction

import pytest

from desing.algebra import Poly
from desing.continuation import (
    SequenceWindow,
    denominator_primes,
    extend,
    extend_via_desing,
)
from desing.errors import DesingError
from desing.parsing import parse_operator
from desing.shiftop import E, ShiftOp

z = Poly.gen()
F = Fraction

L_41 = parse_operator("(1+16*z)^2*E^2-(224+512*z)*E-(z+1)*(17+16*z)^2")
L_FROMEX2 = ShiftOp([z * (z - 1), (z - 3) * (z - 2)])


def test_section_41_first_steps():
    vals, _ = extend(L_41, SequenceWindow(0, [1, 0]), "right", 2)
    assert vals == [289, 736]
    vals, _ = extend(L_41, SequenceWindow(0, [0, 1]), "right", 2)
    assert vals == [224, 578]


def test_section_41_integrality():
    rng = random.Random(7)
    for _ in range(20):
        a, b = rng.randint(-99, 99), rng.randint(-99, 99)
        w = SequenceWindow(0, [a, b])
        vals, events = extend_via_desing(L_41, w, "right", 200)
        assert len(vals) == 200
        assert all(v.denominator == 1 for v in vals)
        # cross-check: the desingularized driver computes the same sequence
        plain, _ = extend(L_41, w, "right", 200)
        assert plain == vals
        assert denominator_primes(vals) <= {2}


def test_singularity_hit_event():
    # a_d = (z-3)(z-2) vanishes on the path, so a right run from 2 blocks
    vals, events = extend(L_FROMEX2, SequenceWindow(2, [F(5)]), "right", 3)
    assert vals == []
    assert events[-1][0] == "singularity_hit"


def test_crossing_with_desingularization():
    # going left across the apparent t-singularities 0 and 1
    plain, ev = extend(L_FROMEX2, SequenceWindow(4, [F(7)]), "left", 8)
    assert ev[-1][0] == "singularity_hit"
    crossed, ev = extend_via_desing(L_FROMEX2, SequenceWindow(4, [F(7)]), "left", 8)
    assert len(crossed) == 8
    assert all(e[0] != "singularity_hit" for e in ev)
    # the first 3 values seed the wider window rightward, the remaining 5
    # walk left through 3, 2, 1, 0, -1; they agree with the plain run
    # wherever that one got through
    assert crossed[3 : 3 + len(plain)] == plain


def test_trivial_operator():
    vals, events = extend(E - 1, SequenceWindow(0, [F(3)]), "right", 5)
    assert vals == [3, 3, 3, 3, 3]
    vals, _ = extend_via_desing(E - 1, SequenceWindow(0, [F(3)]), "right", 5)
    assert vals == [3, 3, 3, 3, 3]


def test_reversibility():
    rng = random.Random(8)
    L = ShiftOp([Poly([5]), z + 10, Poly([3])])  # no roots on the path
    for _ in range(10):
        w = SequenceWindow(0, [F(rng.randint(-5, 5)), F(rng.randint(-5, 5))])
        right, _ = extend(L, w, "right", 6)  # indices 2 through 7
        w2 = SequenceWindow(5, right[3:5])
        back, _ = extend(L, w2, "left", 5)
        # back comes out in walking order, farthest index last
        assert back[-2:][::-1] == list(w.values)


def test_denominator_primes():
    assert denominator_primes([F(1, 2), F(3, 4), F(5)]) == {2}
    assert denominator_primes([1, 2, 3]) == set()
    assert denominator_primes([F(1, 30)]) == {2, 3, 5}


def test_window_validation():
    with pytest.raises(DesingError):
        extend(L_41, SequenceWindow(0, [1]), "right", 1)
    with pytest.raises(DesingError):
        extend(L_41, SequenceWindow(0, [1, 2]), "up", 1)
    with pytest.raises(DesingError):
        extend(L_41, SequenceWindow(0, [1, 2]), "left", -1)


def test_fractional_base_index():
    vals, _ = extend(E - 1, SequenceWindow(F(1, 2), [F(4)]), "right", 2)
    assert vals == [4, 4]
