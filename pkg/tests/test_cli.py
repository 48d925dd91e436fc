import json
import random
from fractions import Fraction

import pytest

from desing.algebra import Poly
from desing.cli import main
from desing.diffop import DiffOp
from desing.errors import OperatorSyntaxError
from desing.parsing import (
    operator_from_json,
    operator_to_json,
    parse_operator,
    print_operator,
)
from desing.shiftop import E, ShiftOp

z = Poly.gen()
F = Fraction


def test_parse_example_1():
    L = parse_operator("(z-1)*z*E^2-(3*z+7)*(z-3)*E+(z+2)*(z+1)")
    assert L.coeff(2).to_poly() == (z - 1) * z
    assert L.coeff(1).to_poly() == -(3 * z + 7) * (z - 3)
    assert L.coeff(0).to_poly() == (z + 2) * (z + 1)


def test_parse_commutator():
    assert parse_operator("E*z - z*E") == E


def test_parse_diff_appendix():
    L = parse_operator("D^2 - (2/z)*D + 1 + 2/z^2", "diff")
    assert L.order == 2
    assert L.coeff(1).den == z.monic()


def test_parse_errors_carry_positions():
    with pytest.raises(OperatorSyntaxError) as e:
        parse_operator("z + @")
    assert e.value.position == 4
    with pytest.raises(OperatorSyntaxError):
        parse_operator("E^z")
    with pytest.raises(OperatorSyntaxError):
        parse_operator("1/(E+1)")  # only order-0 divisors


def random_op(rng, ring="shift"):
    cls = ShiftOp if ring == "shift" else DiffOp
    coeffs = [
        Poly([F(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(rng.randint(1, 4))])
        for _ in range(rng.randint(1, 4))
    ]
    op = cls(coeffs)
    return op if op else random_op(rng, ring)


def test_print_parse_round_trip():
    rng = random.Random(61)
    for _ in range(200):
        ring = rng.choice(["shift", "diff"])
        op = random_op(rng, ring)
        assert parse_operator(print_operator(op), ring) == op


def test_json_round_trip():
    rng = random.Random(62)
    for _ in range(50):
        ring = rng.choice(["shift", "diff"])
        op = random_op(rng, ring)
        assert operator_from_json(operator_to_json(op)) == op


def test_cli_tdesing_matches_print(capsys):
    code = main(["tdesing", "(z-3)*(z-2)*E + z*(z-1)"])
    out = capsys.readouterr().out.strip()
    assert code == 0
    got = parse_operator(out)
    expected = ShiftOp([
        Poly([1]),
        F(1, 72) * Poly([108, 106, 39, 5]) * (z - 3) * (z - 2),
        0,
        0,
        F(1, 72) * Poly([-6, 5]) * (z - 3) * (z - 2) ** 2 * (z - 1),
    ])
    assert got == expected


def test_cli_apparent_json(capsys):
    code = main([
        "apparent", "--sigma", "-1", "--json",
        "(z-1)*z*E^2-(3*z+7)*(z-3)*E+(z+2)*(z+1)",
    ])
    data = json.loads(capsys.readouterr().out)
    assert code == 0
    assert data["apparent"] is False
    assert data["relations"] == [[20, -39]]


def test_cli_extend(capsys):
    code = main([
        "extend", "--dir", "right", "--init", "1,0", "--count", "2",
        "(1+16*z)^2*E^2-(224+512*z)*E-(z+1)*(17+16*z)^2",
    ])
    out = capsys.readouterr().out.split()
    assert code == 0
    assert out == ["289", "736"]


def test_cli_ddesing(capsys):
    code = main(["ddesing", "D^2 - (2/z)*D + 1 + 2/z^2"])
    out = capsys.readouterr().out.strip()
    assert code == 0
    assert parse_operator(out, "diff") == DiffOp([-z, Poly([3]), -z, Poly([1])])


def test_cli_rdivide(capsys):
    code = main(["rdivide", "--json", "E^3 - 3*E^2 + 3*E - 1", "(z-2)*E - z"])
    data = json.loads(capsys.readouterr().out)
    assert code == 0
    assert data["divisible"] is True
    assert data["remainder"] == "0"


def test_cli_complete(capsys):
    code = main(["complete", "--side", "lt", "(z-2)*E - z"])
    out = capsys.readouterr().out.splitlines()
    assert code == 0
    assert out[0] == "yes"
    w = parse_operator(out[1])
    assert w.trailing.to_poly().degree == 0
    assert w.leading.to_poly().degree == 0


def test_cli_singularities(capsys):
    code = main(["singularities", "--json", "(z-3)*(z-2)*E + z*(z-1)"])
    data = json.loads(capsys.readouterr().out)
    assert code == 0
    assert data["t_singularities"] == [["0", 1], ["1", 1]]
    assert data["l_singularities"] == [["3", 1], ["4", 1]]


def test_cli_exit_codes(capsys):
    assert main(["tdesing", "(z-3)*("]) == 2
    capsys.readouterr()
    assert main(["apparent", "--sigma", "5", "(z-3)*(z-2)*E + z*(z-1)"]) == 3
    capsys.readouterr()


def test_cli_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("(z-2)*E - z"))
    code = main(["tdesing", "-"])
    out = capsys.readouterr().out.strip()
    assert code == 0
    # dispersion of z - 2 against z is 2, so the output has order 3
    assert parse_operator(out).order == 3


def test_cli_selftest(capsys):
    code = main(["selftest"])
    out = capsys.readouterr().out
    assert code == 0
    assert "FAIL" not in out
    assert out.count("PASS") >= 10
