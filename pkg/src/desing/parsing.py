"""Operator expressions: parser, canonical printer, JSON serialization.

The grammar has integers, the symbols z and E (or D in the differential
ring), the operators + - * / ^ and parentheses.  Products are ring
products, so E*z parses to (z+1)*E and D*z to z*D + 1.  Division is only
by order-zero operators (rational functions in z).
"""

from __future__ import annotations

import json
from fractions import Fraction

from .algebra import Poly, RatFun
from .diffop import DiffOp
from .errors import DesingError, OperatorSyntaxError
from .shiftop import ShiftOp


def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha():
            tokens.append(("name", ch, i))
            i += 1
            continue
        if ch in "+-*/^()":
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise OperatorSyntaxError("unexpected character %r" % ch, i)
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, ring):
        self.tokens = _tokenize(text)
        self.pos = 0
        if ring == "shift":
            self.gen_name = "E"
            self.one = ShiftOp([1])
            self.z = ShiftOp([Poly.gen()])
            self.gen = ShiftOp([0, 1])
            self.make = ShiftOp
        elif ring == "diff":
            self.gen_name = "D"
            self.one = DiffOp([1])
            self.z = DiffOp([Poly.gen()])
            self.gen = DiffOp([0, 1])
            self.make = DiffOp
        else:
            raise DesingError("ring must be shift or diff")

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.take()
        if tok[0] != kind:
            raise OperatorSyntaxError(
                "expected %s, got %r" % (kind, tok[1]), tok[2]
            )
        return tok

    def parse(self):
        val = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise OperatorSyntaxError("trailing input %r" % tok[1], tok[2])
        return val

    def expr(self):
        val = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.unary()
        while self.peek()[0] in ("*", "/"):
            op, _, at = self.take()
            rhs = self.unary()
            if op == "*":
                val = val * rhs
            else:
                val = val * self._inverse(rhs, at)
        return val

    def _inverse(self, x, at):
        if not x:
            raise OperatorSyntaxError("division by zero", at)
        if x.order != 0:
            raise OperatorSyntaxError(
                "can only divide by order-0 operators", at
            )
        c = x.coeff(0)
        return self.make([RatFun(c.den, c.num)])

    def unary(self):
        if self.peek()[0] == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self):
        val = self.atom()
        if self.peek()[0] == "^":
            _, _, at = self.take()
            tok = self.take()
            if tok[0] != "int":
                raise OperatorSyntaxError("exponent must be an integer", tok[2])
            return val ** tok[1]
        return val

    def atom(self):
        tok = self.take()
        if tok[0] == "int":
            return self.one * tok[1]
        if tok[0] == "name":
            if tok[1] == "z":
                return self.z
            if tok[1] == self.gen_name:
                return self.gen
            raise OperatorSyntaxError(
                "unknown symbol %r in the %s ring"
                % (tok[1], "shift" if self.gen_name == "E" else "diff"),
                tok[2],
            )
        if tok[0] == "(":
            val = self.expr()
            self.expect(")")
            return val
        raise OperatorSyntaxError("unexpected token %r" % (tok[1],), tok[2])


def parse_operator(text, ring="shift"):
    """Parse an expression into a ShiftOp or DiffOp."""
    return _Parser(text, ring).parse()


def _ratfun_str(c: RatFun) -> str:
    if c.den == Poly.const(1, c.den.var):
        return str(c.num)
    return "(%s)/(%s)" % (c.num, c.den)


def print_operator(op, ring=None) -> str:
    """Canonical form; parsing it back gives the same operator."""
    gen = "D" if isinstance(op, DiffOp) else "E"
    if ring is not None:
        gen = "D" if ring == "diff" else "E"
    if not op:
        return "0"
    terms = []
    for i in range(op.order, -1, -1):
        c = op.coeff(i)
        if not c:
            continue
        if i == 0:
            terms.append("(%s)" % _ratfun_str(c))
            continue
        base = gen if i == 1 else "%s^%d" % (gen, i)
        if c == RatFun(Poly.const(1, "z")):
            terms.append(base)
        else:
            terms.append("(%s)*%s" % (_ratfun_str(c), base))
    return " + ".join(terms)


def operator_to_json(op) -> str:
    """Exact JSON: rationals as strings, one coefficient list per power.

    Rational-function coefficients are not representable here; callers
    clear denominators first (the CLI does so and says it did).
    """
    ring = "diff" if isinstance(op, DiffOp) else "shift"
    if not all(c.is_poly for c in op.coeffs):
        raise DesingError("JSON form needs polynomial coefficients")
    coeffs = []
    for c in op.coeffs:
        p = c.to_poly()
        coeffs.append([str(Fraction(x)) for x in p.coeffs])
    return json.dumps({"ring": ring, "coeffs": coeffs})


def operator_from_json(text):
    """Inverse of operator_to_json."""
    data = json.loads(text)
    ring = data["ring"]
    coeffs = [
        Poly([Fraction(x) for x in row], "z") for row in data["coeffs"]
    ]
    if ring == "shift":
        return ShiftOp(coeffs)
    if ring == "diff":
        return DiffOp(coeffs)
    raise DesingError("unknown ring %r" % (ring,))
