"""Command line front end.

Every algorithm is reachable through a subcommand; operators are given as
expressions (or '-' to read one from stdin).  Exit codes: 0 success,
1 selftest failure, 2 parse error, 3 domain error, 4 unsupported
algebraic point.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algebra import Poly
from .apparent import c_relations, choose_q, is_apparent_t
from .continuation import SequenceWindow, denominator_primes, extend, extend_via_desing
from .ddesing import d_desing, is_apparent_diff, local_exponents
from .desing import desing_both, is_completely_desingularizable, l_desing, t_desing
from .diffop import DiffOp, diff_right_divrem
from .errors import DesingError, OperatorSyntaxError, UnsupportedAlgebraicPointError
from .parsing import operator_to_json, parse_operator, print_operator
from .selftest import run_selftest
from .shiftop import op_right_divrem, singularity_data


def _read_operator(text, ring):
    if text == "-":
        text = sys.stdin.read()
    return parse_operator(text, ring)


def _emit_operator(op, as_json):
    if as_json:
        print(operator_to_json(op))
    else:
        print(print_operator(op))


def _rat(text):
    return Fraction(text)


def _primitive_rows(rows):
    """Scale exact rows to coprime integers for display."""
    out = []
    for row in rows:
        lcm = 1
        for x in row:
            d = Fraction(x).denominator
            g = _gcd(lcm, d)
            lcm = lcm * d // g
        ints = [int(Fraction(x) * lcm) for x in row]
        g = 0
        for v in ints:
            g = _gcd(g, abs(v))
        if g > 1:
            ints = [v // g for v in ints]
        out.append(ints)
    return out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def cmd_singularities(args):
    op = _read_operator(args.operator, args.ring)
    if args.ring == "diff":
        monic = op.monic()
        pts = sorted(
            {
                p
                for c in monic.coeffs
                for p in _rational_poly_roots(c.den)
            }
        )
        if args.json:
            print(json.dumps({"singular_points": [str(p) for p in pts]}))
        else:
            print("singular points:", ", ".join(map(str, pts)) or "none")
        return 0
    data = singularity_data(op)
    t = sorted(data.rational_t_sings.items())
    l = sorted(data.rational_l_sings.items())
    if args.json:
        print(
            json.dumps(
                {
                    "t_singularities": [[str(r), m] for r, m in t],
                    "l_singularities": [[str(r), m] for r, m in l],
                    "all_rational": data.all_rational_t() and data.all_rational_l(),
                }
            )
        )
    else:
        print("t-singularities:", ", ".join("%s (x%d)" % rm for rm in t) or "none")
        print("l-singularities:", ", ".join("%s (x%d)" % rm for rm in l) or "none")
    return 0


def _rational_poly_roots(poly):
    from .algebra import rational_roots

    roots, _ = rational_roots(poly) if poly.degree > 0 else ({}, poly)
    return roots


def cmd_apparent(args):
    op = _read_operator(args.operator, args.ring)
    sigma = _rat(args.sigma)
    if args.ring == "diff":
        ok = is_apparent_diff(op, sigma)
        if args.json:
            data = local_exponents(op, sigma)
            print(
                json.dumps(
                    {
                        "apparent": ok,
                        "ordinary": data.is_ordinary,
                        "exponents": [str(e) for e in data.exponent_list()],
                    }
                )
            )
        else:
            print("apparent" if ok else "not apparent")
        return 0
    ok = is_apparent_t(op, sigma)
    if args.json:
        n = choose_q(op, sigma)
        rel = c_relations(op, sigma, n)
        print(
            json.dumps(
                {
                    "apparent": ok,
                    "q": str(sigma + n),
                    "columns": [list(c) for c in rel.columns],
                    "relations": _primitive_rows(rel.rows),
                }
            )
        )
    else:
        print("apparent" if ok else "not apparent")
    return 0


def cmd_tdesing(args):
    op = _read_operator(args.operator, "shift")
    _emit_operator(t_desing(op).output, args.json)
    return 0


def cmd_ldesing(args):
    op = _read_operator(args.operator, "shift")
    _emit_operator(l_desing(op).output, args.json)
    return 0


def cmd_desingboth(args):
    op = _read_operator(args.operator, "shift")
    _emit_operator(desing_both(op).output, args.json)
    return 0


def cmd_complete(args):
    op = _read_operator(args.operator, "shift")
    ok, witness = is_completely_desingularizable(op, args.side)
    if args.json:
        out = {"completely_desingularizable": ok, "side": args.side}
        if witness is not None:
            out["witness"] = json.loads(operator_to_json(witness))
        print(json.dumps(out))
    else:
        print("yes" if ok else "no")
        if witness is not None:
            print(print_operator(witness))
    return 0


def cmd_rdivide(args):
    a = _read_operator(args.operator, args.ring)
    b = parse_operator(args.divisor, args.ring)
    if args.ring == "diff":
        q, r = diff_right_divrem(a, b)
    else:
        q, r = op_right_divrem(a, b)
    if args.json:
        print(
            json.dumps(
                {
                    "quotient": print_operator(q, args.ring),
                    "remainder": print_operator(r, args.ring),
                    "divisible": not r,
                }
            )
        )
    else:
        print("quotient:", print_operator(q, args.ring))
        print("remainder:", print_operator(r, args.ring))
    return 0


def cmd_extend(args):
    op = _read_operator(args.operator, "shift")
    init = [Fraction(x) for x in args.init.split(",")]
    w = SequenceWindow(_rat(args.base), init)
    runner = extend_via_desing if args.desing else extend
    values, events = runner(op, w, args.dir, args.count)
    if args.json:
        print(
            json.dumps(
                {
                    "values": [str(v) for v in values],
                    "events": [[str(x) for x in e] for e in events if e[0] != "divided_by"],
                    "denominator_primes": sorted(denominator_primes(values)),
                }
            )
        )
    else:
        for v in values:
            print(v)
        for e in events:
            if e[0] != "divided_by":
                print("event:", *e)
    return 0


def cmd_ddesing(args):
    op = _read_operator(args.operator, "diff")
    res = d_desing(op)
    _emit_operator(res.cleared, args.json)
    return 0


def cmd_selftest(args):
    results = run_selftest()
    failed = 0
    for name, ok in results:
        print("%s %s" % ("PASS" if ok else "FAIL", name))
        failed += not ok
    print("%d/%d fixtures passed" % (len(results) - failed, len(results)))
    return 1 if failed else 0


def build_parser():
    ap = argparse.ArgumentParser(
        prog="desing",
        description="Desingularization of linear difference (and differential) operators.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, operator=True, ring=True):
        p = sub.add_parser(name)
        if operator:
            p.add_argument("operator", help="operator expression, or - for stdin")
        if ring:
            p.add_argument("--ring", choices=["shift", "diff"], default="shift")
        p.add_argument("--json", action="store_true")
        p.set_defaults(fn=fn)
        return p

    add("singularities", cmd_singularities)
    p = add("apparent", cmd_apparent)
    p.add_argument("--sigma", required=True, help="singular point, a rational")
    add("tdesing", cmd_tdesing, ring=False)
    add("ldesing", cmd_ldesing, ring=False)
    add("desingboth", cmd_desingboth, ring=False)
    p = add("complete", cmd_complete, ring=False)
    p.add_argument("--side", choices=["t", "l", "lt"], default="lt")
    p = add("rdivide", cmd_rdivide)
    p.add_argument("divisor", help="the right divisor operator")
    p = add("extend", cmd_extend, ring=False)
    p.add_argument("--init", required=True, help="comma separated window values")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--dir", choices=["left", "right"], default="right")
    p.add_argument("--base", default="0", help="index of the first window value")
    p.add_argument("--desing", action="store_true", help="drive with the desingularized operator")
    add("ddesing", cmd_ddesing, ring=False)
    p = sub.add_parser("selftest")
    p.set_defaults(fn=cmd_selftest)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except OperatorSyntaxError as e:
        print("parse error: %s" % e, file=sys.stderr)
        return 2
    except UnsupportedAlgebraicPointError as e:
        print("error: %s" % e, file=sys.stderr)
        return 4
    except DesingError as e:
        print("error: %s" % e, file=sys.stderr)
        return 3
    except ValueError as e:
        print("error: %s" % e, file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
