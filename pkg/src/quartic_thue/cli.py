"""Command-line front end and the text grammar for scalars and polynomials.

Grammar (whitespace is insignificant)::

    expr     := [sign] term (sign term)*
    term     := coeff ['*'] [var ['^' uint]]  |  var ['^' uint]
    coeff    := '(' gaussrat ')'  |  rational ['i']  |  'i'
    gaussrat := [sign] part [sign part]       part := rational ['i'] | 'i'
    rational := uint ['/' uint]

Every subcommand prints one JSON document (sorted keys) on stdout.
Exit status: 0 success, 1 domain error, 2 internal self-check failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from .errors import DomainError, InternalError, ParseError, ThueError, TheoremViolation, ZeroInput
from .field import GaussRat
from .poly import Poly
from .quadext import QuadExtElem, QuadExtRing
from .sequences import classify_square_exponents, seq_H, seq_UV
from .solver import (
    DEFAULT_BUDGET,
    ThueInstance,
    Verdict,
    brute_search,
    certificate,
    classify_solution,
    solution_set,
)


class _Parser:
    def __init__(self, text: str, var: str | None):
        self.text = text
        self.pos = 0
        self.var = var

    def error(self, expected: str):
        found = repr(self.text[self.pos]) if self.pos < len(self.text) else "end of input"
        raise ParseError(f"expected {expected}, found {found}", self.pos, self.text)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def uint(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("unsigned integer")
        return int(self.text[start : self.pos])

    def rational(self) -> Fraction:
        num = self.uint()
        if self.take("/"):
            at = self.pos
            den = self.uint()
            if den == 0:
                raise ParseError("zero denominator", at, self.text)
            return Fraction(num, den)
        return Fraction(num)

    def part(self) -> GaussRat:
        """rational ['i'] | 'i'"""
        if self.take("i"):
            return GaussRat(0, 1)
        if not self.peek().isdigit():
            self.error("number or 'i'")
        q = self.rational()
        if self.take("i"):
            return GaussRat(0, q)
        return GaussRat(q)

    def gaussrat(self) -> GaussRat:
        ch = self.peek()
        negative = ch == "-"
        if ch in ("+", "-"):
            self.pos += 1
        first = self.part()
        value = -first if negative else first
        ch = self.peek()
        if ch in ("+", "-"):
            self.pos += 1
            second = self.part()
            if second.is_real() == first.is_real():
                raise ParseError("expected one real and one imaginary part", self.pos, self.text)
            value = value + (-second if ch == "-" else second)
        return value

    def end(self):
        if self.peek():
            self.error("end of input")

    def at_var(self) -> bool:
        return self.var is not None and self.peek() == self.var

    def power(self) -> int:
        self.pos += 1  # the variable
        if self.take("^"):
            return self.uint()
        return 1

    def term(self) -> Poly:
        ch = self.peek()
        if self.at_var():
            return Poly.monomial(1, self.power())
        if ch == "(":
            self.pos += 1
            coeff = self.gaussrat()
            if not self.take(")"):
                self.error("')'")
        elif ch == "i" or ch.isdigit():
            coeff = self.part()
        else:
            self.error(f"coefficient or {self.var!r}" if self.var else "coefficient")
        if self.take("*"):
            if not self.at_var():
                self.error(repr(self.var))
            return Poly.monomial(coeff, self.power())
        if self.at_var():
            return Poly.monomial(coeff, self.power())
        return Poly([coeff])

    def expr(self) -> Poly:
        total = Poly()
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
        while True:
            t = self.term()
            total = total + (t if sign > 0 else -t)
            ch = self.peek()
            if ch in ("+", "-"):
                sign = -1 if ch == "-" else 1
                self.pos += 1
                continue
            return total


def parse_poly(text: str, var: str = "T") -> Poly:
    """Parse e.g. ``"T^2 - (1+2i)*T + 3/4"`` into a polynomial in ``var``."""
    if len(var) != 1 or not var.isalpha() or var == "i":
        raise ValueError("variable must be a single letter other than 'i'")
    p = _Parser(text, var)
    out = p.expr()
    p.end()
    return out


def parse_gaussrat(text: str) -> GaussRat:
    """Parse ``"1+2i"``, ``"-3/4"``, ``"-i"``, optionally in parentheses."""
    p = _Parser(text, None)
    if p.take("("):
        value = p.gaussrat()
        if not p.take(")"):
            p.error("')'")
    else:
        value = p.gaussrat()
    p.end()
    return value


def parse_coeff_set(text: str) -> list[GaussRat]:
    items = [s for s in text.split(",")]
    if not all(s.strip() for s in items):
        raise ParseError("empty entry in coefficient list", 0, text)
    return [parse_gaussrat(s) for s in items]


def parse_range(text: str) -> tuple[int, int]:
    for sep in ("..", ":", ","):
        if sep in text:
            lo, hi = text.split(sep, 1)
            try:
                return int(lo), int(hi)
            except ValueError:
                break
    raise ParseError("expected a range like -3..3", 0, text)


# -- JSON rendering ----------------------------------------------------------


def _poly(f: Poly, var: str = "T") -> str:
    return f.format(var)


def _classification_json(inst: ThueInstance, x: Poly, y: Poly) -> dict[str, Any]:
    result = classify_solution(inst, x, y)
    if result.verdict is Verdict.THEOREM_VIOLATION:
        raise TheoremViolation(
            f"F({_poly(x)}, {_poly(y)}) = xi but the pair matches no solution family"
        )
    if result.verdict is Verdict.NOT_A_SOLUTION:
        return {"verdict": result.verdict.value, "residual": _poly(result.residual)}
    return {
        "verdict": result.verdict.value,
        "shape": result.family.shape.name,
        "zeta": str(result.family.zeta),
        "certificate": {"c": str(result.certificate.c), "m": result.certificate.m},
    }


def cmd_solve(args) -> dict[str, Any]:
    inst = ThueInstance(parse_poly(args.lam), parse_gaussrat(args.xi))
    sols = solution_set(inst)
    rows = []
    for fam in sols:
        x, y = fam.pair(inst.lam)
        cert = certificate(inst, x, y)
        rows.append(
            {
                "x": _poly(x),
                "y": _poly(y),
                "shape": fam.shape.name,
                "zeta": str(fam.zeta),
                "certificate": {"c": str(cert.c), "m": cert.m},
            }
        )
    out = {
        "lambda": _poly(inst.lam),
        "xi": str(inst.xi),
        "solutions": rows,
        "complete_over_field": sols.complete_over_field,
    }
    if sols.note:
        out["note"] = sols.note
    return out


def cmd_check(args) -> dict[str, Any]:
    inst = ThueInstance(parse_poly(args.lam), parse_gaussrat(args.xi))
    return _classification_json(inst, parse_poly(args.x), parse_poly(args.y))


def cmd_classify(args) -> dict[str, Any]:
    if args.n < 1:
        raise ZeroInput("N must be at least 1")
    return {"N": args.n, "square_exponents": classify_square_exponents(args.n)}


def cmd_units(args) -> dict[str, Any]:
    ring = QuadExtRing(parse_poly(args.lam))
    t = QuadExtElem(parse_poly(args.a), parse_poly(args.b))
    d = ring.unit_decompose(t)
    return {"c": str(d.c), "n": d.n, "norm": _poly(ring.norm(t))}


def cmd_search(args) -> dict[str, Any]:
    inst = ThueInstance(parse_poly(args.lam), parse_gaussrat(args.xi))
    result = brute_search(inst, args.max_deg, parse_coeff_set(args.coeff_set), budget=args.budget)
    known = set(solution_set(inst).pairs())
    rows = [{"x": _poly(x), "y": _poly(y), "in_solution_set": (x, y) in known} for x, y in result]
    return {
        "lambda": _poly(inst.lam),
        "xi": str(inst.xi),
        "solutions": rows,
        "outside_solution_set": sum(not r["in_solution_set"] for r in rows),
        "search_space": {
            "max_deg": result.max_deg,
            "coeff_set": [str(c) for c in result.coeff_set],
            "candidate_pairs": result.candidates,
            "budget": result.budget,
        },
    }


def cmd_table(args) -> dict[str, Any]:
    lo, hi = parse_range(args.n_range)
    rows = []
    for n in range(lo, hi + 1):
        u, v = seq_UV(n)
        rows.append({"n": n, "U": _poly(u, "X"), "V": _poly(v, "X"), "H": _poly(seq_H(n), "X")})
    return {"rows": rows}


class UsageError(DomainError):
    kind = "UsageError"


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="quartic-thue", description=__doc__.splitlines()[0])
    parser.add_argument("--output", choices=["json"], default="json")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    def instance_args(p, xi=True):
        p.add_argument("--lambda", dest="lam", required=True, help="parameter polynomial in T")
        if xi:
            p.add_argument("--xi", required=True, help="nonzero Gaussian rational")

    p = sub.add_parser("solve", help="list the solution families")
    instance_args(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", help="classify a candidate pair (x, y)")
    instance_args(p)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("classify", help="indices m in [-N, N] with H_m a square up to a constant")
    p.add_argument("--n", "-N", dest="n", type=int, required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("units", help="write a + b*u as c*u^n")
    instance_args(p, xi=False)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(func=cmd_units)

    p = sub.add_parser("search", help="exhaustive search over a small coefficient box")
    instance_args(p)
    p.add_argument("--max-deg", type=int, required=True)
    p.add_argument("--coeff-set", required=True, help="comma-separated, e.g. 0,1,-1,i,-i")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("table", help="U_n, V_n, H_n for a range of n (use --n-range=-3..3)")
    p.add_argument("--n-range", required=True)
    p.set_defaults(func=cmd_table)
    return parser


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


def run(argv: Sequence[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        payload, code = args.func(args), 0
    except ThueError as exc:
        payload = {"error": {"kind": exc.kind, "message": str(exc)}}
        code = 2 if isinstance(exc, InternalError) else 1
    stdout.write(dumps(payload) + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
