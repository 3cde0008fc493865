"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 a property check failed.
Operands written as fractions (``"(1-T)/(1-2*T)"``) are handled exactly;
coefficient lists (``"1,2,3"``) or ``"expr ; prec=N"`` are truncated
series.  ``--prec N`` forces series arithmetic at precision ``N``; the
default precision comes from ``RATWITT_PREC_DEFAULT`` (16).
"""

from __future__ import annotations

import argparse
import os
import sys

from .almkvist import (
    EndoModule,
    char_map,
    oracle_direct_sum,
    oracle_frobenius,
    oracle_tensor,
    oracle_verschiebung,
)
from .descent import base_change, equalizer_check, galois_invariants_check, tensor_split
from .fatou import strong_fatou_check
from .fixtures import FIXTURES
from .hankel import hankel_rank_field, kronecker_reconstruct, wj_member
from .monoid import FormalSum, omega
from .ratwitt import RatWitt, rw_add, rw_frobenius, rw_mul, rw_neg, rw_verschiebung
from .rings.base import RingError
from .rings.parse import looks_like_series, parse_ring, parse_series
from .wittseries import WittSeries, frobenius, ghost, verschiebung, witt_add, witt_mul, witt_neg

EXIT_OK, EXIT_USAGE, EXIT_CHECK = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def default_precision() -> int:
    raw = os.environ.get("RATWITT_PREC_DEFAULT", "16")
    try:
        prec = int(raw)
    except ValueError:
        raise UsageError(f"RATWITT_PREC_DEFAULT must be an integer, got {raw!r}") from None
    if prec < 1:
        raise UsageError("RATWITT_PREC_DEFAULT must be positive")
    return prec


def read_operand(R, text: str):
    if looks_like_series(text):
        lit = parse_series(R, text)
        return WittSeries(R, lit.coeffs)
    return RatWitt.parse(R, text)


def as_series(x, prec: int) -> WittSeries:
    if isinstance(x, RatWitt):
        return x.to_series(prec)
    return x.truncate(min(prec, x.prec))


class Output:
    def __init__(self, structured: bool):
        self.structured = structured
        self.lines: list[str] = []

    def result(self, text: str, key: str = "result"):
        self.lines.append(f"{key}={text}" if self.structured else text)

    def field(self, key: str, value):
        self.lines.append(f"{key}={value}")

    def note(self, text: str):
        self.lines.append(f"note={text}" if self.structured else f"note: {text}")


# -- subcommands --------------------------------------------------------------


def cmd_witt(args, out: Output):
    R = parse_ring(args.ring)
    ops = [read_operand(R, t) for t in args.operands]
    want = {"add": 2, "mul": 2, "neg": 1, "frob": 1, "versch": 1}[args.op]
    if len(ops) != want:
        raise UsageError(f"witt {args.op} takes {want} operand(s)")
    if args.op in ("frob", "versch") and args.N is None:
        raise UsageError(f"witt {args.op} needs --N")
    exact = args.prec is None and all(isinstance(x, RatWitt) for x in ops)
    if exact:
        try:
            res = _witt_exact(args, ops)
            out.result(res.format())
            return EXIT_OK
        except RingError:
            if R.is_domain:
                raise
            # no exact product or Frobenius off domains: fall back to series
    prec = args.prec or min([x.prec for x in ops if isinstance(x, WittSeries)] or [default_precision()])
    if args.op == "frob":
        prec *= args.N
    s = [as_series(x, prec) for x in ops]
    res = {
        "add": lambda: witt_add(*s),
        "mul": lambda: witt_mul(*s),
        "neg": lambda: witt_neg(s[0]),
        "frob": lambda: frobenius(s[0], args.N),
        "versch": lambda: verschiebung(s[0], args.N),
    }[args.op]()
    out.result(res.format())
    return EXIT_OK


def _witt_exact(args, ops):
    if args.op == "add":
        return rw_add(*ops)
    if args.op == "mul":
        return rw_mul(*ops)
    if args.op == "neg":
        return rw_neg(ops[0])
    if args.op == "frob":
        return rw_frobenius(ops[0], args.N)
    return rw_verschiebung(ops[0], args.N)


def cmd_ghost(args, out: Output):
    R = parse_ring(args.ring)
    f = as_series(read_operand(R, args.f), args.upto)
    if f.prec < args.upto:
        raise RingError(f"ghost components up to {args.upto} need precision at least {args.upto}, got {f.prec}")
    out.result(",".join(R.format(w) for w in ghost(f)))
    return EXIT_OK


def cmd_hankel(args, out: Output):
    R = parse_ring(args.ring)
    K = R if R.is_field else R.fraction_field()
    x = read_operand(R, args.input)
    if isinstance(x, RatWitt):
        kp, kq = x.reduced if x.reduced is not None else (x.P, x.Q)
        res = hankel_rank_field(RatWitt.make(K, kp, kq))
    else:
        full = x.full() if R.is_field else [R.to_fraction(c) for c in x.full()]
        res = hankel_rank_field(full, K)
    out.field("rank", res.rank)
    out.field("truncation_limited", int(res.truncation_limited))
    return EXIT_OK


def cmd_reconstruct(args, out: Output):
    R = parse_ring(args.ring)
    lit = parse_series(R, args.series)
    out.result(kronecker_reconstruct(R, [R.one, *lit.coeffs], args.bound).format())
    return EXIT_OK


def cmd_wj(args, out: Output):
    R = parse_ring(args.ring)
    x = read_operand(R, args.series)
    m = wj_member(x, args.bound)
    out.field("member", int(m.member))
    out.field("bound", m.n)
    out.field("view", m.view)
    out.field("precision", m.precision)
    if m.witness is not None:
        rows, cols = m.witness
        out.field("witness_rows", ",".join(map(str, rows)))
        out.field("witness_cols", ",".join(map(str, cols)))
    return EXIT_OK


def cmd_fatou(args, out: Output):
    A = parse_ring(args.ring)
    K = A.fraction_field()
    x = read_operand(K, args.f)
    v = strong_fatou_check(x.full() if isinstance(x, WittSeries) else x, A, args.N)
    out.lines.extend(v.lines())
    return EXIT_OK


def cmd_omega(args, out: Output):
    R = parse_ring(args.ring)
    u = FormalSum.parse(R, args.sum)
    w = omega(u)
    out.result(w.format())
    if w.is_zero() and not u.is_zero():
        out.note("Witt zero")
    return EXIT_OK


def cmd_almkvist(args, out: Output):
    R = parse_ring(args.ring)
    m1 = EndoModule.parse(R, args.matrix)
    if args.op == "char":
        out.result(char_map(m1).format())
        return EXIT_OK
    prec = args.prec or default_precision()
    c1 = char_map(m1)
    checks = []
    if args.matrix2 is not None:
        m2 = EndoModule.parse(R, args.matrix2)
        c2 = char_map(m2)
        s1, s2 = c1.to_series(prec), c2.to_series(prec)
        checks.append(("direct_sum", char_map(oracle_direct_sum(m1, m2)).to_series(prec) == witt_add(s1, s2)))
        checks.append(("tensor", char_map(oracle_tensor(m1, m2)).to_series(prec) == witt_mul(s1, s2)))
    N = args.N
    checks.append(("frobenius", char_map(oracle_frobenius(m1, N)).to_series(prec) == frobenius(c1.to_series(N * prec), N)))
    checks.append(("verschiebung", char_map(oracle_verschiebung(m1, N)).to_series(prec) == verschiebung(c1.to_series(prec), N).truncate(prec)))
    for name, ok in checks:
        out.field(name, "pass" if ok else "FAIL")
    return EXIT_OK if all(ok for _, ok in checks) else EXIT_CHECK


def cmd_descent(args, out: Output):
    split = tensor_split(args.p, args.m, args.n)
    f = RatWitt.parse(split.K, args.f)
    fl = base_change(f, split)
    eq = equalizer_check(fl, split)
    rep = galois_invariants_check(f, split, args.max_support)
    out.field("K", split.K)
    out.field("L", split.L)
    out.field("equalizer", int(eq))
    out.field("preimage", rep.preimage.format())
    out.field("frobenius_fixed", int(rep.fixed))
    out.field("omega_matches", int(rep.omega_matches))
    out.field("converse_checked", rep.converse_checked)
    out.field("converse_failures", rep.converse_failures)
    return EXIT_OK if eq and rep.passed else EXIT_CHECK


def cmd_demo(args, out: Output):
    if args.name == "list":
        out.lines.extend(FIXTURES)
        return EXIT_OK
    if args.name not in FIXTURES:
        raise UsageError(f"unknown fixture {args.name!r}; choose from: {', '.join(FIXTURES)}")
    rep = FIXTURES[args.name]()
    out.lines.extend(rep.format().splitlines())
    return EXIT_OK if rep.passed else EXIT_CHECK


# -- argument parsing ---------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ratwitt", description="Rational Witt vectors: exact arithmetic and property checks.")
    p.add_argument("--format", choices=("plain", "structured"), default="plain")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    w = sub.add_parser("witt", help="Witt ring operations")
    w.add_argument("op", choices=("add", "neg", "mul", "frob", "versch"))
    w.add_argument("operands", nargs="+")
    w.add_argument("--ring", required=True)
    w.add_argument("--prec", type=int)
    w.add_argument("--N", type=int)
    w.set_defaults(func=cmd_witt)

    g = sub.add_parser("ghost", help="ghost components")
    g.add_argument("f")
    g.add_argument("--ring", required=True)
    g.add_argument("--upto", type=int, required=True)
    g.set_defaults(func=cmd_ghost)

    h = sub.add_parser("hankel", help="Hankel rank over the fraction field")
    h.add_argument("what", choices=("rank",))
    h.add_argument("--ring", required=True)
    h.add_argument("--input", required=True)
    h.set_defaults(func=cmd_hankel)

    r = sub.add_parser("reconstruct", help="rational function from series coefficients")
    r.add_argument("--ring", required=True)
    r.add_argument("--series", required=True)
    r.add_argument("--bound", type=int, required=True)
    r.set_defaults(func=cmd_reconstruct)

    j = sub.add_parser("wj", help="Hankel-minor membership")
    j.add_argument("what", choices=("member",))
    j.add_argument("--ring", required=True)
    j.add_argument("--bound", type=int, required=True)
    j.add_argument("--series", required=True)
    j.set_defaults(func=cmd_wj)

    f = sub.add_parser("fatou", help="strong Fatou check of an element over Frac(A)")
    f.add_argument("what", choices=("check",))
    f.add_argument("--ring", required=True, help="the subring A")
    f.add_argument("--f", required=True)
    f.add_argument("--N", type=int, help="series coefficients to check")
    f.set_defaults(func=cmd_fatou)

    o = sub.add_parser("omega", help="image of a formal sum")
    o.add_argument("sum")
    o.add_argument("--ring", required=True)
    o.set_defaults(func=cmd_omega)

    a = sub.add_parser("almkvist", help="characteristic polynomial map")
    a.add_argument("op", choices=("char", "check"))
    a.add_argument("--ring", required=True)
    a.add_argument("--matrix", required=True)
    a.add_argument("--matrix2")
    a.add_argument("--N", type=int, default=2)
    a.add_argument("--prec", type=int)
    a.set_defaults(func=cmd_almkvist)

    d = sub.add_parser("descent", help="Galois descent for GF(p^m) in GF(p^(mn))")
    d.add_argument("what", choices=("check",))
    d.add_argument("--p", type=int, required=True)
    d.add_argument("--m", type=int, default=1)
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--f", required=True)
    d.add_argument("--max-support", type=int, dest="max_support")
    d.set_defaults(func=cmd_descent)

    m = sub.add_parser("demo", help="run a named fixture ('list' to show names)")
    m.add_argument("name")
    m.set_defaults(func=cmd_demo)
    return p


def run(argv=None) -> tuple[int, str]:
    """Run the CLI and return ``(exit code, output text)``."""
    try:
        args = build_parser().parse_args(argv)
        out = Output(args.format == "structured")
        code = args.func(args, out)
        return code, "\n".join(out.lines)
    except UsageError as exc:
        return EXIT_USAGE, f"error: {exc}"
    except (RingError, ValueError, ZeroDivisionError) as exc:
        return EXIT_USAGE, f"error: {exc}"


def main(argv=None) -> int:
    code, text = run(argv)
    if text:
        print(text, file=sys.stderr if code == EXIT_USAGE else sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
