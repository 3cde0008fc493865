"""Text literals: ring descriptors, ring elements, rational functions in T,
series, formal sums and matrices.

Element expressions use ``+ - * / ^`` (``**`` is accepted for ``^``),
parentheses, integers and the names a ring exposes through
:meth:`Ring.variables` (``x`` in GF(p^k), ``e`` in dual numbers, ``x, y``
for bivariate rings).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import polyring as P
from .base import NotDivisibleError, Ring, RingError


class ParseError(RingError):
    def __init__(self, msg: str, text: str = "", pos: int | None = None):
        self.text = text
        self.pos = pos
        where = f" at position {pos}" if pos is not None else ""
        super().__init__(f"{msg}{where}" + (f" in {text!r}" if text else ""))


# -- tokenizer and AST ------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str):
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError("unexpected character", text, pos)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            out.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            out.append(("name", m.group(2), start))
        else:
            op = m.group(3)
            out.append(("op", "^" if op == "**" else op, start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect_op(self, op):
        t = self.take()
        if t[0] != "op" or t[1] != op:
            raise ParseError(f"expected {op!r}", self.text, t[2])

    def parse(self):
        if self.peek()[0] == "end":
            raise ParseError("empty expression", self.text, 0)
        node = self.expr()
        t = self.peek()
        if t[0] != "end":
            raise ParseError("unexpected token", self.text, t[2])
        return node

    def expr(self):
        node = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            node = ("add" if op == "+" else "sub", node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            op = self.take()[1]
            node = ("mul" if op == "*" else "div", node, self.unary())
        return node

    def unary(self):
        t = self.peek()
        if t[0] == "op" and t[1] in "+-":
            self.take()
            inner = self.unary()
            return ("neg", inner) if t[1] == "-" else inner
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            sign = 1
            if self.peek()[0] == "op" and self.peek()[1] == "-":
                self.take()
                sign = -1
            t = self.take()
            if t[0] != "int":
                raise ParseError("exponent must be an integer", self.text, t[2])
            return ("pow", base, sign * t[1])
        return base

    def atom(self):
        t = self.take()
        if t[0] == "int":
            return ("int", t[1])
        if t[0] == "name":
            return ("name", t[1], t[2])
        if t[0] == "op" and t[1] == "(":
            node = self.expr()
            self.expect_op(")")
            return node
        raise ParseError("unexpected token", self.text, t[2])


def parse_ast(text: str):
    return _Parser(text).parse()


# -- evaluation -------------------------------------------------------------


def _eval_ring(R: Ring, node, names: dict, text: str):
    kind = node[0]
    if kind == "int":
        return R.from_int(node[1])
    if kind == "name":
        if node[1] not in names:
            raise ParseError(f"unknown name {node[1]!r} for ring {R}", text, node[2])
        return names[node[1]]
    if kind == "neg":
        return R.neg(_eval_ring(R, node[1], names, text))
    if kind == "pow":
        b = _eval_ring(R, node[1], names, text)
        try:
            return R.pow(b, node[2])
        except ZeroDivisionError as exc:
            raise ParseError(str(exc), text) from None
    a = _eval_ring(R, node[1], names, text)
    b = _eval_ring(R, node[2], names, text)
    if kind == "add":
        return R.add(a, b)
    if kind == "sub":
        return R.sub(a, b)
    if kind == "mul":
        return R.mul(a, b)
    try:
        return R.divexact(a, b)
    except (ZeroDivisionError, NotDivisibleError, RingError) as exc:
        raise ParseError(f"cannot divide in {R}: {exc}", text) from None


def parse_element(R: Ring, text: str):
    """Parse an element literal of ``R``."""
    return _eval_ring(R, parse_ast(text), R.variables(), text)


def _eval_frac(R: Ring, node, names: dict, var: str, text: str):
    """Evaluate to a pair ``(P, Q)`` of polynomials in ``var`` over ``R``."""
    one = P.const(R, R.one)
    kind = node[0]
    if kind == "int":
        return P.const(R, R.from_int(node[1])), one
    if kind == "name":
        if node[1] == var:
            return (R.zero, R.one), one
        if node[1] not in names:
            raise ParseError(f"unknown name {node[1]!r} for ring {R}", text, node[2])
        return P.const(R, names[node[1]]), one
    if kind == "neg":
        p, q = _eval_frac(R, node[1], names, var, text)
        return P.neg(R, p), q
    if kind == "pow":
        p, q = _eval_frac(R, node[1], names, var, text)
        k = node[2]
        if k < 0:
            p, q, k = q, p, -k
            if not q:
                raise ParseError("division by zero", text)
        return P.power(R, p, k), P.power(R, q, k)
    a = _eval_frac(R, node[1], names, var, text)
    b = _eval_frac(R, node[2], names, var, text)
    if kind in ("add", "sub"):
        if kind == "sub":
            b = (P.neg(R, b[0]), b[1])
        if a[1] == b[1]:
            return P.add(R, a[0], b[0]), a[1]
        return P.add(R, P.mul(R, a[0], b[1]), P.mul(R, b[0], a[1])), P.mul(R, a[1], b[1])
    if kind == "mul":
        return P.mul(R, a[0], b[0]), P.mul(R, a[1], b[1])
    # division
    if not b[0]:
        raise ParseError("division by zero", text)
    if len(a[0]) <= 1 and len(b[0]) == 1 and a[1] == one and b[1] == one:
        # constant by constant: stay inside the ring when possible
        try:
            return P.const(R, R.divexact(a[0][0] if a[0] else R.zero, b[0][0])), one
        except (ZeroDivisionError, NotDivisibleError, RingError):
            pass
    return P.mul(R, a[0], b[1]), P.mul(R, a[1], b[0])


def normalize_fraction(R: Ring, p, q, text: str = ""):
    """Scale ``p/q`` so that ``q(0) = 1``, cancelling common powers of T first."""
    while p and q and R.is_zero(p[0]) and R.is_zero(q[0]):
        p, q = p[1:], q[1:]
    if not q or R.is_zero(q[0]):
        raise ParseError("denominator vanishes at T=0", text)
    if not R.is_one(q[0]):
        try:
            u = R.inv(q[0])
        except ZeroDivisionError:
            raise ParseError("denominator constant term is not a unit", text) from None
        p, q = P.scale(R, p, u), P.scale(R, q, u)
    return p, q


def parse_fraction(R: Ring, text: str, var: str = "T"):
    """Parse a rational function in ``var`` to ``(P, Q)`` with ``Q(0) = 1``."""
    names = R.variables()
    if var in names:
        raise ParseError(f"ring {R} already uses the name {var}", text)
    p, q = _eval_frac(R, parse_ast(text), names, var, text)
    return normalize_fraction(R, p, q, text)


# -- series -----------------------------------------------------------------


@dataclass(frozen=True)
class SeriesLiteral:
    """A truncated series ``a_0 = 1, a_1..a_N``; ``coeffs`` holds ``a_1..a_N``."""

    coeffs: tuple
    prec: int


def split_top(text: str, sep: str = ",") -> list[str]:
    """Split on ``sep`` outside brackets and parentheses."""
    out, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == sep and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return [s.strip() for s in out]


def parse_coefficients(R: Ring, text: str) -> list:
    """Comma-separated element literals."""
    parts = split_top(text)
    if any(not s for s in parts):
        raise ParseError("empty entry in coefficient list", text)
    return [R.parse(s) for s in parts]


def parse_series(R: Ring, text: str) -> SeriesLiteral:
    """Parse ``a0,a1,...,aN`` (with ``a0 = 1``) or ``1 + a1*T + ... ; prec=N``."""
    if ";" in text:
        body, _, tail = text.partition(";")
        m = re.fullmatch(r"\s*prec\s*=\s*(\d+)\s*", tail)
        if not m:
            raise ParseError("expected '; prec=N'", text, text.index(";"))
        prec = int(m.group(1))
        p, q = parse_fraction(R, body)
        coeffs = P.mul_trunc(R, p, P.inv_series(R, q, prec + 1), prec + 1)
    else:
        coeffs = parse_coefficients(R, text)
        prec = len(coeffs) - 1
    if not coeffs or not R.is_one(coeffs[0]):
        raise ParseError("series must have constant term 1", text)
    if prec < 1:
        raise ParseError("series needs at least one coefficient after a0", text)
    return SeriesLiteral(tuple(coeffs[1 : prec + 1]), prec)


def looks_like_series(text: str) -> bool:
    return ";" in text or len(split_top(text)) > 1


# -- formal sums and matrices -------------------------------------------------


def parse_formal_sum(R: Ring, text: str) -> dict:
    """Parse ``2*(3) - (5) + (x+1)`` into ``{element: multiplicity}``."""
    s = text.strip()
    if s in ("", "0"):
        return {}
    terms, depth, start = [], 0, 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced parenthesis", text, i)
        elif ch in "+-" and depth == 0 and i > start:
            terms.append((start, s[start:i]))
            start = i
    if depth:
        raise ParseError("unbalanced parenthesis", text, len(s))
    terms.append((start, s[start:]))
    out: dict = {}
    for pos, term in terms:
        m = re.fullmatch(r"\s*([+-]?)\s*(?:(\d+)\s*\*\s*)?\((.*)\)\s*", term)
        if not m:
            raise ParseError("expected [n*](element)", text, pos)
        n = int(m.group(2) or 1) * (-1 if m.group(1) == "-" else 1)
        a = R.parse(m.group(3))
        out[a] = out.get(a, 0) + n
    return out


def parse_matrix(R: Ring, text: str) -> list[list]:
    """Row-major ``[[a,b],[c,d]]``; ``[]`` is the 0x0 matrix."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ParseError("matrix must be a bracketed list of rows", text, 0)
    inner = s[1:-1].strip()
    if not inner:
        return []
    rows = []
    for r in split_top(inner):
        if not (r.startswith("[") and r.endswith("]")):
            raise ParseError("each row must be bracketed", text)
        rows.append(parse_coefficients(R, r[1:-1]))
    if any(len(r) != len(rows) for r in rows):
        raise ParseError("matrix must be square", text)
    return rows


# -- ring descriptors ---------------------------------------------------------


def parse_ring(text: str) -> Ring:
    """Ring from its descriptor string, e.g. ``ZZ``, ``GF/4=x^2+x+1``, ``Dual(GF/2)``."""
    from .dual import DualNumbers
    from .finite_field import GF
    from .fraction import FractionField
    from .integers import QQ, ZZ, IntegersMod, LocalizedIntegers, factor_prime_power
    from .monomial import MonomialSubring
    from .polyring import PolyRing

    s = text.strip()
    try:
        if s == "ZZ":
            return ZZ
        if s == "QQ":
            return QQ
        m = re.fullmatch(r"ZZ\[1/(\d+)\]", s)
        if m:
            return LocalizedIntegers(int(m.group(1)))
        m = re.fullmatch(r"Zmod/(\d+)", s)
        if m:
            return IntegersMod(int(m.group(1)))
        m = re.fullmatch(r"GF/(\d+)(?:=(.+))?", s)
        if m:
            q = int(m.group(1))
            if m.group(2) is None:
                return GF(q)
            p, _ = factor_prime_power(q)
            mod = parse_element(PolyRing(GF(p), "x"), m.group(2))
            return GF(q, modulus=tuple(mod))
        m = re.fullmatch(r"(Dual|MonSub|Frac|Poly)\((.*)\)", s)
        if m:
            head, arg = m.groups()
            if head == "Poly":
                parts = split_top(arg)
                if len(parts) != 2 or not parts[1].isidentifier():
                    raise ParseError("expected Poly(R,var)", text)
                return PolyRing(parse_ring(parts[0]), parts[1])
            base = parse_ring(arg)
            if head == "Dual":
                return DualNumbers(base)
            if head == "MonSub":
                return MonomialSubring(base)
            return base.fraction_field() if head == "Frac" else FractionField(base)
    except ParseError:
        raise
    except RingError as exc:
        raise ParseError(f"invalid ring {text!r}: {exc}") from None
    raise ParseError(f"unknown ring descriptor {text!r}")
