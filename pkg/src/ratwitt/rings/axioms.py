"""Commutative ring axioms checked on sample elements."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Callable, Sequence

from .base import Ring


@dataclass
class AxiomReport:
    passed: bool
    checked: int
    law: str | None = None
    counterexample: tuple | None = None

    def __str__(self):
        if self.passed:
            return f"pass ({self.checked} checks)"
        return f"FAIL {self.law} at {self.counterexample}"


def check_ring_laws(
    samples: Sequence,
    add: Callable,
    mul: Callable,
    neg: Callable,
    zero: Any,
    one: Any,
    eq: Callable = lambda a, b: a == b,
    triples: int | None = None,
) -> AxiomReport:
    """Check commutative-ring axioms for arbitrary operations.

    All ordered triples of ``samples`` are used unless ``triples`` caps the
    count (the first ``triples`` in lexicographic order).
    """
    checked = 0

    def fail(law, *elems):
        return AxiomReport(False, checked, law, elems)

    for a in samples:
        checked += 1
        if not eq(add(a, zero), a):
            return fail("additive identity", a)
        if not eq(mul(a, one), a):
            return fail("multiplicative identity", a)
        if not eq(add(a, neg(a)), zero):
            return fail("additive inverse", a)
    for a, b in itertools.product(samples, repeat=2):
        checked += 1
        if not eq(add(a, b), add(b, a)):
            return fail("additive commutativity", a, b)
        if not eq(mul(a, b), mul(b, a)):
            return fail("multiplicative commutativity", a, b)
    trip = itertools.product(samples, repeat=3)
    if triples is not None:
        trip = itertools.islice(trip, triples)
    for a, b, c in trip:
        checked += 1
        if not eq(add(add(a, b), c), add(a, add(b, c))):
            return fail("additive associativity", a, b, c)
        if not eq(mul(mul(a, b), c), mul(a, mul(b, c))):
            return fail("multiplicative associativity", a, b, c)
        if not eq(mul(a, add(b, c)), add(mul(a, b), mul(a, c))):
            return fail("distributivity", a, b, c)
    return AxiomReport(True, checked)


def ring_axiom_suite(ring: Ring, samples: Sequence) -> AxiomReport:
    """Associativity, commutativity, distributivity and identities on all sample triples."""
    if len(samples) < 3:
        raise ValueError("ring_axiom_suite needs at least 3 samples")
    report = check_ring_laws(samples, ring.add, ring.mul, ring.neg, ring.zero, ring.one)
    if report.passed and ring.is_zero(ring.one):
        return AxiomReport(False, report.checked, "0 != 1", ())
    return report


def check_triple(a, b, c, add, mul, neg, zero, one, eq=lambda x, y: x == y) -> str | None:
    """Name of the first ring law violated by the triple ``(a, b, c)``, else ``None``."""
    laws = [
        ("additive identity", lambda: eq(add(a, zero), a)),
        ("multiplicative identity", lambda: eq(mul(a, one), a)),
        ("additive inverse", lambda: eq(add(a, neg(a)), zero)),
        ("additive commutativity", lambda: eq(add(a, b), add(b, a))),
        ("multiplicative commutativity", lambda: eq(mul(a, b), mul(b, a))),
        ("additive associativity", lambda: eq(add(add(a, b), c), add(a, add(b, c)))),
        ("multiplicative associativity", lambda: eq(mul(mul(a, b), c), mul(a, mul(b, c)))),
        ("distributivity", lambda: eq(mul(a, add(b, c)), add(mul(a, b), mul(a, c)))),
    ]
    for name, law in laws:
        if not law():
            return name
    return None
