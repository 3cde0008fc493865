"""Exact commutative rings and the dense polynomial kernel."""

from .axioms import AxiomReport, check_ring_laws, ring_axiom_suite
from .base import NotDivisibleError, Ring, RingError
from .dual import DualNumbers
from .finite_field import CONWAY, GF, FiniteField, embedding
from .fraction import FractionField
from .integers import QQ, ZZ, Integers, IntegersMod, LocalizedIntegers, PrimeField, Rationals
from .monomial import MonomialSubring, bivariate, monomial_subring_member
from .parse import ParseError, parse_element, parse_fraction, parse_ring
from .polyring import PolyRing, format_poly, poly_gcd, resultant

__all__ = [
    "AxiomReport",
    "CONWAY",
    "DualNumbers",
    "FiniteField",
    "FractionField",
    "GF",
    "Integers",
    "IntegersMod",
    "LocalizedIntegers",
    "MonomialSubring",
    "NotDivisibleError",
    "ParseError",
    "PolyRing",
    "PrimeField",
    "QQ",
    "Rationals",
    "Ring",
    "RingError",
    "ZZ",
    "bivariate",
    "check_ring_laws",
    "embedding",
    "format_poly",
    "monomial_subring_member",
    "parse_element",
    "parse_fraction",
    "parse_ring",
    "poly_gcd",
    "resultant",
    "ring_axiom_suite",
]
