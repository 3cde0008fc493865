"""Rational big Witt vectors over commutative rings."""

from .almkvist import EndoModule, char_map
from .hankel import (
    berlekamp_massey,
    hankel_determinants,
    hankel_rank_field,
    kronecker_reconstruct,
    wj_member,
    wj_rank,
)
from .monoid import FormalSum, kernel_witnesses, omega, split_preimage
from .ratwitt import (
    RatWitt,
    localize,
    localize_preimage,
    product_bound,
    rw_add,
    rw_frobenius,
    rw_mul,
    rw_neg,
    rw_scale,
    rw_sub,
    rw_verschiebung,
)
from .rings import GF, QQ, ZZ, DualNumbers, IntegersMod, LocalizedIntegers, MonomialSubring, PolyRing, parse_ring
from .wittseries import (
    PrecisionError,
    WittSeries,
    frobenius,
    from_ghost,
    ghost,
    teichmuller,
    verschiebung,
    witt_add,
    witt_mul,
    witt_neg,
    witt_one,
    witt_sub,
    witt_zero,
)

__version__ = "0.1.0"
