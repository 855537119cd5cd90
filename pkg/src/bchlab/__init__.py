"""bchlab: exact construction and brute-force verification of the BCH codes
of length q+1 over GF(q) with designed distance 3 and offset h.

The library builds each code from its generator polynomial, measures the true
minimum distance and dual distance with independent search engines, and
compares the results with the closed-form predictions (dimension table,
gcd criterion for d = 3, dual-distance bounds, MDS/AMDS/NMDS classification,
and locally-repairable-code optimality).
"""

from .field import FieldContext, build_field
from .cosets import CyclotomicCoset, coset_of, all_cosets
from .polynomial import Poly, is_irreducible, minimal_polynomial, poly_gcd, poly_lcm
from .bch import BchCode, DualCodeword, build_bch
from .distance import (
    DistanceResult,
    dual_min_distance,
    exhaustive_min_distance,
    min_distance_by_columns,
    verify_witness,
)
from . import theory
from . import harness

__all__ = [
    "FieldContext",
    "build_field",
    "CyclotomicCoset",
    "coset_of",
    "all_cosets",
    "Poly",
    "is_irreducible",
    "minimal_polynomial",
    "poly_gcd",
    "poly_lcm",
    "BchCode",
    "DualCodeword",
    "build_bch",
    "DistanceResult",
    "min_distance_by_columns",
    "dual_min_distance",
    "exhaustive_min_distance",
    "verify_witness",
    "theory",
    "harness",
]
