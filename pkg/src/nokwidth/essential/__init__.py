"""nokwidth.essential

Essential exponent tuples for a fixed enumeration of Phi_P^+: the
right-lexicographic orders and valuation, Kostant partitions, es_P(lambda),
level slices of the monoid Gamma_lambda and the monoid-inclusion checks.

    from nokwidth.essential import essential_set

    es = essential_set(rs, (1, 1), good_ordering(rs, {1, 2}))
    len(es)  # 8
"""

from .errors import EnumerationMismatch, LengthMismatch, SupportMismatch, ZeroPolynomial
from .essential import (
    essential_by_weight,
    essential_set,
    gamma_level,
    is_essential,
    matches_example_polytope,
    su3_example_points,
)
from .monoid import check_monoid_inclusion, minkowski_equality, minkowski_sum
from .order import ORDERS, compare_tuples, lowest_term_valuation, right_lex_key
from .partitions import kostant_partitions
from .types import EssentialSet, ExponentTuple, SparseExponentPolynomial, TupleInfo

__all__ = [
    "ORDERS",
    "EnumerationMismatch",
    "EssentialSet",
    "ExponentTuple",
    "LengthMismatch",
    "SparseExponentPolynomial",
    "SupportMismatch",
    "TupleInfo",
    "ZeroPolynomial",
    "check_monoid_inclusion",
    "compare_tuples",
    "essential_by_weight",
    "essential_set",
    "gamma_level",
    "is_essential",
    "kostant_partitions",
    "lowest_term_valuation",
    "matches_example_polytope",
    "minkowski_equality",
    "minkowski_sum",
    "right_lex_key",
    "su3_example_points",
]
