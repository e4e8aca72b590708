"""nokwidth.repmod

Exact irreducible highest-weight modules V(lambda): weight-space bases from
the contravariant form, lowering and raising operators, root vectors F_beta
and PBW monomial vectors.

    from nokwidth.repmod import build_module, pbw_monomial_vector

    mod = build_module(rs, (1, 1))
    mod.total_dim  # 8
"""

from ._limits import BuildLimits
from .errors import DimensionLimitExceeded, FormNotPositive, WeightMismatch
from .freudenthal import freudenthal_multiplicities
from .module import (
    HighestWeightModule,
    apply_lowering,
    build_module,
    gram_is_positive_definite,
    in_span,
    module_for,
)
from .rootvectors import apply_root_vector, pbw_monomial_vector, root_map, root_vector_expr
from .shapovalov import shapovalov_pair
from .types import LoweringWord, ModuleVector, RootVectorExpr, WeightSpace

__all__ = [
    "BuildLimits",
    "DimensionLimitExceeded",
    "FormNotPositive",
    "HighestWeightModule",
    "LoweringWord",
    "ModuleVector",
    "RootVectorExpr",
    "WeightMismatch",
    "WeightSpace",
    "apply_lowering",
    "apply_root_vector",
    "build_module",
    "freudenthal_multiplicities",
    "gram_is_positive_definite",
    "in_span",
    "module_for",
    "pbw_monomial_vector",
    "root_map",
    "root_vector_expr",
    "shapovalov_pair",
]
