"""nokwidth.rootsys

Exact root-system data for every simple type: Cartan matrices in Bourbaki
numbering, positive roots, coroot pairings, parabolic root subsets and the
Gromov-width formula.

    from nokwidth.rootsys import CartanType, build_root_system, gromov_width_formula

    rs = build_root_system(CartanType("B", 3))
    gromov_width_formula(rs, (1, 1, 1))  # 1
"""

from .errors import (
    EmptySupport,
    InvalidType,
    NotARoot,
    NotDominant,
    NotIntegral,
    RankMismatch,
    ZeroWeight,
)
from .system import (
    as_root,
    as_weight,
    build_root_system,
    canonical_key,
    coroot_pairing,
    hasse_edges,
    highest_root,
    is_weight_of,
    levi_positive_roots,
    phi_P_plus,
    reflect_weight,
    require_dominant,
    root_partial_order,
    root_to_weight,
    weight_below,
    weyl_dim,
)
from .types import CartanType, RhoPDecomposition, RootSystem, RootVec, Weight
from .width import (
    epsilon_to_fundamental,
    epsilon_width,
    gromov_width_formula,
    minimizing_coroots,
    normalize_rational_weight,
    rational_width,
    rho_p_decomposition,
)

__all__ = [
    "CartanType",
    "EmptySupport",
    "InvalidType",
    "NotARoot",
    "NotDominant",
    "NotIntegral",
    "RankMismatch",
    "RhoPDecomposition",
    "RootSystem",
    "RootVec",
    "Weight",
    "ZeroWeight",
    "as_root",
    "as_weight",
    "build_root_system",
    "canonical_key",
    "coroot_pairing",
    "epsilon_to_fundamental",
    "epsilon_width",
    "gromov_width_formula",
    "hasse_edges",
    "highest_root",
    "is_weight_of",
    "levi_positive_roots",
    "minimizing_coroots",
    "normalize_rational_weight",
    "phi_P_plus",
    "rational_width",
    "reflect_weight",
    "require_dominant",
    "rho_p_decomposition",
    "root_partial_order",
    "root_to_weight",
    "weight_below",
    "weyl_dim",
]
