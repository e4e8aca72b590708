from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction
from math import gcd

import nokwidth.logger as logger_mod

from .errors import ZeroWeight
from .system import coroot_pairing, require_dominant
from .types import RhoPDecomposition, RootSystem, RootVec, Weight

log = logger_mod.get_logger()


def _nonzero_dominant(rs: RootSystem, lam: Weight | Sequence[int]) -> Weight:
    lam = require_dominant(rs, lam)
    if lam.is_zero():
        raise ZeroWeight()
    return lam


def gromov_width_formula(rs: RootSystem, lam: Weight | Sequence[int]) -> int:
    """min <lambda, beta^vee> over positive roots beta with a nonzero pairing."""
    lam = _nonzero_dominant(rs, lam)
    return min(p for b in rs.positive_roots if (p := coroot_pairing(rs, lam, b)))


def minimizing_coroots(rs: RootSystem, lam: Weight | Sequence[int]) -> list[RootVec]:
    """Positive roots at which the width formula attains its minimum."""
    lam = _nonzero_dominant(rs, lam)
    k = gromov_width_formula(rs, lam)
    return [b for b in rs.positive_roots if coroot_pairing(rs, lam, b) == k]


def normalize_rational_weight(q: Sequence) -> tuple[Weight, Fraction]:
    """Split a rational weight as q = lambda / ell with lambda primitive integral."""
    fracs = [Fraction(x) for x in q]
    if not any(fracs):
        raise ZeroWeight("The zero weight cannot be normalized")
    lcm = 1
    for f in fracs:
        lcm = lcm * f.denominator // gcd(lcm, f.denominator)
    scaled = [int(f * lcm) for f in fracs]
    g = 0
    for x in scaled:
        g = gcd(g, x)
    lam = Weight(tuple(x // g for x in scaled))
    ell = Fraction(lcm, g)
    log.debug(f"Normalized {tuple(str(f) for f in fracs)} -> lambda={lam.coords}, ell={ell}")
    return lam, ell


def rational_width(rs: RootSystem, q: Sequence) -> Fraction:
    """Width formula for a rational dominant weight: formula(lambda) / ell."""
    lam, ell = normalize_rational_weight(q)
    return Fraction(gromov_width_formula(rs, lam)) / ell


def rho_p_decomposition(rs: RootSystem, lam: Weight | Sequence[int]) -> RhoPDecomposition:
    """Largest k with lambda = k rho_P + nu, nu dominant and supported in supp(lambda)."""
    lam = _nonzero_dominant(rs, lam)
    supp = lam.support
    k = min(lam.coords[i - 1] for i in supp)
    rho_p = Weight(tuple(1 if i in supp else 0 for i in rs.indices))
    return RhoPDecomposition(k=k, rho_p=rho_p, remainder=lam - rho_p.scaled(k))


def epsilon_to_fundamental(eps: Sequence[int]) -> Weight:
    """Type A: lambda_i = eps_i - eps_(i+1)."""
    e = [int(x) for x in eps]
    return Weight(tuple(e[i] - e[i + 1] for i in range(len(e) - 1)))


def epsilon_width(eps: Sequence) -> Fraction:
    """min |eps_i - eps_j| over pairs with eps_i != eps_j."""
    e = [Fraction(x) for x in eps]
    gaps = [abs(a - b) for i, a in enumerate(e) for b in e[i + 1 :] if a != b]
    if not gaps:
        raise ZeroWeight("All eigenvalues coincide; the orbit is a point")
    return min(gaps)
