from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction
from functools import lru_cache

import nokwidth.logger as logger_mod

from .cartan import cartan_matrix, symmetrizer
from .errors import EmptySupport, NotARoot, NotDominant, NotIntegral, RankMismatch
from .types import CartanType, RootSystem, RootVec, Weight

log = logger_mod.get_logger()


def canonical_key(beta: RootVec) -> tuple:
    """Ascending height, then the larger leading coordinate first (alpha_1 before alpha_2)."""
    return (beta.height, tuple(-c for c in beta.coords))


def _positive_roots(cartan: tuple[tuple[int, ...], ...]) -> list[RootVec]:
    # alpha-string closure: beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0,
    # p being how far the string extends downward.
    n = len(cartan)
    simples = [RootVec.simple(n, i) for i in range(1, n + 1)]
    roots: set[RootVec] = set(simples)
    layer = list(simples)
    while layer:
        nxt: set[RootVec] = set()
        for beta in layer:
            for i in range(n):
                alpha = simples[i]
                p = 0
                down = beta - alpha
                while down in roots:
                    p += 1
                    down = down - alpha
                pairing = sum(c * a for c, a in zip(beta.coords, cartan[i]))
                if p - pairing > 0:
                    up = beta + alpha
                    if up not in roots:
                        nxt.add(up)
        roots |= nxt
        layer = sorted(nxt, key=canonical_key)
    return sorted(roots, key=canonical_key)


@lru_cache(maxsize=None)
def build_root_system(t: CartanType) -> RootSystem:
    """Cartan data and positive roots for ``t`` (cached; the result is immutable)."""
    cartan = cartan_matrix(t)
    rs = RootSystem(
        cartan_type=t,
        cartan=cartan,
        sym=symmetrizer(cartan),
        positive_roots=tuple(_positive_roots(cartan)),
    )
    log.debug(f"Built root system {t}: {len(rs.positive_roots)} positive roots, d={rs.sym}")
    return rs


def as_weight(rs: RootSystem, value: Weight | Sequence) -> Weight:
    """Coerce a coordinate sequence to a ``Weight`` of the right rank."""
    coords = value.coords if isinstance(value, Weight) else tuple(value)
    if len(coords) != rs.rank:
        raise RankMismatch(rs.rank, len(coords))
    out = []
    for c in coords:
        if isinstance(c, bool) or Fraction(c).denominator != 1:
            raise NotIntegral(tuple(coords))
        out.append(int(c))
    return Weight(tuple(out))


def as_root(rs: RootSystem, value: RootVec | Sequence[int]) -> RootVec:
    beta = value if isinstance(value, RootVec) else RootVec(tuple(int(c) for c in value))
    if len(beta.coords) != rs.rank:
        raise RankMismatch(rs.rank, len(beta.coords))
    if not rs.is_root(beta):
        raise NotARoot(beta.coords)
    return beta


def coroot_pairing(rs: RootSystem, lam: Weight | Sequence[int], beta: RootVec | Sequence[int]) -> int:
    """<lambda, beta^vee> for an integral weight and a (possibly negative) root."""
    lam = as_weight(rs, lam)
    beta = as_root(rs, beta)
    return sum(c * x for c, x in zip(rs.coroot(beta), lam.coords))


def root_partial_order(beta: RootVec, gamma: RootVec) -> bool:
    """beta > gamma: the difference is a nonzero sum of positive roots."""
    diff = beta - gamma
    return any(diff.coords) and all(c >= 0 for c in diff.coords)


def _check_support(rs: RootSystem, supp: Iterable[int]) -> frozenset[int]:
    s = frozenset(int(i) for i in supp)
    if not s:
        raise EmptySupport()
    bad = [i for i in s if not 1 <= i <= rs.rank]
    if bad:
        raise RankMismatch(rs.rank, max(bad))
    return s


def phi_P_plus(rs: RootSystem, supp: Iterable[int]) -> list[RootVec]:
    """Positive roots with a nonzero coordinate on some index of ``supp``."""
    s = _check_support(rs, supp)
    return [b for b in rs.positive_roots if any(b.coords[i - 1] for i in s)]


def levi_positive_roots(rs: RootSystem, S: Iterable[int]) -> list[RootVec]:
    """Positive roots of the Levi subalgebra on the simple indices ``S``."""
    s = frozenset(S)
    return [b for b in rs.positive_roots if b.support <= s]


def highest_root(rs: RootSystem, S: Iterable[int]) -> RootVec:
    """Highest root of the Levi on ``S``; ``S`` must span a connected subdiagram."""
    roots = levi_positive_roots(rs, _check_support(rs, S))
    return max(roots, key=canonical_key)


def hasse_edges(rs: RootSystem) -> list[tuple[RootVec, RootVec]]:
    """Cover relations (beta, gamma) of the root poset: beta - gamma is simple."""
    edges = []
    for beta in rs.positive_roots:
        for gamma in rs.positive_roots:
            diff = beta - gamma
            if diff.height == 1 and all(c >= 0 for c in diff.coords):
                edges.append((beta, gamma))
    return edges


def root_to_weight(rs: RootSystem, nu: RootVec | Sequence[int]) -> Weight:
    coords = nu.coords if isinstance(nu, RootVec) else tuple(nu)
    return rs.root_to_weight(coords)


def weight_below(rs: RootSystem, lam: Weight, nu: RootVec | Sequence[int]) -> Weight:
    """lambda - sum nu_i alpha_i in fundamental coordinates."""
    return lam - root_to_weight(rs, nu)


def is_weight_of(rs: RootSystem, lam: Weight, nu: Sequence[int]) -> bool:
    """Whether lambda - nu is a weight of V(lambda).

    Reflects mu = lambda - nu into the dominant chamber, tracking nu, and
    checks that what is left of nu stays in the positive root cone.
    """
    nu = list(nu)
    if any(c < 0 for c in nu):
        return False
    mu = list(weight_below(rs, lam, nu).coords)
    n = rs.rank
    while True:
        i = next((k for k in range(n) if mu[k] < 0), None)
        if i is None:
            break
        # s_i(mu) = mu - mu_i alpha_i
        m = mu[i]
        nu[i] += m
        for j in range(n):
            mu[j] -= m * rs.cartan[j][i]
    return all(c >= 0 for c in nu)


def reflect_weight(rs: RootSystem, lam: Weight, beta: RootVec) -> Weight:
    """s_beta(lambda) = lambda - <lambda, beta^vee> beta."""
    k = coroot_pairing(rs, lam, beta)
    return lam - root_to_weight(rs, beta.scaled(k))


def require_dominant(rs: RootSystem, lam: Weight | Sequence[int]) -> Weight:
    lam = as_weight(rs, lam)
    if not lam.is_dominant():
        raise NotDominant(lam.coords)
    return lam


def weyl_dim(rs: RootSystem, lam: Weight | Sequence[int]) -> int:
    """Weyl dimension formula, exact."""
    lam = require_dominant(rs, lam)
    num = 1
    den = 1
    for beta in rs.positive_roots:
        cor = rs.coroot(beta)
        num *= sum(c * (x + 1) for c, x in zip(cor, lam.coords))
        den *= sum(cor)
    dim = Fraction(num, den)
    assert dim.denominator == 1
    return int(dim)
