from __future__ import annotations

from collections.abc import Iterable, Sequence

import nokwidth.logger as logger_mod
from nokwidth.rootsys import RootSystem, RootVec, phi_P_plus, root_partial_order

from .errors import NotBijective, NotReduced
from .group import is_reduced, longest_element, reduced_word, simple_element
from .types import Enumeration, ReducedWord

log = logger_mod.get_logger()

VARIANTS = ("prefix", "suffix")


def _levi(rs: RootSystem, supp: Iterable[int]) -> tuple[int, ...]:
    s = set(supp)
    return tuple(i for i in rs.indices if i not in s)


def enumeration_from_word(
    rs: RootSystem,
    supp: Iterable[int],
    word: ReducedWord | Sequence[int],
    variant: str = "prefix",
) -> Enumeration:
    """Enumeration of Phi_P^+ induced by a reduced decomposition of w0.

    prefix: w0 = w_L s_i1...s_iN, beta_k = w_L s_i1...s_i(k-1)(alpha_ik).
    suffix: w0 = s_i1...s_iN w_L, beta_k = w_L s_iN...s_i(k+1)(alpha_ik).
    """
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    supp = tuple(sorted(set(supp)))
    target = phi_P_plus(rs, supp)
    letters = tuple(word.letters if isinstance(word, ReducedWord) else word)
    w_levi, levi_word = longest_element(rs, _levi(rs, supp))

    full = levi_word.letters + letters if variant == "prefix" else letters + levi_word.letters
    if len(full) != len(rs.positive_roots):
        raise NotReduced(
            letters, f"length {len(full)} with w_L, expected {len(rs.positive_roots)}"
        )
    if not is_reduced(rs, full):
        raise NotReduced(letters, "has a descent")

    roots: list[RootVec | None] = [None] * len(letters)
    cur = w_levi
    order = range(len(letters)) if variant == "prefix" else reversed(range(len(letters)))
    for k in order:
        i = letters[k]
        roots[k] = cur.act_root(rs.simple_root(i))
        cur = cur * simple_element(rs, i)

    out = tuple(r for r in roots if r is not None)
    if len(set(out)) != len(out) or set(out) != set(target):
        raise NotBijective(tuple(r.coords for r in out), f"word {letters}, variant {variant}")
    log.debug(f"{rs.cartan_type} word {letters} ({variant}) -> {[r.label() for r in out]}")
    return Enumeration(
        roots=out,
        provenance=f"word-{variant}",
        support=supp,
        cartan_type=str(rs.cartan_type),
        word=ReducedWord(letters),
    )


def good_ordering(rs: RootSystem, supp: Iterable[int]) -> Enumeration:
    """Phi_P^+ in canonical (height, coordinate) order; height is strictly monotone in the root order."""
    supp = tuple(sorted(set(supp)))
    return Enumeration(
        roots=tuple(phi_P_plus(rs, supp)),
        provenance="good",
        support=supp,
        cartan_type=str(rs.cartan_type),
    )


def is_good_ordering(e: Enumeration | Sequence[RootVec]) -> bool:
    """True iff beta_i > beta_j always forces i > j."""
    roots = list(e.roots if isinstance(e, Enumeration) else e)
    for a in range(len(roots)):
        for b in range(a + 1, len(roots)):
            if root_partial_order(roots[a], roots[b]):
                return False
    return True


def default_word(rs: RootSystem, supp: Iterable[int], variant: str = "prefix") -> ReducedWord:
    """A reduced word completing w_L to w0 on the side required by ``variant``."""
    supp = tuple(sorted(set(supp)))
    w0, _ = longest_element(rs, rs.indices)
    w_levi, _ = longest_element(rs, _levi(rs, supp))
    # w_L is an involution: prefix u = w_L w0, suffix u = w0 w_L
    u = w_levi * w0 if variant == "prefix" else w0 * w_levi
    return reduced_word(rs, u)
