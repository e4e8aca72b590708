from __future__ import annotations

import nokwidth.logger as logger_mod
from nokwidth.rootsys import (
    RootSystem,
    Weight,
    coroot_pairing,
    highest_root,
    levi_positive_roots,
)

from .enumerations import enumeration_from_word
from .errors import InternalInvariant, NotBijective, NotReduced, UnsupportedType
from .group import inverse, length, longest_element, reduced_word
from .types import Enumeration, ReducedWord, Telescope

log = logger_mod.get_logger()


def telescope_relabeling(rs: RootSystem) -> tuple[int, ...]:
    """Order in which simple roots join the Levi chain l_1 < l_2 < ... < g.

    Each new node must be cominuscule for the Levi it completes. B_n starts
    from the short root, E6 and E7 go through D5 and E6.
    """
    t = rs.cartan_type
    n = t.rank
    if t.series in ("A", "C", "D"):
        return tuple(range(1, n + 1))
    if t.series == "B":
        return tuple(range(n, 0, -1))
    if t.series == "E" and n in (6, 7):
        return (1, 3, 4, 2, 5, 6, 7)[:n]
    raise UnsupportedType(str(t))


def _shells(rs: RootSystem, relabel: tuple[int, ...], e: Enumeration) -> tuple[int, ...]:
    level: dict = {}
    for j in range(len(relabel), 0, -1):
        for beta in levi_positive_roots(rs, relabel[:j]):
            level[beta] = j
    return tuple(level[b] for b in e.roots)


def telescope_enumeration(rs: RootSystem) -> Telescope:
    """Enumeration of Phi^+ compatible with a chain of Levi subalgebras.

    tau_j = (w0^(j-1))^-1 w0^j is the minimal coset representative taking the
    j-1 Levi to the j Levi. The enumeration is the prefix reading of the word
    x_n ... x_1, where x_j = w0 tau_j^-1 w0, so that every Levi l_j fills the
    tail of the list.
    """
    relabel = telescope_relabeling(rs)
    n = rs.rank
    w0, _ = longest_element(rs, rs.indices)

    taus: list[ReducedWord] = []
    blocks: list[ReducedWord] = []
    cominuscule: list[bool] = []
    prev, _ = longest_element(rs, ())
    total = 0
    for j in range(1, n + 1):
        S_prev, S_j = relabel[: j - 1], relabel[:j]
        cur, _ = longest_element(rs, S_j)
        tau = prev * cur
        tau_inv = inverse(rs, tau)
        for i in S_prev:
            if any(c < 0 for c in tau_inv.act_root(rs.simple_root(i)).coords):
                raise InternalInvariant(
                    "minimal coset representative", f"tau_{j}^-1(alpha_{i}) is negative"
                )
        total += length(rs, tau)
        if total != length(rs, cur):
            raise InternalInvariant("length additivity", f"l(w0^{j}) != sum of l(tau_s), s <= {j}")

        theta = highest_root(rs, S_j)
        node = relabel[j - 1]
        flag = coroot_pairing(rs, Weight.fundamental(n, node), theta) == 1
        if not flag:
            raise InternalInvariant("cominuscule", f"<w_{node}, theta_{j}^vee> != 1")
        cominuscule.append(flag)

        taus.append(reduced_word(rs, tau))
        blocks.append(reduced_word(rs, w0 * tau_inv * w0))
        prev = cur

    word = ReducedWord(tuple(i for b in reversed(blocks) for i in b.letters))
    try:
        base = enumeration_from_word(rs, rs.indices, word, "prefix")
    except (NotReduced, NotBijective) as e:
        raise InternalInvariant("telescope word", str(e)) from e
    enumeration = Enumeration(
        roots=base.roots,
        provenance="telescope",
        support=base.support,
        cartan_type=base.cartan_type,
        word=word,
        relabeling=relabel,
    )
    shells = _shells(rs, relabel, enumeration)
    # l_j must occupy the last |Phi^+(l_j)| positions
    if list(shells) != sorted(shells, reverse=True):
        raise InternalInvariant("shell property", f"shell sequence {shells}")
    log.info(f"✅ Telescope for {rs.cartan_type}: relabeling {relabel}, word {word.letters}")
    return Telescope(
        enumeration=enumeration,
        relabeling=relabel,
        tau_words=tuple(taus),
        block_words=tuple(blocks),
        shells=shells,
        cominuscule=tuple(cominuscule),
    )
