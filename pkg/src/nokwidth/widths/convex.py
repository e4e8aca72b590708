from __future__ import annotations

from collections.abc import Sequence

import nokwidth.logger as logger_mod
from nokwidth.essential import is_essential
from nokwidth.repmod import apply_root_vector, module_for, root_vector_expr
from nokwidth.rootsys import RootSystem, Weight, as_weight, reflect_weight
from nokwidth.weyl import ReducedWord, default_word, enumeration_from_word

from .errors import Disagreement, NotRegular
from .good import checked_width
from .types import SimplexReport, SimplexSpec

log = logger_mod.get_logger()


def _regular(rs: RootSystem, lam: Weight | Sequence[int], construction: str) -> Weight:
    lam = as_weight(rs, lam)
    if not lam.is_regular():
        raise NotRegular(lam.coords, construction)
    return lam


def _letters(rs: RootSystem, word: ReducedWord | Sequence[int] | None) -> tuple[int, ...]:
    if word is None:
        return default_word(rs, rs.indices, "suffix").letters
    return tuple(word.letters if isinstance(word, ReducedWord) else word)


def mmax_closed_form(letters: Sequence[int], lam: Weight) -> list[tuple[int, ...]]:
    """m_k^max = (0, ..., 0, <lambda, alpha_(i_k)^vee>, ..., <lambda, alpha_(i_N)^vee>)."""
    n = len(letters)
    values = [lam.coords[i - 1] for i in letters]
    return [tuple(0 if j < k else values[j] for j in range(n)) for k in range(n)]


def mmax_tuples(
    rs: RootSystem, word: ReducedWord | Sequence[int] | None, lam: Weight | Sequence[int]
) -> list[tuple[int, ...]]:
    """m_k^max for the suffix enumeration of ``word``, cross-checked by descending induction.

    The inductive value is the largest t with F_(beta_k)^t F^(m_(k+1)^max) v != 0; the
    weight reached must be s_(beta_k) ... s_(beta_N)(lambda).
    """
    lam = _regular(rs, lam, "convex")
    letters = _letters(rs, word)
    e = enumeration_from_word(rs, rs.indices, letters, "suffix")
    closed = mmax_closed_form(letters, lam)
    module = module_for(rs, lam)

    n = len(letters)
    inductive: list[tuple[int, ...]] = [()] * n
    exps = [0] * n
    v = module.highest_vector()
    expected = lam
    for k in reversed(range(n)):
        expr = root_vector_expr(rs, e.roots[k])
        t = 0
        while True:
            w = apply_root_vector(module, expr, v)
            if w.is_zero():
                break
            v, t = w, t + 1
        exps[k] = t
        inductive[k] = tuple(exps)
        expected = reflect_weight(rs, expected, e.roots[k])
        if module.weight_of(v.nu) != expected:
            raise Disagreement(
                f"weight reached by m_{k + 1}^max", module.weight_of(v.nu).coords, expected.coords
            )
    if inductive != closed:
        raise Disagreement("m^max closed form vs descending induction", closed, inductive)
    return closed


def verify_convex_ordering_theorem(
    rs: RootSystem,
    word: ReducedWord | Sequence[int] | None,
    lam: Weight | Sequence[int],
) -> SimplexReport:
    """k times the simplex spanned by the suffix sums e_(i,N) for a suffix word enumeration."""
    lam = _regular(rs, lam, "convex")
    letters = _letters(rs, word)
    e = enumeration_from_word(rs, rs.indices, letters, "suffix")
    module = module_for(rs, lam)
    k = checked_width(rs, lam)
    n = len(letters)

    checks: dict[str, bool] = {}
    try:
        mmax = mmax_tuples(rs, letters, lam)
        checks["mmax closed form agrees with induction"] = True
    except Disagreement as exc:
        log.error(f"❌ {exc}")
        mmax = mmax_closed_form(letters, lam)
        checks["mmax closed form agrees with induction"] = False
    for idx, m in enumerate(mmax):
        checks[f"m_{idx + 1}^max essential"] = is_essential(module, e, m)

    vertices = ((0,) * n,) + tuple(
        tuple(k if j >= i else 0 for j in range(n)) for i in range(n)
    )
    verdicts = tuple((v, is_essential(module, e, v)) for v in vertices)
    report = SimplexReport(
        spec=SimplexSpec(kind="convex", k=k, vertices=vertices, enumeration=e, lam=lam),
        verdicts=verdicts,
        checks=checks,
        details={"word": list(letters), "mmax": [list(m) for m in mmax]},
    )
    mark = "✅" if report.passed else "❌"
    log.info(f"{mark} convex ordering {rs.cartan_type} word={letters} lambda={logger_mod.format_tuple(lam.coords)}: k={k}")
    return report
