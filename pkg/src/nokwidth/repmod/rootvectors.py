from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction
from functools import lru_cache

from nokwidth.errors import InvalidInputError
from nokwidth.rootsys import NotARoot, RootSystem, RootVec, as_root

from . import linalg
from .module import HighestWeightModule, _shift
from .types import LoweringWord, ModuleVector, RootVectorExpr


def _split(rs: RootSystem, beta: RootVec) -> tuple[int, RootVec] | None:
    """Least i with beta - alpha_i a positive root, or None for simple beta."""
    if beta.height == 1:
        return None
    for i in rs.indices:
        gamma = beta - rs.simple_root(i)
        if rs.is_positive_root(gamma):
            return i, gamma
    raise NotARoot(beta.coords)


def root_vector_expr(rs: RootSystem, beta: RootVec | Sequence[int]) -> RootVectorExpr:
    """F_beta as the least-index iterated commutator [f_i, F_gamma], expanded into words."""
    beta = as_root(rs, beta)
    if not rs.is_positive_root(beta):
        raise NotARoot(beta.coords)
    expansion, recipe = _expand(rs, beta)
    return RootVectorExpr(beta=beta, expansion=expansion, recipe=recipe)


@lru_cache(maxsize=None)
def _canonical_expr(rs: RootSystem, beta: RootVec) -> RootVectorExpr:
    return root_vector_expr(rs, beta)


def _expand(rs: RootSystem, beta: RootVec) -> tuple[dict[LoweringWord, Fraction], tuple[int, ...]]:
    step = _split(rs, beta)
    if step is None:
        i = next(iter(beta.support))
        return {(i,): Fraction(1)}, (i,)
    i, gamma = step
    inner, recipe = _expand(rs, gamma)
    out: dict[LoweringWord, Fraction] = {}
    for w, c in inner.items():
        out[(i,) + w] = out.get((i,) + w, Fraction(0)) + c
        out[w + (i,)] = out.get(w + (i,), Fraction(0)) - c
    return {w: c for w, c in out.items() if c}, (i,) + recipe


def root_map(module: HighestWeightModule, beta: RootVec, nu: tuple[int, ...]):
    """Matrix of the canonical F_beta from the space nu to nu + beta (None if zero)."""
    cache = module.__dict__.setdefault("_root_maps", {})
    key = (beta, nu)
    if key in cache:
        return cache[key]
    rs = module.rs
    target = tuple(a + b for a, b in zip(nu, beta.coords))
    if not module.space(nu).dim or not module.space(target).dim:
        cache[key] = None
        return None
    step = _split(rs, beta)
    if step is None:
        i = next(iter(beta.support))
        result = module.space(target).f_in.get(i)
    else:
        # F_beta = f_i F_gamma - F_gamma f_i
        i, gamma = step
        first = linalg.mul(module.space(target).f_in.get(i), root_map(module, gamma, nu))
        up = _shift(nu, i, +1)
        second = linalg.mul(root_map(module, gamma, up), module.space(up).f_in.get(i))
        result = linalg.add(first, linalg.scale(second, -1))
    if result is not None and result.is_zero_matrix:
        result = None
    cache[key] = result
    return result


def word_map(module: HighestWeightModule, word: LoweringWord, nu: tuple[int, ...]):
    """Matrix of f_(i1) ... f_(ik) from the space nu (None if zero); the last letter acts first."""
    result = None
    cur = nu
    for i in reversed(word):
        up = _shift(cur, i, +1)
        ws = module.space(up)
        f = ws.f_in.get(i) if ws.dim else None
        if f is None:
            return None
        result = f if result is None else f * result
        cur = up
    return result


def _canonical_scale(rs: RootSystem, expr: RootVectorExpr) -> Fraction | None:
    """``expr.scale`` when the expansion is that multiple of the canonical one, else None."""
    canonical = _canonical_expr(rs, expr.beta).expansion
    if expr.expansion == {w: c * expr.scale for w, c in canonical.items()}:
        return expr.scale
    return None


def expr_map(module: HighestWeightModule, expr: RootVectorExpr, nu: tuple[int, ...]):
    """Matrix of ``expr`` from the space nu to nu + beta, summed over its expansion."""
    cache = module.__dict__.setdefault("_expr_maps", {})
    key = (expr.beta, tuple(sorted(expr.expansion.items())), nu)
    if key in cache:
        return cache[key]
    result = None
    for w, c in sorted(expr.expansion.items()):
        result = linalg.add(result, linalg.scale(word_map(module, w, nu), c))
    if result is not None and result.is_zero_matrix:
        result = None
    cache[key] = result
    return result


def apply_root_vector(
    module: HighestWeightModule, expr: RootVectorExpr, v: ModuleVector
) -> ModuleVector:
    target = tuple(a + b for a, b in zip(v.nu, expr.beta.coords))
    if v.is_zero():
        return module.zero_vector(target)
    c = _canonical_scale(module.rs, expr)
    if c is not None:
        m = root_map(module, expr.beta, v.nu)
    else:
        c = Fraction(1)
        m = expr_map(module, expr, v.nu)
    if m is None:
        return module.zero_vector(target)
    out = linalg.column_values(m * linalg.column(v.coords))
    return module.vector(target, [x * c for x in out])


def pbw_monomial_vector(
    module: HighestWeightModule,
    e,
    m: Sequence[int],
    exprs: Sequence[RootVectorExpr] | None = None,
) -> ModuleVector:
    """F_beta1^m1 ... F_betaN^mN v_lambda, the rightmost factor acting first.

    ``exprs`` overrides the root vectors (e.g. rescaled ones); by default the
    canonical commutators of the enumeration's roots are used.
    """
    roots = list(e.roots if hasattr(e, "roots") else e)
    if len(m) != len(roots):
        raise InvalidInputError(f"exponent tuple of length {len(m)} for {len(roots)} roots")
    if exprs is None:
        exprs = [_canonical_expr(module.rs, b) for b in roots]
    target = [0] * module.rs.rank
    for k, b in zip(m, roots):
        for a in range(module.rs.rank):
            target[a] += k * b.coords[a]
    v = module.highest_vector()
    for k in reversed(range(len(roots))):
        for _ in range(m[k]):
            v = apply_root_vector(module, exprs[k], v)
            if v.is_zero():
                return module.zero_vector(target)
    return v
