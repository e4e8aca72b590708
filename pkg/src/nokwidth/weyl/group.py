from __future__ import annotations

from collections.abc import Iterable, Sequence

from nokwidth.rootsys import RootSystem, RootVec, Weight, levi_positive_roots

from .errors import InvalidSimpleIndex
from .types import Matrix, ReducedWord, WeylElement, identity_matrix


def _check_index(rs: RootSystem, i: int) -> None:
    if not 1 <= i <= rs.rank:
        raise InvalidSimpleIndex(i, rs.rank)


def _reflection_matrices(rs: RootSystem, i: int) -> tuple[Matrix, Matrix]:
    cache = rs.__dict__.setdefault("_reflection_cache", {})
    hit = cache.get(i)
    if hit is None:
        n = rs.rank
        a = rs.cartan
        k = i - 1
        # weights: new_j = lambda_j - lambda_i A[j][i]
        weight = tuple(
            tuple((1 if r == c else 0) - (a[r][k] if c == k else 0) for c in range(n))
            for r in range(n)
        )
        # roots: new_i = c_i - sum_j A[i][j] c_j
        root = tuple(
            tuple((1 if r == c else 0) - (a[k][c] if r == k else 0) for c in range(n))
            for r in range(n)
        )
        hit = cache[i] = (weight, root)
    return hit


def identity(rs: RootSystem) -> WeylElement:
    eye = identity_matrix(rs.rank)
    return WeylElement(matrix=eye, root_matrix=eye, word=())


def simple_element(rs: RootSystem, i: int) -> WeylElement:
    _check_index(rs, i)
    weight, root = _reflection_matrices(rs, i)
    return WeylElement(matrix=weight, root_matrix=root, word=(i,))


def simple_reflection(rs: RootSystem, i: int, v: Weight | RootVec) -> Weight | RootVec:
    """s_i applied to a weight (fundamental coordinates) or a root-lattice vector."""
    s = simple_element(rs, i)
    if isinstance(v, Weight):
        return Weight(s.act_weight(v.coords))
    return s.act_root(v)


def element_from_word(rs: RootSystem, letters: Iterable[int]) -> WeylElement:
    w = identity(rs)
    for i in letters:
        w = w * simple_element(rs, i)
    return w


def inverse(rs: RootSystem, w: WeylElement) -> WeylElement:
    return element_from_word(rs, reversed(reduced_word(rs, w).letters))


def _is_negative(beta: RootVec) -> bool:
    return any(c < 0 for c in beta.coords)


def length(rs: RootSystem, w: WeylElement) -> int:
    """Number of positive roots sent to negative roots."""
    return sum(1 for b in rs.positive_roots if _is_negative(w.act_root(b)))


def is_reduced(rs: RootSystem, letters: Sequence[int]) -> bool:
    """Each letter must be an ascent: l(w s_i) > l(w) iff w(alpha_i) > 0."""
    w = identity(rs)
    for i in letters:
        _check_index(rs, i)
        if _is_negative(w.act_root(rs.simple_root(i))):
            return False
        w = w * simple_element(rs, i)
    return True


def reduced_word(rs: RootSystem, w: WeylElement) -> ReducedWord:
    """Reduced word for ``w`` by peeling right descents, smallest index first."""
    peeled: list[int] = []
    cur = w
    while not cur.is_identity():
        i = next(k for k in rs.indices if _is_negative(cur.act_root(rs.simple_root(k))))
        peeled.append(i)
        cur = cur * simple_element(rs, i)
    return ReducedWord(tuple(reversed(peeled)))


def longest_element(rs: RootSystem, S: Iterable[int]) -> tuple[WeylElement, ReducedWord]:
    """Longest element of the parabolic subgroup W_S by greedy ascent."""
    s = sorted(set(S))
    for i in s:
        _check_index(rs, i)
    w = identity(rs)
    while True:
        i = next((k for k in s if not _is_negative(w.act_root(rs.simple_root(k)))), None)
        if i is None:
            break
        w = w * simple_element(rs, i)
    word = ReducedWord(w.word)
    assert len(word) == len(levi_positive_roots(rs, s))
    return w, word
