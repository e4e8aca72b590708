from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field

from nokwidth.rootsys import RootVec

Matrix = tuple[tuple[int, ...], ...]

PROVENANCES = ("good", "word-prefix", "word-suffix", "telescope")


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n) if a[i][k]) for j in range(n))
        for i in range(n)
    )


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element, compared by its action on weight coordinates.

    ``matrix`` acts on fundamental-weight coordinates, ``root_matrix`` on
    simple-root coordinates; ``word`` is the expression it was built from
    (not necessarily reduced).
    """

    matrix: Matrix
    root_matrix: Matrix = field(compare=False)
    word: tuple[int, ...] = field(default=(), compare=False)

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def is_identity(self) -> bool:
        return self.matrix == identity_matrix(self.rank)

    def act_weight(self, coords: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(sum(r * c for r, c in zip(row, coords)) for row in self.matrix)

    def act_root(self, beta: RootVec) -> RootVec:
        return RootVec(
            tuple(sum(r * c for r, c in zip(row, beta.coords)) for row in self.root_matrix)
        )

    def __mul__(self, other: WeylElement) -> WeylElement:
        return WeylElement(
            matrix=matmul(self.matrix, other.matrix),
            root_matrix=matmul(self.root_matrix, other.root_matrix),
            word=self.word + other.word,
        )


@dataclass(frozen=True)
class ReducedWord:
    letters: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __add__(self, other: ReducedWord) -> ReducedWord:
        return ReducedWord(self.letters + other.letters)

    def reversed(self) -> ReducedWord:
        return ReducedWord(tuple(reversed(self.letters)))


@dataclass(frozen=True)
class Enumeration:
    """An ordering beta_1..beta_N of Phi_P^+ together with where it came from."""

    roots: tuple[RootVec, ...]
    provenance: str
    support: tuple[int, ...]
    cartan_type: str
    word: ReducedWord | None = None
    relabeling: tuple[int, ...] | None = None

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self) -> Iterator[RootVec]:
        return iter(self.roots)

    def index_of(self, beta: RootVec) -> int:
        """1-based position of ``beta``."""
        return self.roots.index(beta) + 1


@dataclass(frozen=True)
class Telescope:
    """Levi telescope data: the enumeration plus everything used to certify it."""

    enumeration: Enumeration
    relabeling: tuple[int, ...]
    tau_words: tuple[ReducedWord, ...]
    block_words: tuple[ReducedWord, ...]
    # shells[k] = j when beta_(k+1) is a root of l_j but not of l_(j-1)
    shells: tuple[int, ...]
    cominuscule: tuple[bool, ...]

    def shell_positions(self, j: int) -> tuple[int, ...]:
        """1-based positions of the j-th shell."""
        return tuple(k + 1 for k, s in enumerate(self.shells) if s == j)
