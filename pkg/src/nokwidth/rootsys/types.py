from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidType

SERIES = ("A", "B", "C", "D", "E", "F", "G")


@dataclass(frozen=True)
class CartanType:
    """Classification parameter of a simple Lie algebra, e.g. ``B3``."""

    series: str
    rank: int

    def __post_init__(self) -> None:
        series = str(self.series).upper()
        object.__setattr__(self, "series", series)
        rank = self.rank
        if series not in SERIES:
            raise InvalidType(series, rank, "unknown series")
        if not isinstance(rank, int) or rank < 1:
            raise InvalidType(series, rank, "rank must be a positive integer")
        ok = {
            "A": rank >= 1,
            "B": rank >= 2,
            "C": rank >= 2,
            "D": rank >= 4,
            "E": rank in (6, 7, 8),
            "F": rank == 4,
            "G": rank == 2,
        }[series]
        if not ok:
            raise InvalidType(series, rank, "rank out of range for this series")

    @classmethod
    def parse(cls, text: str) -> CartanType:
        s = text.strip()
        if len(s) < 2 or not s[1:].isdigit():
            raise InvalidType(s[:1] or "?", 0, f"cannot parse {text!r}")
        return cls(s[0], int(s[1:]))

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"


@dataclass(frozen=True, order=True)
class RootVec:
    """Element of the root lattice, coordinates in the simple-root basis."""

    coords: tuple[int, ...]

    @classmethod
    def simple(cls, rank: int, i: int) -> RootVec:
        """The simple root alpha_i (1-based index)."""
        return cls(tuple(1 if k == i - 1 else 0 for k in range(rank)))

    @property
    def height(self) -> int:
        return sum(self.coords)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(k + 1 for k, c in enumerate(self.coords) if c)

    def is_positive(self) -> bool:
        return any(self.coords) and all(c >= 0 for c in self.coords)

    def __add__(self, other: RootVec) -> RootVec:
        return RootVec(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: RootVec) -> RootVec:
        return RootVec(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> RootVec:
        return RootVec(tuple(-a for a in self.coords))

    def scaled(self, k: int) -> RootVec:
        return RootVec(tuple(k * a for a in self.coords))

    def label(self) -> str:
        parts = []
        for k, c in enumerate(self.coords):
            if c == 1:
                parts.append(f"a{k + 1}")
            elif c:
                parts.append(f"{c}a{k + 1}")
        return "+".join(parts) if parts else "0"


@dataclass(frozen=True)
class Weight:
    """Integral weight, coordinates <lambda, alpha_i^vee> in the fundamental basis."""

    coords: tuple[int, ...]

    @classmethod
    def fundamental(cls, rank: int, i: int) -> Weight:
        return cls(tuple(1 if k == i - 1 else 0 for k in range(rank)))

    @classmethod
    def rho(cls, rank: int) -> Weight:
        return cls((1,) * rank)

    @property
    def rank(self) -> int:
        return len(self.coords)

    @property
    def support(self) -> frozenset[int]:
        """supp(lambda): 1-based indices of the nonzero coordinates."""
        return frozenset(k + 1 for k, c in enumerate(self.coords) if c)

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def is_regular(self) -> bool:
        return all(c > 0 for c in self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other: Weight) -> Weight:
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: Weight) -> Weight:
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def scaled(self, k: int) -> Weight:
        return Weight(tuple(k * a for a in self.coords))


@dataclass(frozen=True)
class RootSystem:
    """Cartan data plus the positive roots in canonical order.

    ``cartan[i][j] = <alpha_j, alpha_i^vee>`` (0-based storage), ``sym[i]`` is
    half the squared length of alpha_i, scaled to the smallest integers.
    """

    cartan_type: CartanType
    cartan: tuple[tuple[int, ...], ...]
    sym: tuple[int, ...]
    positive_roots: tuple[RootVec, ...]

    def __hash__(self) -> int:
        # the Cartan type determines everything else
        return hash(self.cartan_type)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(range(1, self.rank + 1))

    def simple_root(self, i: int) -> RootVec:
        return RootVec.simple(self.rank, i)

    def is_positive_root(self, beta: RootVec) -> bool:
        return beta in self._root_set

    def is_root(self, beta: RootVec) -> bool:
        return beta in self._root_set or (-beta) in self._root_set

    @property
    def _root_set(self) -> frozenset[RootVec]:
        cached = self.__dict__.get("_roots_cache")
        if cached is None:
            cached = frozenset(self.positive_roots)
            object.__setattr__(self, "_roots_cache", cached)
        return cached

    def coroot(self, beta: RootVec) -> tuple[int, ...]:
        """beta^vee in the simple-coroot basis: c_i d_i / d_beta, always integral."""
        cache = self.__dict__.setdefault("_coroot_cache", {})
        hit = cache.get(beta)
        if hit is None:
            d_beta = self.half_length(beta)
            coeffs = [Fraction(c * d, 1) / d_beta for c, d in zip(beta.coords, self.sym)]
            hit = tuple(int(x) for x in coeffs)
            if any(x.denominator != 1 for x in coeffs):
                raise ValueError(f"non-integral coroot for {beta.coords}")
            cache[beta] = hit
        return hit

    def simple_pairing(self, coords: tuple[int, ...], i: int) -> int:
        """<beta, alpha_i^vee> for beta given in simple-root coordinates."""
        row = self.cartan[i - 1]
        return sum(c * a for c, a in zip(coords, row))

    def inner(self, x: tuple[int, ...], y: tuple[int, ...]) -> int:
        """Symmetrized form (x, y) on root-lattice coordinates."""
        n = self.rank
        return sum(
            x[i] * y[j] * self.sym[i] * self.cartan[i][j]
            for i in range(n)
            if x[i]
            for j in range(n)
            if y[j]
        )

    def half_length(self, beta: RootVec) -> Fraction:
        """d_beta = (beta, beta) / 2."""
        return Fraction(self.inner(beta.coords, beta.coords), 2)

    def root_to_weight(self, nu: tuple[int, ...]) -> Weight:
        """sum nu_i alpha_i expressed in fundamental-weight coordinates."""
        return Weight(tuple(self.simple_pairing(nu, j) for j in self.indices))


@dataclass(frozen=True)
class RhoPDecomposition:
    """lambda = k rho_P + remainder with remainder dominant and supp(remainder) in supp(lambda)."""

    k: int
    rho_p: Weight
    remainder: Weight
