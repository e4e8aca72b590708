from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from nokwidth.rootsys import Weight
from nokwidth.weyl import Enumeration

ExponentTuple = tuple[int, ...]


@dataclass(frozen=True)
class TupleInfo:
    """Where an essential tuple lands and its position in its weight class scan."""

    nu: tuple[int, ...]
    scan_index: int


@dataclass(frozen=True)
class EssentialSet:
    lam: Weight
    enumeration: Enumeration
    tuples: frozenset[ExponentTuple]
    info: dict[ExponentTuple, TupleInfo] = field(default_factory=dict, compare=False, hash=False)

    def __len__(self) -> int:
        return len(self.tuples)

    def __contains__(self, m: object) -> bool:
        return tuple(m) in self.tuples  # type: ignore[arg-type]

    def sorted_tuples(self) -> list[ExponentTuple]:
        """Ascending right-lex."""
        return sorted(self.tuples, key=lambda m: tuple(reversed(m)))


@dataclass(frozen=True)
class SparseExponentPolynomial:
    """Polynomial in x_beta1..x_betaN; zero coefficients are never stored."""

    terms: dict[ExponentTuple, Fraction] = field(default_factory=dict, hash=False)

    def __post_init__(self) -> None:
        clean = {tuple(m): Fraction(c) for m, c in self.terms.items() if c}
        object.__setattr__(self, "terms", clean)

    @classmethod
    def monomial(cls, m: ExponentTuple, c: Fraction | int = 1) -> SparseExponentPolynomial:
        return cls({tuple(m): Fraction(c)})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: SparseExponentPolynomial) -> SparseExponentPolynomial:
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return SparseExponentPolynomial(out)

    def __mul__(self, other: SparseExponentPolynomial) -> SparseExponentPolynomial:
        out: dict[ExponentTuple, Fraction] = {}
        for m, a in self.terms.items():
            for k, b in other.terms.items():
                key = tuple(x + y for x, y in zip(m, k))
                out[key] = out.get(key, Fraction(0)) + a * b
        return SparseExponentPolynomial(out)
