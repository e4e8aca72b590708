from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from nokwidth.errors import InvalidInputError
from nokwidth.rootsys import CartanType, RootSystem, Weight, as_weight, epsilon_to_fundamental
from nokwidth.weyl import (
    Enumeration,
    enumeration_from_word,
    good_ordering,
    telescope_enumeration,
)

ORDERINGS = ("good", "word", "telescope")


def parse_rationals(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(part.strip()) for part in text.split(",") if part.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise InvalidInputError(f"Cannot parse rational vector {text!r}: {e}") from e


def parse_word(text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    try:
        return tuple(int(part) for part in text.replace(" ", "").split(",") if part)
    except ValueError as e:
        raise InvalidInputError(f"Cannot parse word {text!r}: {e}") from e


@dataclass(frozen=True)
class CaseSpec:
    """One CLI request: type, weight, ordering and level."""

    cartan_type: CartanType
    lam: tuple[Fraction, ...]
    ordering: str = "good"
    word: tuple[int, ...] | None = None
    level: int = 1
    variant: str = "prefix"

    def __post_init__(self) -> None:
        if self.ordering not in ORDERINGS:
            raise InvalidInputError(f"ordering must be one of {ORDERINGS}, got {self.ordering!r}")
        if (self.word is not None) != (self.ordering == "word"):
            raise InvalidInputError("--word is required exactly when --ordering word is used")
        if self.level < 1:
            raise InvalidInputError(f"level must be a positive integer, got {self.level}")

    @classmethod
    def from_args(cls, args) -> CaseSpec:
        t = CartanType(args.type, args.rank)
        lam_text = getattr(args, "lam", None)
        eps_text = getattr(args, "epsilon", None)
        if (lam_text is None) == (eps_text is None):
            raise InvalidInputError("Give exactly one of --lambda and --epsilon")
        if eps_text is not None:
            if t.series != "A":
                raise InvalidInputError("--epsilon coordinates are only defined for type A")
            eps = parse_rationals(eps_text)
            if len(eps) != t.rank + 1:
                raise InvalidInputError(f"A{t.rank} needs {t.rank + 1} epsilon coordinates")
            if any(x.denominator != 1 for x in eps):
                lam = tuple(eps[i] - eps[i + 1] for i in range(t.rank))
            else:
                lam = tuple(Fraction(c) for c in epsilon_to_fundamental(eps).coords)
        else:
            lam = parse_rationals(lam_text)
        word = parse_word(getattr(args, "word", None))
        ordering = getattr(args, "ordering", None) or ("word" if word is not None else "good")
        return cls(
            cartan_type=t,
            lam=lam,
            ordering=ordering,
            word=word,
            level=getattr(args, "level", 1) or 1,
            variant=getattr(args, "variant", "prefix") or "prefix",
        )

    def integral_weight(self, rs: RootSystem) -> Weight:
        return as_weight(rs, self.lam)

    def enumeration(self, rs: RootSystem, lam: Weight) -> Enumeration:
        """The enumeration of Phi_P^+ requested, with P read off supp(lambda)."""
        supp = lam.support or frozenset(rs.indices)
        if self.ordering == "good":
            return good_ordering(rs, supp)
        if self.ordering == "word":
            return enumeration_from_word(rs, supp, self.word or (), self.variant)
        return telescope_enumeration(rs).enumeration
