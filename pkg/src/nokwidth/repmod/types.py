from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from nokwidth.errors import InvalidInputError
from nokwidth.rootsys import RootVec, Weight

# f_(i1) f_(i2) ... f_(ik) v_lambda; the last letter acts first
LoweringWord = tuple[int, ...]


@dataclass(frozen=True)
class ModuleVector:
    """Vector of V(lambda) in the stored basis of its weight space.

    ``nu`` is lambda - weight in simple-root coordinates; ``words`` are the
    basis words of that space and ``coords`` the exact coordinates.
    """

    weight: Weight
    nu: tuple[int, ...]
    words: tuple[LoweringWord, ...]
    coords: tuple[Fraction, ...]

    @property
    def terms(self) -> dict[LoweringWord, Fraction]:
        return {w: c for w, c in zip(self.words, self.coords) if c}

    def is_zero(self) -> bool:
        return not any(self.coords)


@dataclass(frozen=True)
class WeightSpace:
    """Basis words and Gram matrix of one weight space (internal storage).

    ``f_in[i]`` maps the space nu - alpha_i into this one, ``e_out[i]`` maps
    this space to nu - alpha_i; both are None when the map is zero.
    """

    nu: tuple[int, ...]
    words: tuple[LoweringWord, ...]
    gram: object | None
    f_in: dict[int, object] = field(default_factory=dict)
    e_out: dict[int, object] = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return len(self.words)


@dataclass(frozen=True)
class RootVectorExpr:
    """A generator of g_(-beta) as a combination of words in the f_i.

    The action sums the words of ``expansion``. ``scale`` and ``recipe`` track
    how far a canonical commutator has been rescaled, so the common case can
    reuse the memoized commutator maps.
    """

    beta: RootVec
    expansion: dict[LoweringWord, Fraction] = field(hash=False, compare=False)
    scale: Fraction = Fraction(1)
    recipe: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not any(self.expansion.values()):
            raise InvalidInputError(f"empty expansion for the root {self.beta.coords}")
        for w in self.expansion:
            content = tuple(w.count(i) for i in range(1, len(self.beta.coords) + 1))
            if content != self.beta.coords:
                raise InvalidInputError(
                    f"word {w} has weight {content}, not the root {self.beta.coords}"
                )

    def rescaled(self, c: Fraction | int) -> RootVectorExpr:
        c = Fraction(c)
        if c == 0:
            raise ValueError("Root vectors must stay nonzero")
        return RootVectorExpr(
            beta=self.beta,
            expansion={w: v * c for w, v in self.expansion.items()},
            scale=self.scale * c,
            recipe=self.recipe,
        )
