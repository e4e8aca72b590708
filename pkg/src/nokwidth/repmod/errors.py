from __future__ import annotations

from nokwidth.errors import InternalInvariantError, InvalidInputError


class WeightMismatch(InvalidInputError):
    def __init__(self, expected: tuple[int, ...], got: tuple[int, ...]):
        self.expected = expected
        self.got = got
        super().__init__(f"Vectors live in different weight spaces: {expected} vs {got}")


class DimensionLimitExceeded(InvalidInputError):
    def __init__(self, dim: int, max_dim: int, weight: tuple[int, ...]):
        self.dim = dim
        self.max_dim = max_dim
        self.weight = weight
        super().__init__(
            f"dim V{weight} = {dim} exceeds the limit {max_dim} (raise --max-dim to build it)"
        )


class FormNotPositive(InternalInvariantError):
    def __init__(self, nu: tuple[int, ...], detail: str):
        self.nu = nu
        super().__init__(f"Contravariant form on weight lambda-{nu} is not positive definite: {detail}")
