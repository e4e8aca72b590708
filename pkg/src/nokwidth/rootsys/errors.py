from __future__ import annotations

from nokwidth.errors import InvalidInputError


class InvalidType(InvalidInputError):
    """Cartan type outside the classification (bad series or rank)."""

    def __init__(self, series: str, rank: int, reason: str):
        self.series = series
        self.rank = rank
        self.reason = reason
        super().__init__(f"Invalid Cartan type {series}{rank}: {reason}")


class NotARoot(InvalidInputError):
    def __init__(self, coords: tuple[int, ...]):
        self.coords = coords
        super().__init__(f"Not a root of this root system: {coords}")


class ZeroWeight(InvalidInputError):
    def __init__(self, message: str = "The zero weight has no Gromov width"):
        super().__init__(message)


class EmptySupport(InvalidInputError):
    def __init__(self):
        super().__init__("Support must be a nonempty set of simple indices")


class NotDominant(InvalidInputError):
    def __init__(self, coords: tuple, message: str | None = None):
        self.coords = coords
        super().__init__(message or f"Weight is not dominant: {coords}")


class NotIntegral(InvalidInputError):
    def __init__(self, coords: tuple):
        self.coords = coords
        shown = ",".join(str(c) for c in coords)
        super().__init__(f"Weight is not integral: ({shown})")


class RankMismatch(InvalidInputError):
    def __init__(self, expected: int, got: int):
        self.expected = expected
        self.got = got
        super().__init__(f"Expected {expected} coordinates, got {got}")
