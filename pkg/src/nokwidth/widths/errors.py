from __future__ import annotations

from nokwidth.errors import InternalInvariantError, InvalidInputError


class NotRegular(InvalidInputError):
    def __init__(self, coords: tuple[int, ...], construction: str):
        self.coords = coords
        self.construction = construction
        super().__init__(f"The {construction} construction needs regular lambda, got {coords}")


class Disagreement(InternalInvariantError):
    """Two independent computations of the same quantity differ."""

    def __init__(self, what: str, left: object, right: object):
        self.what = what
        self.left = left
        self.right = right
        super().__init__(f"{what}: {left} != {right}")
