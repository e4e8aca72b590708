from __future__ import annotations

from nokwidth.errors import InternalInvariantError, InvalidInputError


class InvalidSimpleIndex(InvalidInputError):
    def __init__(self, index: int, rank: int):
        self.index = index
        self.rank = rank
        super().__init__(f"Simple index {index} out of range 1..{rank}")


class NotReduced(InvalidInputError):
    """The word (with the Levi longest word attached) is not a reduced word for w0."""

    def __init__(self, letters: tuple[int, ...], reason: str):
        self.letters = letters
        self.reason = reason
        super().__init__(f"Word {letters} is not a reduced decomposition: {reason}")


class UnsupportedType(InvalidInputError):
    def __init__(self, cartan_type: str, reason: str = "no Levi telescope for this type"):
        self.cartan_type = cartan_type
        super().__init__(f"{cartan_type}: {reason}")


class NotBijective(InternalInvariantError):
    def __init__(self, roots: tuple, detail: str):
        self.roots = roots
        super().__init__(f"Enumeration is not a bijection onto Phi_P^+: {detail}")


class InternalInvariant(InternalInvariantError):
    def __init__(self, check: str, detail: str):
        self.check = check
        self.detail = detail
        super().__init__(f"{check} failed: {detail}")
