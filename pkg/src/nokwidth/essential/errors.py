from __future__ import annotations

from nokwidth.errors import InvalidInputError


class LengthMismatch(InvalidInputError):
    def __init__(self, left: int, right: int):
        self.left = left
        self.right = right
        super().__init__(f"Exponent tuples of different lengths: {left} vs {right}")


class SupportMismatch(InvalidInputError):
    def __init__(self, weight_support: tuple[int, ...], enumeration_support: tuple[int, ...]):
        self.weight_support = weight_support
        self.enumeration_support = enumeration_support
        super().__init__(
            f"supp(lambda)={weight_support} is not contained in the enumeration support "
            f"{enumeration_support}"
        )


class EnumerationMismatch(InvalidInputError):
    def __init__(self, detail: str):
        self.detail = detail
        super().__init__(f"Essential sets are not comparable: {detail}")


class ZeroPolynomial(InvalidInputError):
    def __init__(self):
        super().__init__("The zero polynomial has no valuation")
