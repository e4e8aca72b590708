class NokWidthError(RuntimeError):
    """Base error for nokwidth. ``exit_code`` is what the CLI returns."""

    exit_code = 3


class InvalidInputError(NokWidthError):
    """The request itself is malformed or outside a precondition."""

    exit_code = 2


class InternalInvariantError(NokWidthError):
    """A computed object broke an invariant the mathematics guarantees."""

    exit_code = 3
