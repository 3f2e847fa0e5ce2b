"""Exception hierarchy shared by the library and the CLI."""


class SigcayleyError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(SigcayleyError, ValueError):
    """An argument is outside the operation's domain."""


class InvalidPrimeError(InvalidInputError):
    pass


class DivisibilityError(InvalidInputError):
    pass


class GateError(SigcayleyError, RuntimeError):
    """An exhaustive oracle refused a graph larger than its size gate."""

    def __init__(self, what: str, size: int, limit: int) -> None:
        super().__init__(f"{what}: graph has {size} vertices, gate is {limit}")
        self.size = size
        self.limit = limit


class NotApplicableError(SigcayleyError, ValueError):
    pass
