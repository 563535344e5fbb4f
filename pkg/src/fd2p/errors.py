class ConfigError(ValueError):
    """Invalid (p, n, f) or other user-supplied parameters."""


class ContextError(ValueError):
    """Operands live in different fields/algebras or ambient spaces."""


class NotAUnit(ArithmeticError):
    pass


class DomainError(ArithmeticError):
    """Input outside the domain of a partial map (e.g. truncated log)."""


class BoundExceeded(RuntimeError):
    """An enumeration would exceed its size bound.

    ``count`` is the number of elements seen (or predicted) when it stopped.
    """

    def __init__(self, message: str, count: int):
        super().__init__(message)
        self.count = count
