"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain an operation is defined on."""


class ParseError(ValueError):
    """A numeral literal could not be parsed.

    ``position`` is the 0-based offset of the offending character in the
    original text, or ``None`` when the problem is not tied to one character
    (an empty literal, for instance).
    """

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class UnsupportedEvaluation(ArithmeticError):
    """An exact evaluation would leave the rationals (e.g. 2 ** (1/2))."""
