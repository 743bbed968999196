"""Exception hierarchy.

Input problems (malformed or inconsistent data) derive from ``InputError``;
numeric failures (overflow, empty fit tails) from ``NumericError``. The CLI
maps the two families onto distinct exit codes.
"""


class FibbinError(Exception):
    pass


class InputError(FibbinError, ValueError):
    pass


class EmptyInputError(InputError):
    pass


class OffsetError(InputError):
    """An abscissa lies below the starting offset."""

    def __init__(self, value, offset):
        super().__init__(f"abscissa {value} is below the starting offset {offset}")
        self.value = value
        self.offset = offset


class DuplicateAbscissaError(InputError):
    def __init__(self, value):
        super().__init__(f"duplicate abscissa {value}")
        self.value = value


class NegativeWeightError(InputError):
    def __init__(self, abscissa, weight):
        super().__init__(f"negative weight {weight} at abscissa {abscissa}")
        self.abscissa = abscissa
        self.weight = weight


class InvalidRangeError(InputError):
    pass


class NumericError(FibbinError, ArithmeticError):
    pass


class DomainError(NumericError, ValueError):
    """A parameter lies outside the domain of a law or function."""


class InvalidSpecError(DomainError):
    pass


class FibonacciOverflowError(NumericError, OverflowError):
    pass


class EmptyTailError(NumericError):
    pass


class TooFewPointsError(NumericError):
    pass
