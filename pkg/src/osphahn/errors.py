"""Exception types shared across the package."""


class OspHahnError(Exception):
    """Base class for all package errors."""


class PoleInDenominator(OspHahnError, ZeroDivisionError):
    pass


class SingularPoint(OspHahnError, ValueError):
    pass


class IndexOutOfRange(OspHahnError, IndexError):
    pass


class InvalidParameters(OspHahnError, ValueError):
    pass


class InvalidTruncation(OspHahnError, ValueError):
    pass


class InvalidQuantumNumbers(OspHahnError, ValueError):
    pass


class DomainError(OspHahnError, ValueError):
    pass


class QuadratureNotConverged(OspHahnError, RuntimeError):
    pass


class DegenerateBlock(OspHahnError, RuntimeError):
    pass
