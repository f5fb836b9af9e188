"""Exception types shared across the package."""


class DegenerateInput(ValueError):
    """Input is geometrically degenerate (affinely dependent points,
    zero volume, collapsed construction)."""


class InvalidApexPair(ValueError):
    """The requested vertex pair does not satisfy the apex-pair conditions."""


class NotOctahedralType(ValueError):
    """Triangulation is not combinatorially an octahedron."""


class DomainError(ValueError):
    """Argument outside the mathematical domain of the operation."""


class IntervalOverflow(ArithmeticError):
    """An interval endpoint left the finite double range."""


class BudgetExceeded(RuntimeError):
    """A certification run hit its box/depth/time budget.

    Carries the partial certificate in ``.certificate`` when available."""

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class CertificationFailed(RuntimeError):
    """A claim failed to certify; ``.report`` holds details when available."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
