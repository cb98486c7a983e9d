"""Exception types shared across the package."""


class CodeDistError(Exception):
    """Base class for all errors raised by codedist."""


class NotPrime(CodeDistError, ValueError):
    pass


class DegreeTooLarge(CodeDistError, ValueError):
    pass


class NoConwayPolynomial(CodeDistError, ValueError):
    pass


class IncompatibleFields(CodeDistError, ValueError):
    pass


class DivisionByZero(CodeDistError, ZeroDivisionError):
    pass


class BudgetExceeded(CodeDistError, RuntimeError):
    """Raised when an enumeration would exceed the configured work budget.

    ``estimated`` is the number of weight evaluations the operation asked
    for, ``budget`` the number still available when it was refused.
    """

    def __init__(self, estimated, budget, what=""):
        self.estimated = int(estimated)
        self.budget = int(budget)
        self.what = what
        msg = f"estimated {self.estimated} weight evaluations exceeds remaining budget {self.budget}"
        if what:
            msg = f"{what}: {msg}"
        super().__init__(msg)


class LengthMismatch(CodeDistError, ValueError):
    pass


class UnsupportedDual(CodeDistError, ValueError):
    pass


class NoDependentSubset(CodeDistError, ValueError):
    pass


class PositionOutOfRange(CodeDistError, IndexError):
    pass


class DuplicatePoints(CodeDistError, ValueError):
    pass


class KTooLarge(CodeDistError, ValueError):
    pass


class DependentPolynomials(CodeDistError, ValueError):
    pass


class DependentPoints(CodeDistError, ValueError):
    pass


class DimensionOrder(CodeDistError, ValueError):
    pass


class UnknownName(CodeDistError, KeyError):
    pass


class LevelSetOverflow(CodeDistError, RuntimeError):
    pass


class NotApplicable(CodeDistError, ValueError):
    pass


class RankDeficient(CodeDistError, ValueError):
    pass


class NotInvertible(RankDeficient):
    pass


class NotABasis(CodeDistError, ValueError):
    pass


class AmbientMismatch(CodeDistError, ValueError):
    pass


class ParseError(CodeDistError, ValueError):
    def __init__(self, line, reason):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class RouteDisagreement(CodeDistError, AssertionError):
    """Two independent computations of the same invariant disagreed."""


class UnknownConstruction(CodeDistError, ValueError):
    """No construction of that name."""


class BadParams(CodeDistError, ValueError):
    """Construction parameters are missing or out of range."""
