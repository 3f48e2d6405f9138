"""Exception hierarchy shared by every module."""


class ZonodeepError(Exception):
    pass


class DomainError(ZonodeepError, ValueError):
    """An argument lies outside the domain of the operation."""


class SingularMatrix(ZonodeepError, ArithmeticError):
    pass


class RankDeficient(ZonodeepError, ArithmeticError):
    pass


class NotInterior(DomainError):
    pass


class NoInteriorPoint(DomainError):
    pass


class NotOnBoundary(DomainError):
    pass


class InstanceTooLarge(ZonodeepError):
    """Raised instead of starting an enumeration that would not finish."""


class BudgetExceeded(InstanceTooLarge):
    pass
