"""Exception hierarchy shared by every module."""


class JordanDerivError(Exception):
    """Base class for all errors raised by this package."""


class InputError(JordanDerivError, ValueError):
    """Malformed or mismatched input (wrong ring, wrong algebra, bad JSON)."""


class NotClosed(InputError):
    def __init__(self, pair, message):
        self.pair = pair
        super().__init__(f"basis not closed under multiplication at pair {pair}: {message}")


class IdentityNotInSpan(InputError):
    pass


class PatternAlgebraUnsupported(InputError):
    pass


class WrongAlgebra(InputError):
    pass


class NotJordan(JordanDerivError):
    pass


class NotApplicable(JordanDerivError):
    pass


class WitnessPreconditionError(JordanDerivError):
    pass


class NonPrimeModulus(InputError):
    pass


class BudgetExceeded(JordanDerivError):
    pass


class InfiniteRing(InputError):
    pass
