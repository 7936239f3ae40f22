"""Exception types raised by rowconvex."""


class LimitExceededError(ValueError):
    """An exponential-time computation was asked for an ``n`` above its hard limit."""

    def __init__(self, what, n, limit):
        self.what = what
        self.n = n
        self.limit = limit
        super().__init__(f"{what}: n={n} exceeds the limit {limit}")


class NumericalError(ArithmeticError):
    """A numerical routine failed to reach its tolerance."""


class UnsupportedCaseError(ValueError):
    """The input falls outside what the routine supports (e.g. a repeated pole)."""
