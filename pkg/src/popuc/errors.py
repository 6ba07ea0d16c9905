"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument violates a documented mathematical precondition."""


class PreconditionError(ValueError):
    """A structural hypothesis fails; carries the offending indices."""

    def __init__(self, message, indices=()):
        super().__init__(message)
        self.indices = tuple(indices)


class PatternError(ValueError):
    """A matrix does not have the required sign pattern."""


class PoleError(ArithmeticError):
    """A rational expression was evaluated at (or too close to) a pole."""


class ConvergenceError(RuntimeError):
    """An iteration did not converge; carries the best iterate found."""

    def __init__(self, message, best=None, residuals=None):
        super().__init__(message)
        self.best = best
        self.residuals = residuals
