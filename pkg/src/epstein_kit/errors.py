"""Exception hierarchy shared by the geometry modules."""


class GeometryError(ValueError):
    """Base class for invalid geometric input."""


class DomainError(GeometryError):
    """A point lies outside the domain an operation is defined on."""


class CriticalPointError(GeometryError):
    """A map has vanishing derivative where local univalence is required."""


class EnvelopeDegenerateError(GeometryError):
    """The horosphere envelope system has no nondegenerate solution."""


class UnsupportedError(GeometryError):
    """The requested combination of domain/map is not handled."""


class EvaluationError(ArithmeticError):
    """A sampled quantity came out non-finite."""


class NonConvergenceError(ArithmeticError):
    """An iterative procedure or quadrature failed to converge.

    ``best`` carries the best value found so far, when there is one.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best
