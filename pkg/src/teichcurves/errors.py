"""Exception hierarchy shared by all modules."""


class TeichError(Exception):
    """Base class for all errors raised by this package."""


class IncompatibleCongruence(TeichError):
    """Two congruences conflict on a common factor of their moduli."""


class IndexOutOfRange(TeichError):
    """Character index outside the open interval (0, N)."""


class TrivialFiltration(TeichError):
    """Hodge filtration of the requested eigenspace is trivial (k(i) != 1)."""


class DegeneratePoint(TeichError):
    """Local exponent normalization n_c = 0 where n_c >= 1 is required."""


class InvalidParams(TeichError):
    """Parameters outside the domain of the construction."""


class HypothesisUnmet(TeichError):
    """Parameters do not satisfy the hypotheses of the certified statement."""


class IrrationalAngle(TeichError):
    """Polygon angle is not a rational multiple of pi."""


class SelfCrossing(TeichError):
    """Polygon has self-crossings and cannot serve as a billiard table."""


class QuadratureFailure(TeichError):
    """Numerical integration did not reach the requested tolerance."""


class DomainError(TeichError):
    """Argument outside the domain of a special function."""


class DegenerateEdge(TeichError):
    """Zero-length edge encountered in a polygon predicate."""
