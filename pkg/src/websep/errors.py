"""Exception hierarchy shared across the package."""


class WebsepError(Exception):
    """Base class for all websep errors."""


class DomainError(WebsepError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class PoleError(DomainError):
    """Evaluation requested too close to a pole of an elliptic quotient."""


class DimensionError(WebsepError, ValueError):
    """Vector or matrix dimensions do not match the ambient space."""


class SelfAdjointnessError(WebsepError, ValueError):
    """An operator is not self-adjoint with respect to the scalar product."""


class ClassificationError(WebsepError):
    """A tensor could not be matched to a canonical form or catalog case."""


class BoundaryError(ClassificationError):
    """Input sits on (or maps to) the boundary between classification cases."""


class OffSurfaceError(WebsepError, ValueError):
    """A point does not lie on the requested hyperquadric."""


class SingularityError(WebsepError, ArithmeticError):
    """Coincident arguments or a singular metric where regularity is required."""


class ChartRangeError(WebsepError, ValueError):
    """Chart coordinates outside the chart's admissible ranges."""


class ConstraintError(WebsepError, ValueError):
    """Chart parameters violate their stated constraints."""


class FactorMembershipError(WebsepError, ValueError):
    """A point is not a member of the warped-product factor it was passed as."""


class EmptyRestrictionError(WebsepError):
    """The geodesic factor does not meet the requested hyperquadric."""


class IrreducibleError(WebsepError):
    """Warped-product construction requested for an irreducible tensor."""


class CatalogError(WebsepError):
    """Catalog data is missing, malformed, or internally inconsistent."""
