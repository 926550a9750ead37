"""Exception types shared across the package."""


class OrdconicError(Exception):
    """Base class for all library errors."""


class DegenerateInput(OrdconicError):
    """Input violates a structural requirement (coincident points, zero vector, ...)."""


class PreconditionViolated(OrdconicError):
    """A stated precondition of an operation does not hold for the given input."""


class NotInGenericLocus(OrdconicError):
    """Point lies on a contracted line of a Cremona transformation."""


class ContractedCurve(OrdconicError):
    """The curve is collapsed to a point by the transformation (degree drops to 0)."""


class UnsupportedField(OrdconicError):
    """Operation is not available over the requested ground field."""


class UnsupportedDegree(OrdconicError):
    """Curve degree outside the supported range."""


class InternalInvariantViolation(OrdconicError):
    """A condition that is provably impossible was observed; indicates a bug or misuse."""


class GenerationFailed(OrdconicError):
    """A point-set generator exhausted its retry budget."""


class RenderError(OrdconicError):
    """Figure rendering is impossible for the given input (e.g. no finite points)."""
