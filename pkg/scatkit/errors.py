"""Domain errors. All derive from ValueError so callers can catch them broadly."""


class ScatkitError(ValueError):
    """Base class for every error raised by the engine."""


class NotUnimodularError(ScatkitError):
    """An integer matrix with determinant other than +1 or -1."""


class FactorizationMismatchError(ScatkitError):
    """PL(e1) composed after PL(e2)^d2 does not reproduce the requested monodromy."""


class ZeroToNegativePowerError(ScatkitError):
    """A zero rational function raised to a negative power."""


class PairingNotOneError(ScatkitError):
    """Pentagon input whose pairing <gamma', gamma> is not 1."""


class NonPrimitiveError(ScatkitError):
    """A lattice vector that is zero or a proper multiple of another."""


class NotExactError(ScatkitError):
    """An exact operation (division, integrality) has a remainder."""


class SeriesDomainError(ScatkitError):
    """exp/log called outside their formal domain."""


class QuadratureError(ScatkitError):
    """Numeric quadrature failed to converge within tolerance."""


class GhkUnavailableError(ScatkitError):
    """Curve-class coefficients are not known for this case."""


class RenderError(ScatkitError):
    """SVG output could not be written."""


class InconsistentDiagramError(ScatkitError):
    """The full loop of wall crossings and the monodromy twist is not the identity."""
