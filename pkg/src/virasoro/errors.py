"""Exception types shared by all engine modules."""


class VirasoroError(Exception):
    """Base class for every error raised by this package."""


class DivisionByZero(VirasoroError):
    """Division by the zero element of Q or Q(t)."""


class PoleAtEvaluationPoint(VirasoroError):
    """A rational function was evaluated at a root of its denominator."""


class NotLaurent(VirasoroError):
    """The rational function is not a Laurent polynomial (denominator not c*t^m)."""


class SizeCapExceeded(VirasoroError):
    """A composition enumeration would exceed the configured size cap."""


class Inhomogeneous(VirasoroError):
    """A mixed-level element was passed where a homogeneous one is required."""


class NormalizationFailure(VirasoroError):
    """The coefficient used for normalization vanishes."""


class UnsupportedLabel(VirasoroError):
    """No closed form is implemented for this (p, q) label (needs min(p, q) <= 2)."""
