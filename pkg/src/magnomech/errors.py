"""Exception hierarchy for the magnomech package."""


class MagnomechError(Exception):
    """Base class for all package-specific errors."""


class NonPositiveRate(MagnomechError):
    """A dissipation rate that must be strictly positive is not."""

    def __init__(self, field, value):
        self.field = field
        self.value = value
        super().__init__(f"rate '{field}' must be > 0, got {value}")


class NegativeOccupation(MagnomechError):
    """Mean thermal occupation below zero."""

    def __init__(self, value):
        self.value = value
        super().__init__(f"thermal occupation must be >= 0, got {value}")


class NonPositiveRatio(MagnomechError):
    """Frequency/temperature ratio must be strictly positive."""


class ZeroEta(MagnomechError):
    """Cannot back-solve a drive amplitude with zero magnetostrictive coupling."""


class StepTooLarge(MagnomechError):
    """Integration step does not resolve the fastest oscillation."""


class NonFinite(MagnomechError):
    """An integrated quantity overflowed or became NaN."""


class FrameMismatch(MagnomechError):
    """Interaction-picture drift variants require equal cavity and magnon detunings."""


class OutOfTrajectoryRange(MagnomechError):
    """Requested time lies outside the attached mean-field trajectory."""


class UnphysicalState(MagnomechError):
    """Covariance matrix violates the Heisenberg bound beyond tolerance."""


class UnstableDrift(MagnomechError):
    """Steady state requested for a drift matrix that is not strictly stable."""


class DegenerateDiscriminant(MagnomechError):
    """Symplectic invariant discriminant is negative beyond tolerance."""


class SingularState(MagnomechError):
    """Reduced covariance matrix is numerically singular."""


class NotConverged(MagnomechError):
    """Consecutive-period peaks still drift; the asymptotic regime is not reached."""


class InsufficientSamples(MagnomechError):
    """Time series too short or too sparse for per-period peak extraction."""


class ConfigError(MagnomechError):
    """Run configuration is missing fields or fails validation."""
