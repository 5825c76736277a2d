"""System parameters, drive configuration, and unit conventions.

Every frequency, rate, and detuning in the package is dimensionless and
measured in units of the mechanical frequency; time is measured in units of
its inverse.  The mechanical frequency field is therefore pinned to 1 and
acts as the unit of the whole parameter set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum

from .errors import NegativeOccupation, NonPositiveRate, NonPositiveRatio

__all__ = [
    "SystemParams",
    "DriveConfig",
    "DriveMode",
    "validate",
    "thermal_occupation",
    "tone_frequencies",
    "reference_params",
]


@dataclass(frozen=True)
class SystemParams:
    """All rates and detunings of the cavity-magnon-phonon model.

    delta_a   cavity detuning from the drive frame
    delta_m   magnon detuning from the drive frame (effective value)
    omega_b   mechanical frequency, fixed to 1 (the unit)
    g         cavity-magnon beam-splitter coupling
    eta       bare magnetostrictive (radiation-pressure-like) coupling
    kappa_a   cavity energy decay rate
    kappa_m   magnon energy decay rate
    gamma     mechanical energy decay rate
    nbar_b    mean thermal phonon occupation of the mechanical bath
    """

    delta_a: float
    delta_m: float
    g: float
    eta: float
    kappa_a: float
    kappa_m: float
    gamma: float
    nbar_b: float = 0.0
    omega_b: float = 1.0

    def replace(self, **kwargs) -> "SystemParams":
        return replace(self, **kwargs)


def validate(params: SystemParams) -> SystemParams:
    """Check all invariants and return the parameters unchanged.

    Raises NonPositiveRate or NegativeOccupation naming the offending field.
    Idempotent by construction.
    """
    for field in ("kappa_a", "kappa_m", "gamma"):
        value = getattr(params, field)
        if not (value > 0.0):
            raise NonPositiveRate(field, value)
    if params.omega_b != 1.0:
        raise NonPositiveRate("omega_b", params.omega_b)
    if not (params.nbar_b >= 0.0):
        raise NegativeOccupation(params.nbar_b)
    if params.g < 0.0 or params.eta < 0.0:
        raise NonPositiveRate("g" if params.g < 0.0 else "eta",
                              params.g if params.g < 0.0 else params.eta)
    return params


def thermal_occupation(x: float) -> float:
    """Bose occupation 1/(e^x - 1) for the dimensionless ratio x = (mechanical
    quantum)/(k_B T)."""
    if not (x > 0.0):
        raise NonPositiveRatio(f"frequency/temperature ratio must be > 0, got {x}")
    return 1.0 / math.expm1(x)


class DriveMode(Enum):
    AMPLITUDES = "amplitudes"
    COUPLINGS = "couplings"


@dataclass(frozen=True)
class DriveConfig:
    """Two-tone drive of the magnon mode.

    In AMPLITUDES mode the drive is specified by the two tone amplitudes
    (e1 on the upper sideband, e2 on the lower one); in COUPLINGS mode the
    effective linearized couplings (g1, g2) are prescribed directly and the
    amplitudes are ignored.  Single-tone (upper-sideband only) operation is
    e2 = 0 or g2 = 0.
    """

    mode: DriveMode
    e1: float = 0.0
    e2: float = 0.0
    g1: complex = 0j
    g2: complex = 0j

    @classmethod
    def amplitudes(cls, e1: float, e2: float = 0.0) -> "DriveConfig":
        if e1 < 0.0 or e2 < 0.0:
            raise NonPositiveRate("e1" if e1 < 0.0 else "e2", e1 if e1 < 0.0 else e2)
        return cls(mode=DriveMode.AMPLITUDES, e1=e1, e2=e2)

    @classmethod
    def couplings(cls, g1: complex, g2: complex = 0j) -> "DriveConfig":
        return cls(mode=DriveMode.COUPLINGS, g1=complex(g1), g2=complex(g2))


def tone_frequencies(params: SystemParams) -> tuple[float, float]:
    """Frequencies (in the drive rotating frame) of the upper- and
    lower-sideband tones: delta_m + omega_b and delta_m - omega_b."""
    return params.delta_m + params.omega_b, params.delta_m - params.omega_b


def reference_params() -> SystemParams:
    """Benchmark parameter set used throughout the demos and tests."""
    return SystemParams(
        delta_a=1000.0,
        delta_m=1000.0,
        g=0.28,
        eta=2e-8,
        kappa_a=0.02,
        kappa_m=0.3,
        gamma=0.02,
        nbar_b=0.0,
    )
