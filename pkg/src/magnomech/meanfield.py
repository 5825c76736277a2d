"""Classical mean-field dynamics and effective linearized couplings.

The driven mean amplitudes obey three coupled nonlinear complex ODEs.  At
late times, under two-tone driving, the magnon amplitude approaches a
two-phasor asymptotic form whose weights define the effective two-mode
squeezing (g1) and beam-splitter (g2) couplings of the linearized model.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import NonFinite, StepTooLarge, ZeroEta
from .params import DriveConfig, DriveMode, SystemParams, tone_frequencies, validate

__all__ = [
    "MeanTrajectory",
    "EffectiveCouplings",
    "integrate_mean_field",
    "asymptotic_magnon_amplitude",
    "effective_couplings",
    "drive_amplitude_for_target_coupling",
    "max_mean_field_step",
]


@dataclass(frozen=True)
class MeanTrajectory:
    """Sampled classical amplitudes of the three modes."""

    times: np.ndarray
    a_mean: np.ndarray
    b_mean: np.ndarray
    m_mean: np.ndarray

    def __post_init__(self):
        n = len(self.times)
        if not (len(self.a_mean) == len(self.b_mean) == len(self.m_mean) == n):
            raise ValueError("trajectory arrays must share one length")
        if n > 1 and not np.all(np.diff(self.times) > 0):
            raise ValueError("times must be strictly increasing")


@dataclass(frozen=True)
class EffectiveCouplings:
    """Effective couplings of the linearized model plus derived quantities.

    g1, g2    two-mode-squeezing and beam-splitter couplings
    r1        squeezing parameter atanh(|g1|/|g2|), defined for |g1| < |g2|
    r2        squeezing parameter atanh(|g1|/g), defined for |g1| < g
    gt1       sqrt(|g2|^2 - |g1|^2) where r1 is defined
    gt2       sqrt(g^2 - |g1|^2) where r2 is defined

    Undefined derived values are None; `undefined` maps the field name to
    the violated domain condition.
    """

    g1: complex
    g2: complex
    r1: float | None = None
    r2: float | None = None
    gt1: float | None = None
    gt2: float | None = None
    undefined: dict = field(default_factory=dict)


def _tone_denominators(params: SystemParams) -> tuple[complex, complex]:
    """Response denominators of the two drive tones.

    The upper-sideband tone enters with (detuning - tone frequency), the
    lower-sideband one with the opposite sign convention.
    """
    w1, w2 = tone_frequencies(params)
    den1 = (params.kappa_m / 2 + 1j * (params.delta_m - w1)
            + params.g**2 / (params.kappa_a / 2 + 1j * (params.delta_a - w1)))
    den2 = (params.kappa_m / 2 + 1j * (params.delta_m + w2)
            + params.g**2 / (params.kappa_a / 2 + 1j * (params.delta_a + w2)))
    return den1, den2


def max_mean_field_step(params: SystemParams) -> float:
    """Largest admissible step: 50 steps per half-cycle of the fastest
    rotating-frame frequency."""
    w1, w2 = tone_frequencies(params)
    w_osc = max(params.omega_b,
                abs(params.delta_a - w1), abs(params.delta_a + w1),
                abs(params.delta_a - w2), abs(params.delta_a + w2))
    return math.pi / (50.0 * w_osc)


def integrate_mean_field(params: SystemParams, drive: DriveConfig,
                         t_end: float, dt: float,
                         store_every: int = 1) -> MeanTrajectory:
    """Integrate the classical amplitude ODEs from zero initial amplitudes.

    Fixed-step fourth-order Runge-Kutta; the drive must be given as tone
    amplitudes.  The full magnon-displacement backaction term (the product
    of the magnon amplitude with twice the real mechanical amplitude) is
    kept without approximation.
    """
    validate(params)
    if drive.mode is not DriveMode.AMPLITUDES:
        raise ValueError("integrate_mean_field requires an amplitude-mode drive")
    dt_max = max_mean_field_step(params)
    if dt > dt_max:
        raise StepTooLarge(f"dt={dt} exceeds the resolution bound {dt_max}")
    w1, w2 = tone_frequencies(params)
    times, a, b, m = _kernels.mean_field_rk4(
        drive.e1, drive.e2, w1, w2,
        params.kappa_a, params.kappa_m, params.gamma,
        params.g, params.eta, params.delta_a, params.delta_m, params.omega_b,
        float(t_end), float(dt), int(store_every))
    for arr in (a, b, m):
        if not np.all(np.isfinite(arr.view(float))):
            raise NonFinite("mean-field amplitudes overflowed; system unstable")
    return MeanTrajectory(times=times, a_mean=a, b_mean=b, m_mean=m)


def asymptotic_magnon_amplitude(params: SystemParams, drive: DriveConfig,
                                t: float) -> complex:
    """Late-time magnon amplitude as the sum of the two driven phasors."""
    validate(params)
    if drive.mode is not DriveMode.AMPLITUDES:
        raise ValueError("asymptotic_magnon_amplitude requires an amplitude-mode drive")
    w1, w2 = tone_frequencies(params)
    den1, den2 = _tone_denominators(params)
    return (drive.e1 * cmath.exp(-1j * w1 * t) / den1
            + drive.e2 * cmath.exp(-1j * w2 * t) / den2)


def effective_couplings(params: SystemParams, drive: DriveConfig) -> EffectiveCouplings:
    """Effective couplings g1, g2 plus squeezing parameters and the
    transformed beam-splitter couplings.

    In COUPLINGS mode g1 and g2 are passed through unchanged and only the
    derived quantities are computed.
    """
    validate(params)
    if drive.mode is DriveMode.COUPLINGS:
        g1, g2 = complex(drive.g1), complex(drive.g2)
    else:
        den1, den2 = _tone_denominators(params)
        g1 = params.eta * drive.e1 / den1
        g2 = params.eta * drive.e2 / den2

    undefined: dict[str, str] = {}
    r1 = gt1 = r2 = gt2 = None
    if abs(g1) < abs(g2):
        r1 = math.atanh(abs(g1) / abs(g2))
        gt1 = math.sqrt(abs(g2) ** 2 - abs(g1) ** 2)
    else:
        undefined["r1"] = undefined["gt1"] = "|g1| < |g2|"
    if abs(g1) < params.g:
        r2 = math.atanh(abs(g1) / params.g)
        gt2 = math.sqrt(params.g**2 - abs(g1) ** 2)
    else:
        undefined["r2"] = undefined["gt2"] = "|g1| < g"
    return EffectiveCouplings(g1=g1, g2=g2, r1=r1, r2=r2, gt1=gt1, gt2=gt2,
                              undefined=undefined)


def drive_amplitude_for_target_coupling(params: SystemParams,
                                        target_g1: float) -> float:
    """Upper-sideband amplitude that realizes a requested |g1|.

    Algebraic inverse of the effective-coupling formula; round-trips through
    effective_couplings to machine precision.
    """
    validate(params)
    if target_g1 < 0.0:
        raise ValueError("target coupling must be >= 0")
    if target_g1 == 0.0:
        return 0.0
    if params.eta == 0.0:
        raise ZeroEta("eta = 0 cannot realize a nonzero coupling")
    den1, _ = _tone_denominators(params)
    return target_g1 * abs(den1) / params.eta
