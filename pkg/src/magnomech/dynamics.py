"""Drift and diffusion matrices, covariance evolution, and stability.

Quadrature ordering is (q_a, p_a, q_b, p_b, q_m, p_m) for the photon,
phonon, and magnon modes, with vacuum variance 1/2.  The covariance matrix
obeys the Lyapunov ODE  sigma' = M sigma + sigma M^T + D.

Three drift variants are provided:

* FULL        rotating-frame drift driven by a classical mean trajectory
              (detunings on the diagonal blocks, coupling eta * <m(t)>);
* ASYMPTOTIC  interaction picture with the late-time two-phasor mean,
              periodic coefficients oscillating at twice the mechanical
              frequency;
* RWA         same with the oscillating terms dropped (time independent).

The interaction-picture drift is derived from the quadrature Heisenberg
equations of the asymptotic Hamiltonian plus local damping.  It is exactly
periodic with period pi/omega_b, and its time average over one period
equals the RWA drift.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

import numpy as np

from . import _kernels
from .errors import (FrameMismatch, NonFinite, OutOfTrajectoryRange,
                     StepTooLarge, UnphysicalState, UnstableDrift)
from .meanfield import EffectiveCouplings, MeanTrajectory
from .params import DriveConfig, DriveMode, SystemParams, tone_frequencies, validate

__all__ = [
    "Variant",
    "DriftModel",
    "diffusion",
    "drift_full",
    "drift_asymptotic",
    "drift_rwa",
    "evolve_covariance",
    "steady_state",
    "stability",
    "floquet_stability",
    "transient_cutoff",
    "vacuum_thermal_sigma",
    "symplectic_form",
    "min_symplectic_eigenvalue",
    "PHYSICALITY_TOL",
]

PHYSICALITY_TOL = 1e-9
STABILITY_MARGIN = 1e-12
FLOQUET_MARGIN = 1e-9


class Variant(Enum):
    FULL = "full"
    ASYMPTOTIC = "asymptotic"
    RWA = "rwa"


def _require_frame_match(params: SystemParams):
    if params.delta_a != params.delta_m:
        raise FrameMismatch(
            f"interaction-picture variants require delta_a == delta_m "
            f"(got {params.delta_a} and {params.delta_m})")


@dataclass(frozen=True)
class DriftModel:
    """Time-parameterized provider of the 6x6 drift matrix."""

    variant: Variant
    params: SystemParams
    couplings: EffectiveCouplings | None = None
    trajectory: MeanTrajectory | None = None
    drive: DriveConfig | None = None

    @classmethod
    def rwa(cls, params: SystemParams, couplings: EffectiveCouplings) -> "DriftModel":
        validate(params)
        _require_frame_match(params)
        return cls(variant=Variant.RWA, params=params, couplings=couplings)

    @classmethod
    def asymptotic(cls, params: SystemParams,
                   couplings: EffectiveCouplings) -> "DriftModel":
        validate(params)
        _require_frame_match(params)
        return cls(variant=Variant.ASYMPTOTIC, params=params, couplings=couplings)

    @classmethod
    def full(cls, params: SystemParams, trajectory: MeanTrajectory | None = None,
             drive: DriveConfig | None = None) -> "DriftModel":
        """Full rotating-frame model.

        Either an integrated mean trajectory (interpolated linearly between
        samples) or an amplitude-mode drive (mean field co-integrated on the
        fly) must be supplied.
        """
        validate(params)
        if trajectory is None and drive is None:
            raise ValueError("full variant needs a trajectory or a drive")
        if drive is not None and drive.mode is not DriveMode.AMPLITUDES:
            raise ValueError("full-variant co-integration needs an amplitude drive")
        return cls(variant=Variant.FULL, params=params,
                   trajectory=trajectory, drive=drive)

    @property
    def period(self) -> float | None:
        """Coefficient period of the asymptotic variant, if oscillating."""
        if self.variant is not Variant.ASYMPTOTIC:
            return None
        c = self.couplings
        if c is None or (c.g1 == 0 and c.g2 == 0):
            return None
        return math.pi / self.params.omega_b


def diffusion(params: SystemParams) -> np.ndarray:
    """Diagonal diffusion matrix fixed by the input-noise correlations."""
    validate(params)
    ph = params.gamma * (2 * params.nbar_b + 1) / 2
    return np.diag([params.kappa_a / 2, params.kappa_a / 2, ph, ph,
                    params.kappa_m / 2, params.kappa_m / 2])


def vacuum_thermal_sigma(nbar_b: float = 0.0) -> np.ndarray:
    """Default initial state: photon and magnon vacuum, thermal phonon."""
    return np.diag([0.5, 0.5, nbar_b + 0.5, nbar_b + 0.5, 0.5, 0.5])


def _assemble_interaction(params: SystemParams, couplings: EffectiveCouplings,
                          t: float, rwa: bool) -> np.ndarray:
    m = np.zeros((6, 6))
    g1 = complex(couplings.g1)
    g2 = complex(couplings.g2)
    _kernels._interaction_drift(m, params.kappa_a, params.kappa_m, params.gamma,
                                params.g, g1.real, g1.imag, g2.real, g2.imag,
                                params.omega_b, t, rwa)
    return m


def drift_asymptotic(model: DriftModel, t: float) -> np.ndarray:
    """Interaction-picture drift at time t (periodic coefficients)."""
    if model.variant is not Variant.ASYMPTOTIC:
        raise ValueError("model is not the asymptotic variant")
    _require_frame_match(model.params)
    return _assemble_interaction(model.params, model.couplings, t, False)


def drift_rwa(model: DriftModel) -> np.ndarray:
    """Time-independent drift with the oscillating coefficients dropped."""
    if model.variant is not Variant.RWA:
        raise ValueError("model is not the RWA variant")
    _require_frame_match(model.params)
    return _assemble_interaction(model.params, model.couplings, 0.0, True)


def drift_full(model: DriftModel, t: float) -> np.ndarray:
    """Rotating-frame drift from the attached mean trajectory at time t."""
    if model.variant is not Variant.FULL:
        raise ValueError("model is not the full variant")
    traj = model.trajectory
    if traj is None:
        raise ValueError("drift_full requires an attached mean trajectory")
    if t < traj.times[0] or t > traj.times[-1]:
        raise OutOfTrajectoryRange(
            f"t={t} outside [{traj.times[0]}, {traj.times[-1]}]")
    m_t = complex(np.interp(t, traj.times, traj.m_mean.real)
                  + 1j * np.interp(t, traj.times, traj.m_mean.imag))
    b_t = complex(np.interp(t, traj.times, traj.b_mean.real)
                  + 1j * np.interp(t, traj.times, traj.b_mean.imag))
    p = model.params
    g_t = p.eta * m_t
    dm_eff = p.delta_m + p.eta * 2 * b_t.real
    out = np.zeros((6, 6))
    _kernels._full_drift(out, p.kappa_a, p.kappa_m, p.gamma, p.g,
                         p.delta_a, p.omega_b, dm_eff, g_t.real, g_t.imag)
    return out


# ---------------------------------------------------------------------------
# physicality
# ---------------------------------------------------------------------------


def symplectic_form(n_modes: int) -> np.ndarray:
    j = np.array([[0.0, 1.0], [-1.0, 0.0]])
    out = np.zeros((2 * n_modes, 2 * n_modes))
    for k in range(n_modes):
        out[2 * k:2 * k + 2, 2 * k:2 * k + 2] = j
    return out


def min_symplectic_eigenvalue(sigma: np.ndarray) -> float:
    """Smallest symplectic eigenvalue |eig(i Omega sigma)|."""
    n = sigma.shape[0] // 2
    ev = np.linalg.eigvals(1j * symplectic_form(n) @ sigma)
    return float(np.min(np.abs(ev)))


def _check_samples_physical(sigmas: np.ndarray):
    for sig in sigmas:
        if not np.all(np.isfinite(sig)):
            raise NonFinite("covariance evolution overflowed")
        nu = min_symplectic_eigenvalue(sig)
        if nu < 0.5 - PHYSICALITY_TOL:
            raise UnphysicalState(
                f"min symplectic eigenvalue {nu} < 1/2 - {PHYSICALITY_TOL}")


# ---------------------------------------------------------------------------
# evolution and steady state
# ---------------------------------------------------------------------------


def _max_step(model: DriftModel) -> float:
    p = model.params
    if model.variant is Variant.ASYMPTOTIC:
        return (math.pi / p.omega_b) / 50.0
    if model.variant is Variant.FULL:
        return 2 * math.pi / (50.0 * max(p.delta_a, p.omega_b))
    return math.inf


def evolve_covariance(model: DriftModel, diff: np.ndarray, sigma0: np.ndarray,
                      t_end: float, dt: float, sample_every: int = 1,
                      check_physicality: bool = True):
    """Integrate the Lyapunov ODE with RK4, symmetrizing after every step.

    Returns (times, sigmas) sampled every `sample_every` steps (the initial
    state included).  Every returned sample is checked against the
    Heisenberg bound unless `check_physicality` is disabled.
    """
    dt_max = _max_step(model)
    if dt > dt_max:
        raise StepTooLarge(f"dt={dt} exceeds the resolution bound {dt_max}")
    sig0 = np.asarray(sigma0, dtype=float).copy()
    p = model.params
    if model.variant is Variant.RWA:
        m = drift_rwa(model)
        times, sigs = _kernels.evolve_constant(m, diff, sig0, float(t_end),
                                               float(dt), int(sample_every))
    elif model.variant is Variant.ASYMPTOTIC:
        c = model.couplings
        times, sigs = _kernels.evolve_periodic(
            c.g1.real, c.g1.imag, c.g2.real, c.g2.imag, p.omega_b,
            p.kappa_a, p.kappa_m, p.gamma, p.g,
            diff, sig0, float(t_end), float(dt), int(sample_every))
    else:
        if model.drive is not None:
            w1, w2 = tone_frequencies(p)
            times, sigs, _, _ = _kernels.evolve_full_fused(
                model.drive.e1, model.drive.e2, w1, w2,
                p.kappa_a, p.kappa_m, p.gamma, p.g, p.eta,
                p.delta_a, p.delta_m, p.omega_b,
                diff, sig0, float(t_end), float(dt), int(sample_every))
        else:
            traj = model.trajectory
            if t_end > traj.times[-1]:
                raise OutOfTrajectoryRange(
                    f"t_end={t_end} beyond trajectory end {traj.times[-1]}")
            steps = np.diff(traj.times)
            if not np.allclose(steps, steps[0], rtol=1e-9, atol=0.0):
                raise ValueError("trajectory must be uniformly sampled")
            times, sigs = _kernels.evolve_full_trajectory(
                np.ascontiguousarray(traj.b_mean.real),
                np.ascontiguousarray(traj.b_mean.imag),
                np.ascontiguousarray(traj.m_mean.real),
                np.ascontiguousarray(traj.m_mean.imag),
                float(traj.times[0]), float(steps[0]),
                p.kappa_a, p.kappa_m, p.gamma, p.g, p.eta,
                p.delta_a, p.delta_m, p.omega_b,
                diff, sig0, float(t_end), float(dt), int(sample_every))
    if check_physicality:
        _check_samples_physical(sigs)
    elif not np.all(np.isfinite(sigs)):
        raise NonFinite("covariance evolution overflowed")
    return times, sigs


class StabilityResult(NamedTuple):
    stable: bool
    max_real_part: float


def stability(m: np.ndarray) -> StabilityResult:
    """Strict Hurwitz check: every eigenvalue real part below -1e-12."""
    re = np.linalg.eigvals(m).real
    mx = float(np.max(re))
    return StabilityResult(stable=mx < -STABILITY_MARGIN, max_real_part=mx)


def steady_state(m: np.ndarray, diff: np.ndarray) -> np.ndarray:
    """Exact stationary covariance from the vectorized linear system.

    Solves M sigma + sigma M^T + D = 0 through the Kronecker-sum form,
    symmetrizes, and physicality-checks the result.
    """
    res = stability(m)
    if not res.stable:
        raise UnstableDrift(f"max eigenvalue real part {res.max_real_part}")
    n = m.shape[0]
    eye = np.eye(n)
    lhs = np.kron(eye, m) + np.kron(m, eye)
    sig = np.linalg.solve(lhs, -np.asarray(diff, float).reshape(n * n)).reshape(n, n)
    sig = (sig + sig.T) / 2
    _check_samples_physical(sig[None, :, :])
    return sig


class FloquetResult(NamedTuple):
    stable: bool
    max_multiplier: float


def floquet_stability(model: DriftModel, steps_per_period: int = 512) -> FloquetResult:
    """Stability of the periodic asymptotic model via the monodromy matrix.

    RK4 on the state propagator over one coefficient period; stable iff all
    multipliers lie inside the unit circle with margin 1e-9.
    """
    period = model.period
    if period is None:
        res = stability(drift_rwa(DriftModel.rwa(model.params, model.couplings)))
        return FloquetResult(stable=res.stable,
                             max_multiplier=math.exp(res.max_real_part))
    dt = period / steps_per_period
    phi = np.eye(6)
    t = 0.0
    for _ in range(steps_per_period):
        m1 = drift_asymptotic(model, t)
        mh = drift_asymptotic(model, t + dt / 2)
        m4 = drift_asymptotic(model, t + dt)
        k1 = m1 @ phi
        k2 = mh @ (phi + dt / 2 * k1)
        k3 = mh @ (phi + dt / 2 * k2)
        k4 = m4 @ (phi + dt * k3)
        phi = phi + dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
        t += dt
    mx = float(np.max(np.abs(np.linalg.eigvals(phi))))
    return FloquetResult(stable=mx < 1.0 - FLOQUET_MARGIN, max_multiplier=mx)


def transient_cutoff(params: SystemParams, couplings: EffectiveCouplings) -> float:
    """Shared late-time cutoff t0 = 8 / (spectral gap of the RWA drift)."""
    model = DriftModel.rwa(params, couplings)
    res = stability(drift_rwa(model))
    if not res.stable:
        raise UnstableDrift(f"max eigenvalue real part {res.max_real_part}")
    return 8.0 / abs(res.max_real_part)
