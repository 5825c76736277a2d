"""Gaussian-state simulator of a driven cavity magnomechanical system.

Covariance-matrix dynamics of a photon-phonon-magnon system in three model
variants (full rotating frame, periodic interaction picture, rotating-wave),
with logarithmic negativity, two-way Gaussian steering, and damping/bath
occupation sweeps.
"""

from .errors import (ConfigError, DegenerateDiscriminant, FrameMismatch,
                     InsufficientSamples, MagnomechError, NegativeOccupation,
                     NonFinite, NonPositiveRate, NonPositiveRatio,
                     NotConverged, OutOfTrajectoryRange, SingularState,
                     StepTooLarge, UnphysicalState, UnstableDrift, ZeroEta)
from .params import (DriveConfig, DriveMode, SystemParams, reference_params,
                     thermal_occupation, tone_frequencies, validate)
from .meanfield import (EffectiveCouplings, MeanTrajectory,
                        asymptotic_magnon_amplitude,
                        drive_amplitude_for_target_coupling,
                        effective_couplings, integrate_mean_field,
                        max_mean_field_step)
from .dynamics import (DriftModel, Variant, diffusion, drift_asymptotic,
                       drift_full, drift_rwa, evolve_covariance,
                       floquet_stability, min_symplectic_eigenvalue,
                       stability, steady_state, symplectic_form,
                       transient_cutoff, vacuum_thermal_sigma)
from .measures import (ReducedCM, SteeringClass, bogoliubov_occupation,
                       classify_steering, log_negativity, physicality_check,
                       quadrature_variances, reduce_photon_phonon,
                       steering_a_to_b, steering_b_to_a)
from .sweep import (SweepGrid, SweepResult, default_grid, peak_per_period,
                    run_sweep)

__version__ = "0.1.0"
