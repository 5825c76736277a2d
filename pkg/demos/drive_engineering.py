"""From laser amplitude to effective coupling and back.

Shows the mean-field layer: back-solving the drive amplitude that yields a
wanted effective coupling, integrating the classical amplitudes, and
comparing the settled coupling strength against the late-time two-phasor
formula.  The two disagree by about seven percent at this operating point:
the static mechanical displacement shifts the magnon detuning, which the
formula ignores.
"""

import numpy as np

from magnomech import (DriveConfig, asymptotic_magnon_amplitude,
                       drive_amplitude_for_target_coupling,
                       effective_couplings, integrate_mean_field,
                       max_mean_field_step, reference_params)

params = reference_params()
target = 0.21

e1 = drive_amplitude_for_target_coupling(params, target)
print(f"drive amplitude for coupling {target}: E1 = {e1:.6e}")

drive = DriveConfig.amplitudes(e1)
coup = effective_couplings(params, drive)
print(f"round-trip coupling |G1| = {abs(coup.g1):.12f}")

dt = 0.9 * max_mean_field_step(params)
print(f"integrating the mean-field equations (dt = {dt:.2e}) ...")
traj = integrate_mean_field(params, drive, t_end=900.0, dt=dt,
                            store_every=5000)

late = traj.times > 800.0
settled = params.eta * np.abs(traj.m_mean[late]).mean()
formula = params.eta * abs(asymptotic_magnon_amplitude(params, drive, 850.0))
print(f"settled coupling eta*|<m>|      = {settled:.6f}")
print(f"two-phasor late-time prediction = {formula:.6f}")
print(f"relative gap                    = {abs(settled - formula) / formula:.2%}")

shift = 2 * params.eta * traj.b_mean[late].real.mean()
print(f"static displacement shifts the magnon detuning by {shift:+.4f} "
      f"(in mechanical-frequency units)")
