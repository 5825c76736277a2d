"""Damping/occupation sweep and steering-regime map.

Runs the rotating-wave steady-state sweep over the default grid and prints
a compact regime map: which (gamma, nbar_b) cells are two-way steerable,
one-way, merely entangled, or separable.  The same data written as CSV is
what the command line tool produces in sweep mode.
"""

from magnomech import (DriveConfig, SteeringClass, Variant, default_grid,
                       effective_couplings, reference_params, run_sweep)

params = reference_params()
coup = effective_couplings(params, DriveConfig.couplings(0.21, 0.0))
grid = default_grid(params, coup, Variant.RWA)
results = run_sweep(grid, threads=4)

symbols = {SteeringClass.TWO_WAY: "2",
           SteeringClass.ONE_WAY_A_TO_B: "a",
           SteeringClass.ONE_WAY_B_TO_A: "b",
           SteeringClass.NO_STEERING: "."}

n = len(grid.nbar_values)
print("rows: gamma; columns: nbar_b from 0 to 10")
print("2 two-way, a one-way photon->phonon, b one-way phonon->photon,")
print(". no steering (E if still entangled), x unstable\n")
for i, gamma in enumerate(grid.gamma_values):
    row = results[i * n:(i + 1) * n]
    cells = []
    for r in row:
        if not r.stable:
            cells.append("x")
        elif r.regime is SteeringClass.NO_STEERING and r.peak_e_n > 0:
            cells.append("E")
        else:
            cells.append(symbols[r.regime])
    print(f"gamma={gamma:6.3f}  {' '.join(cells)}")

best = max((r for r in results if r.stable), key=lambda r: r.peak_e_n)
print(f"\nlargest E_N on the grid: {best.peak_e_n:.4f} "
      f"at gamma={best.gamma}, nbar_b={best.nbar_b}")
