"""Two wave packets collide; bremsstrahlung dims their fringes.

Launch two packets from +-a toward the origin and look at the
interference pattern where they meet.  The emitted radiation tags the
path, suppressing the cross term by D = exp(Gamma) and slightly
red-shifting the fringe spacing by (1 - epsilon).
"""

import numpy as np

from bremsdec import build_config, interference_collision
from bremsdec.wavepacket import collision_density_1d, measure_fringe_visibility

cfg = build_config()
amps = (2**-0.5, 2**-0.5)

print(f"{'v/c':>6} {'t_f [s]':>9} {'D':>10} {'epsilon':>10} "
      f"{'visibility':>10}")
for v in (0.001, 0.01, 0.1, 0.3):
    t_f = 1.0
    a = v * cfg.speed_of_light * t_f
    k0 = v * cfg.mass_natural / cfg.speed_of_light
    rep = interference_collision(a, 1e-10, k0, amps, cfg)
    print(f"{v:6.3f} {rep.collision_time_t_f:9.2e} "
          f"{rep.decoherence_factor_D:10.6f} {rep.epsilon:10.3e} "
          f"{rep.visibility:10.6f}")

# sample the fringes for the fastest case and measure the contrast
# operationally from the density itself
import math

v = 0.3
a = v * cfg.speed_of_light
k0 = v * cfg.mass_natural / cfg.speed_of_light
rep = interference_collision(a, 1e-10, k0, amps, cfg)
period = 2.0 * math.pi / rep.fringe_wavevector
x = np.linspace(-period, period, 2001)
rho = collision_density_1d(x, rep.envelope_width_sigma_tf, amps,
                           k0, rep.epsilon,
                           math.log(rep.decoherence_factor_D))
print()
print(f"v = 0.3c: measured contrast {measure_fringe_visibility(x, rho):.6f}"
      f" vs predicted {rep.visibility:.6f}")
print("Even at a third of the speed of light the electron loses only a "
      "few percent of its fringe contrast to bremsstrahlung.")
