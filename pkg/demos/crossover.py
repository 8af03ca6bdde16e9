"""Vacuum vs thermal decoherence of a split electron at 1 K.

Sweeps the flight time through the thermal correlation time tau_B and
prints both contributions to the decoherence exponent.  Short flights
are vacuum dominated (the log is the only survivor); past a few tens of
tau_B the thermal sinh-log takes over.
"""

import math

import numpy as np

from bremsdec import build_config, gamma_free_asymptotic

cfg = build_config(temperature_K=1.0)
tau_b = cfg.thermal_correlation_time
dq = 0.1 * cfg.speed_of_light * tau_b   # fixed separation, 0.1 c tau_B

print(f"T = 1 K, tau_B = {tau_b:.3e} s, |dq| = {dq:.3e} m")
print(f"{'t_f/tau_B':>10} {'Gamma_vac':>12} {'Gamma_th':>12} "
      f"{'L [m]':>10} {'D':>8}")

crossed = False
for x in np.logspace(-1, 3, 17):
    res = gamma_free_asymptotic(0.0, dq, x * tau_b, cfg)
    mark = ""
    if not crossed and abs(res.gamma_th) > abs(res.gamma_vac):
        mark = "  <- thermal takes over"
        crossed = True
    print(f"{x:10.2f} {res.gamma_vac:12.3e} {res.gamma_th:12.3e} "
          f"{res.coherence_length_L:10.3e} {res.decoherence_factor_D:8.5f}"
          + mark)

print()
print("After one second of flight the coherence length has grown to "
      f"{gamma_free_asymptotic(0.0, dq, 1.0, cfg).coherence_length_L:.0f} m"
      " -- kilometers, which is why single electrons interfere so well.")
