"""Runaway-free radiation damping of a harmonic oscillator.

The future-weighted force average removes the self-accelerating
solution of the pointlike-charge equation of motion.  Here we integrate
a weakly damped oscillator, fit the amplitude decay, and compare with
the cubic characteristic roots.
"""

import math

import numpy as np

from bremsdec import RadiationDampingParams, abraham_lorentz_solve, \
    harmonic_roots
from bremsdec.scenarios import fit_amplitude_decay

params = RadiationDampingParams(m_R=1.0, tau_0=1e-3)  # omega_0 tau_0 = 1e-3
w0 = 1.0

rep = harmonic_roots(w0, params)
print("characteristic roots of z^2 - tau_0 z^3 + omega_0^2 = 0:")
print(f"  physical pair   {rep.physical_pair[0]:.9f}")
print(f"                  {rep.physical_pair[1]:.9f}")
print(f"  runaway (discarded) {rep.runaway_root:.3f}  ~ 1/tau_0")
print(f"  perturbative gamma = tau_0 omega_0^2 = {rep.damping_gamma:.2e}")
print()

period = 2.0 * math.pi / w0
traj = abraham_lorentz_solve(lambda t, x, v: -w0**2 * x,
                             1.0, 0.0, (0.0, 30.0 * period),
                             period / 400.0, params)
fitted = fit_amplitude_decay(traj.times, traj.position[:, 0])
print(f"integrated 30 periods, fitted decay rate {fitted:.6e}")
print(f"root prediction -2 Re z = {-2.0 * rep.physical_pair[0].real:.6e}")

# pre-acceleration: the charge reacts ~tau_0 before a step force lands
p2 = RadiationDampingParams(m_R=1.0, tau_0=0.05)
step = lambda t, x, v: np.where(t[:, None] >= 1.0, 1.0, 0.0) * np.ones_like(x)
traj2 = abraham_lorentz_solve(step, 0.0, 0.0, (0.0, 2.0), 1e-3, p2)
i = np.searchsorted(traj2.times, 1.0 - p2.tau_0)
print()
print(f"step force at t = 1: acceleration already "
      f"{traj2.acceleration[i, 0]:.3f} at t = 1 - tau_0 (pre-acceleration)")
