"""Decoherence of charged-particle superpositions through bremsstrahlung.

Numerical library for the influence-functional treatment of a
nonrelativistic charge coupled to the quantized radiation field: bath
kernels, the decoherence function and coherence length, Gaussian
wave-packet interference, runaway-free radiation damping, and the
harmonic / many-particle extensions.
"""

from .constants import (ConfigError, PhysicalConfig, build_config,
                        config_from_mapping, mass_renormalization,
                        parse_config_file)
from .decoherence import (DecoherenceResult, FreeLinearPath,
                          HarmonicQuarterPeriodPath, SampledPath,
                          caldeira_leggett_length, coherence_length,
                          decoherence_factor, gamma_free_asymptotic,
                          gamma_harmonic, gamma_numeric,
                          gamma_thermal_numeric, gamma_vacuum_numeric,
                          n_particle_gamma, nparticle_velocity_bound,
                          vacuum_factor_from_velocity, velocity_fourier)
from .dynamics import (RadiationDampingParams, TrajectoryResult,
                       abraham_lorentz_solve, harmonic_roots)
from .kernels import (KernelContext, dissipation_kernel, f_function,
                      noise_kernel, spectral_density)
from .scenarios import ScenarioError, ScenarioSpec, run_scenario
from .wavepacket import (GaussianPacket, InterferenceReport,
                         SuperpositionState, evolve_density_numeric,
                         evolve_gaussian, evolved_width,
                         interference_collision, measure_fringe_visibility)

__version__ = "0.1.0"
