"""Acceptance gate: one criterion per test, one PASS/FAIL line each.

Run with ``pytest -v tests/test_acceptance.py`` (add ``-s`` to see the
per-criterion lines on passing tests too).
"""

import math
import sys

import numpy as np

from bremsdec.constants import build_config
from bremsdec.decoherence import (FreeLinearPath, SampledPath,
                                  coherence_length, decoherence_factor,
                                  gamma_free_asymptotic, gamma_numeric,
                                  gamma_thermal_numeric, log_sinh_ratio,
                                  n_particle_gamma, nparticle_velocity_bound,
                                  vacuum_factor_from_velocity)
from bremsdec.dynamics import (RadiationDampingParams, abraham_lorentz_solve,
                               harmonic_roots)
from bremsdec.kernels import KernelContext, dissipation_kernel, noise_kernel
from bremsdec.numerics import (QuadratureSpec, integrate_adaptive,
                               integrate_halfline_decaying)
from bremsdec.scenarios import fit_amplitude_decay
from bremsdec.wavepacket import (GaussianPacket, SuperpositionState,
                                 collision_density_1d, evolve_density_numeric,
                                 evolved_width, gaussian_density_1d,
                                 interference_collision)

EULER_GAMMA = 0.5772156649015329


def _verdict(num, ok, detail):
    line = f"criterion {num:02d} {'PASS' if ok else 'FAIL'} - {detail}"
    print(line, file=sys.stderr)
    assert ok, line


def test_criterion_01_euler_constant_asymptote():
    x_hi = 1e4
    spec = QuadratureSpec(oscillation_period_hint=2.0 * math.pi)
    val, _ = integrate_adaptive(lambda x: (1.0 - np.cos(x)) / x,
                                1e-300, x_hi, spec)
    target = math.log(x_hi) + 0.57722
    rel = abs(val / target - 1.0)
    _verdict(1, rel < 1e-3,
             f"cosine-integral asymptote rel err {rel:.2e} (< 1e-3)")


def test_criterion_02_thermal_identity():
    worst = 0.0
    for tau in (0.3, 1.0, 3.0):
        val = integrate_halfline_decaying(
            lambda s: 2.0 * np.sin(tau * s) / (1.0 - np.exp(-s)))
        target = math.pi / math.tanh(math.pi * tau) - 1.0 / tau
        worst = max(worst, abs(val / target - 1.0))
    _verdict(2, worst < 1e-6,
             f"coth sine transform worst rel err {worst:.2e} (< 1e-6)")


def test_criterion_03_thermal_split_consistency():
    cfg = build_config(temperature_K=1.0)
    tau_b = cfg.thermal_correlation_time
    w = 0.01
    worst = 0.0
    for x in (0.1, 0.3, 1.0, 3.0, 10.0, 20.0):
        t_f = x * tau_b
        path = FreeLinearPath(0.0, w * cfg.speed_of_light * t_f, t_f)
        num = gamma_thermal_numeric(path, cfg)
        closed = -(cfg.squared_charge * w**2 / (6.0 * math.pi**2)) \
            * log_sinh_ratio(x)
        worst = max(worst, abs(num / closed - 1.0))
    _verdict(3, worst < 0.01,
             f"numeric vs sinh-log thermal split worst rel err {worst:.2e}"
             " (< 1%)")


def test_criterion_04_crossover_figure_properties():
    cfg = build_config(temperature_K=1.0)
    tau_b = cfg.thermal_correlation_time
    dq = 0.1 * cfg.speed_of_light * tau_b
    ratios = np.logspace(1.0, 3.0, 41)
    gv, gt = [], []
    for x in ratios:
        res = gamma_free_asymptotic(0.0, dq, x * tau_b, cfg)
        gv.append(abs(res.gamma_vac))
        gt.append(abs(res.gamma_th))
    slope_vac = np.polyfit(np.log(ratios), np.log(gv), 1)[0]
    slope_th = np.polyfit(np.log(ratios), np.log(gt), 1)[0]

    wide = np.logspace(-1.0, 3.0, 400)
    diff = [abs(gamma_free_asymptotic(0.0, dq, x * tau_b, cfg).gamma_vac)
            - abs(gamma_free_asymptotic(0.0, dq, x * tau_b, cfg).gamma_th)
            for x in wide]
    sign = np.sign(diff)
    crossings = int(np.sum(sign[1:] * sign[:-1] < 0))

    ok_vac = -2.0 <= slope_vac <= -1.8
    ok_th = abs(slope_th + 1.0) <= 0.05
    ok_cross = crossings == 1
    _verdict(4, ok_vac and ok_th and ok_cross,
             f"vac slope {slope_vac:.3f} (in [-2,-1.8]: {ok_vac}), "
             f"thermal slope {slope_th:.3f} (-1.00 +- 0.05: {ok_th}; the "
             "exact sinh-log carries a -ln(2x)/x subleading term that "
             "keeps the fitted slope near -0.94 on this window), "
             f"crossings {crossings} (== 1: {ok_cross})")


def test_criterion_05_single_electron_exponent():
    cfg = build_config(tau_p=1e-21)
    d = vacuum_factor_from_velocity(0.1 * cfg.speed_of_light, 1.0, cfg)
    exponent = -math.log(d)
    ratio = exponent / 1e-2
    ok = 0.1 < ratio < 10.0
    _verdict(5, ok,
             f"|Gamma_vac| = {exponent:.2e} vs 1e-2 anchor: "
             f"ratio {ratio:.2f} (within factor 10)")


def test_criterion_06_nparticle_velocity_bound():
    cfg = build_config()
    v, t_f = nparticle_velocity_bound(6e23, 0.99, 1.0, cfg)
    ratio = v / 1e-16
    ok = 1.0 / 3.0 < ratio < 3.0
    _verdict(6, ok,
             f"v_max = {v:.2e} m/s vs 1e-16 anchor: ratio {ratio:.2f} "
             f"(within factor 3), traversal {t_f / 3.1557e7:.1e} yr")


def test_criterion_07_wavepacket_oracle():
    m, a, s0, k0, length = 1.0, 3.0, 0.7, 5.0, 4.0
    t_f = a * m / k0
    amps = (2**-0.5, 2**-0.5)
    state = SuperpositionState(packets=(
        GaussianPacket(center=-a, sigma0=s0, wavevector=-k0,
                       amplitude=amps[0]),
        GaussianPacket(center=a, sigma0=s0, wavevector=k0,
                       amplitude=amps[1])))
    x = np.linspace(-1.5, 1.5, 101)
    rho = evolve_density_numeric(state, t_f, m,
                                 lambda q: -q**2 / (2.0 * length**2), x,
                                 n_nodes=480)
    sigma_tf = evolved_width(s0, t_f, length, m)
    eps = t_f**2 / (m**2 * length**2 * sigma_tf**2)
    re_phase = -2.0 * a**2 / length**2 * (1.0 - eps)
    closed = collision_density_1d(x, sigma_tf, amps, k0, eps, re_phase)
    rel = np.max(np.abs(rho - closed)) / closed.max()

    bare = evolved_width(s0, t_f, math.inf, m)
    exact = math.sqrt(s0**2 + t_f**2 / (4.0 * m**2 * s0**2))
    ok = rel < 1e-8 and abs(bare / exact - 1.0) < 1e-15
    _verdict(7, ok,
             f"closed form vs oracle rel err {rel:.2e} (< 1e-8); "
             "L = inf width matches the bare spreading law exactly")


def test_criterion_08_harmonic_roots():
    tau0 = 1e-3
    rep = harmonic_roots(1.0, RadiationDampingParams(m_R=1.0, tau_0=tau0))
    z = rep.physical_pair[0]
    re_err = abs(z.real / (-0.5 * tau0) - 1.0)
    run_err = abs(rep.runaway_root * tau0 - 1.0)
    ok = re_err < 1e-5 and run_err < 5e-3
    _verdict(8, ok,
             f"complex-pair real part rel err {re_err:.2e} (< 1e-5), "
             f"runaway vs 1/tau_0 rel err {run_err:.2e} (< 0.5%)")


def test_criterion_09_abraham_lorentz():
    p = RadiationDampingParams(m_R=1.0, tau_0=1e-3)
    traj = abraham_lorentz_solve(lambda t, x, v: np.zeros_like(x),
                                 0.0, 2.5, (0.0, 1000.0), 0.01, p)
    drift = np.max(np.abs(traj.velocity - 2.5)) / 2.5

    w0, period = 1.0, 2.0 * math.pi
    traj2 = abraham_lorentz_solve(lambda t, x, v: -w0**2 * x,
                                  1.0, 0.0, (0.0, 20.0 * period),
                                  period / 400.0, p)
    g = fit_amplitude_decay(traj2.times, traj2.position[:, 0])
    g_err = abs(g / (p.tau_0 * w0**2) - 1.0)
    ok = drift < 1e-10 and g_err < 0.02
    _verdict(9, ok,
             f"free-particle velocity drift {drift:.1e} over 1e5 steps "
             f"(< 1e-10); damping-rate rel err {g_err:.2e} (< 2%)")


def test_criterion_10_property_suites():
    rng = np.random.default_rng(2024)
    cfg = build_config(uv_cutoff_omega=200.0, tau_p=5e-3,
                       temperature_K=0.0)
    spec = QuadratureSpec(rel_tol=1e-6)

    # Gamma <= 0 for 1000 random sampled paths
    gamma_ok = True
    for _ in range(1000):
        n_knots = int(rng.integers(3, 8))
        times = np.concatenate(
            [[0.0], np.sort(rng.uniform(0.01, 1.0, n_knots))])
        q = rng.normal(0.0, 0.2, size=times.size)
        if gamma_numeric(SampledPath(times, q), cfg, spec) > 0.0:
            gamma_ok = False
            break

    # D in (0, 1] for random separations and coherence lengths
    lengths = 10.0 ** rng.uniform(-3.0, 3.0, 1000)
    sep = rng.uniform(0.0, 10.0, 1000) * lengths
    ds = np.array([decoherence_factor(s, l)
                   for s, l in zip(sep, lengths)])
    d_ok = bool(np.all((ds > 0.0) & (ds <= 1.0)))

    # kernel parity
    ctx = KernelContext(build_config(temperature_K=1.5))
    t = rng.uniform(0.1, 25.0, 200) / ctx.cfg.uv_cutoff_omega
    parity_ok = bool(
        np.allclose(dissipation_kernel(-t, ctx), -dissipation_kernel(t, ctx),
                    rtol=1e-13)
        and np.allclose(noise_kernel(-t, ctx), noise_kernel(t, ctx),
                        rtol=1e-12))

    # exact N^2 scaling
    n2_ok = all(n_particle_gamma(g, n) == n * n * g
                for g in (-1e-30, -2.5e-4, -3.0)
                for n in (1, 7, 1000, 10**9))

    # epsilon in (0, 1) for random interference configurations
    cfg_si = build_config()
    eps_ok = True
    for _ in range(1000):
        v = 10.0 ** rng.uniform(-4.0, -0.5)
        t_f = 10.0 ** rng.uniform(-6.0, 2.0)
        s0 = 10.0 ** rng.uniform(-12.0, -8.0)
        a = v * cfg_si.speed_of_light * t_f
        k0 = v * cfg_si.mass_natural / cfg_si.speed_of_light
        rep = interference_collision(a, s0, k0, (2**-0.5, 2**-0.5), cfg_si)
        if not 0.0 < rep.epsilon < 1.0:
            eps_ok = False
            break

    ok = gamma_ok and d_ok and parity_ok and n2_ok and eps_ok
    _verdict(10, ok,
             f"Gamma<=0 paths: {gamma_ok}, D in (0,1]: {d_ok}, "
             f"kernel parity: {parity_ok}, N^2 exact: {n2_ok}, "
             f"epsilon in (0,1): {eps_ok}")
