"""Config-driven scenario runner producing deterministic CSV/JSON artifacts.

Each scenario reproduces one of the headline numerical examples: the
vacuum/thermal crossover sweep, packet spreading, the two-packet
interference contrast, the trapped electron, the N-particle velocity
bound, the master-equation comparison, kernel tables and the
radiation-damped oscillator benchmark.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import decoherence as dec
from . import dynamics as dyn
from . import wavepacket as wp
from .constants import (ELECTRON_REST_ENERGY, SPEED_OF_LIGHT, ConfigError,
                        build_config, config_from_mapping)
from .kernels import KernelContext, export_kernel_table

FLOAT_FMT = "%.16e"
OUTPUT_DIR_ENV = "BREMSDEC_OUT"


class ScenarioError(ValueError):
    """A scenario received physically invalid parameters."""


@dataclass
class ScenarioSpec:
    """Resolved scenario request: name, parameters, output directory."""

    name: str
    parameters: dict = field(default_factory=dict)
    output_path: str | None = None


def _write_csv(path: Path, header: list[str], rows) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(FLOAT_FMT % v for v in row) + "\n")


def _write_json(path: Path, payload: dict) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _config(params: dict):
    try:
        return config_from_mapping(params)
    except ConfigError as exc:
        raise ScenarioError(str(exc)) from exc


def _get(params, key, default):
    return float(params.get(key, default))


# --- scenarios -------------------------------------------------------

def _run_fig1_crossover(params, outdir: Path):
    cfg = _config({**params, "temperature": params.get("temperature", 1.0)})
    if cfg.temperature <= 0:
        raise ScenarioError("crossover sweep needs temperature > 0")
    tau_b = cfg.thermal_correlation_time
    dq = _get(params, "dq_over_ctaub", 0.1) * cfg.speed_of_light * tau_b
    t_lo = _get(params, "tf_min_over_taub", 0.1)
    t_hi = _get(params, "tf_max_over_taub", 1000.0)
    n = int(_get(params, "points", 61))
    ratios = np.logspace(math.log10(t_lo), math.log10(t_hi), n)

    rows = []
    crossover = None
    prev_sign = None
    for ratio in ratios:
        t_f = ratio * tau_b
        res = dec.gamma_free_asymptotic(0.0, dq, t_f, cfg)
        rows.append([ratio, res.gamma_vac, res.gamma_th,
                     res.coherence_length_L, res.decoherence_factor_D])
        sign = abs(res.gamma_vac) > abs(res.gamma_th)
        if prev_sign is not None and sign != prev_sign and crossover is None:
            crossover = ratio
        prev_sign = sign

    csv_path = outdir / "fig1_crossover.csv"
    _write_csv(csv_path, ["t_f_over_tauB", "gamma_vac", "gamma_th",
                          "L_m", "D"], rows)
    summary = {
        "scenario": "fig1_crossover",
        "temperature_K": cfg.temperature,
        "tau_B_s": tau_b,
        "separation_m": dq,
        "crossover_t_f_over_tauB": crossover,
        "csv": csv_path.name,
    }
    return summary, [csv_path]


def _run_free_packet(params, outdir: Path):
    cfg = _config(params)
    sigma0 = _get(params, "sigma0", 1e-10)
    t_lo = _get(params, "tf_min", 1e-18)
    t_hi = _get(params, "tf_max", 1e-10)
    n = int(_get(params, "points", 41))
    if sigma0 <= 0:
        raise ScenarioError("sigma0 must be positive")
    packet = wp.GaussianPacket(center=0.0, sigma0=sigma0)
    rows = []
    for t_f in np.logspace(math.log10(t_lo), math.log10(t_hi), n):
        length = dec.coherence_length(t_f, cfg)
        _, sig_free = wp.evolve_gaussian(packet, t_f, math.inf, cfg)
        _, sig_dec = wp.evolve_gaussian(packet, t_f, length, cfg)
        rows.append([t_f, length, sig_free, sig_dec])
    csv_path = outdir / "free_packet.csv"
    _write_csv(csv_path, ["t_f_s", "L_m", "sigma_free_m", "sigma_m"], rows)
    summary = {
        "scenario": "free_packet",
        "sigma0_m": sigma0,
        "relative_extra_spreading_at_tf_max":
            rows[-1][3] / rows[-1][2] - 1.0,
        "csv": csv_path.name,
    }
    return summary, [csv_path]


def _run_interference(params, outdir: Path):
    cfg = _config(params)
    v_over_c = _get(params, "v_over_c", 0.1)
    t_f = _get(params, "tf", 1.0)
    sigma0 = _get(params, "sigma0", 1e-10)
    if not 0.0 <= v_over_c < 1.0:
        raise ScenarioError("v_over_c must lie in [0, 1)")
    if t_f <= cfg.preparation_time_tau_p:
        raise ScenarioError("tf must exceed the preparation time")

    if v_over_c == 0.0:
        # no relative motion: nothing radiates, contrast is perfect
        summary = {
            "scenario": "interference",
            "v_over_c": 0.0,
            "decoherence_factor_D": 1.0,
            "visibility": 1.0,
        }
        json_path = outdir / "interference.json"
        _write_json(json_path, summary)
        return summary, [json_path]

    a = v_over_c * cfg.speed_of_light * t_f
    k0 = _get(params, "k0",
              v_over_c * cfg.mass_natural / cfg.speed_of_light)
    report = wp.interference_collision(a, sigma0, k0, (2**-0.5, 2**-0.5), cfg)

    fringe_period = 2.0 * math.pi / report.fringe_wavevector
    x = np.linspace(-2.0 * fringe_period, 2.0 * fringe_period, 401)
    re_phase = math.log(report.decoherence_factor_D)
    rho = wp.collision_density_1d(
        x, report.envelope_width_sigma_tf, (2**-0.5, 2**-0.5), k0,
        report.epsilon, re_phase)
    csv_path = outdir / "interference_density.csv"
    _write_csv(csv_path, ["x_m", "rho_per_m"], np.column_stack([x, rho]))

    summary = {
        "scenario": "interference",
        "v_over_c": v_over_c,
        "t_f_s": t_f,
        **report.to_dict(),
        "csv": csv_path.name,
    }
    json_path = outdir / "interference.json"
    _write_json(json_path, summary)
    return summary, [csv_path, json_path]


def _run_harmonic(params, outdir: Path):
    cfg = _config(params)
    omega0 = _get(params, "omega0", 2e15)
    amplitude = _get(params, "amplitude", 1e-9)
    if omega0 <= 0:
        raise ScenarioError("omega0 must be positive")
    if omega0 * cfg.radiation_time >= 0.1:
        raise ScenarioError("omega0 * tau_0 must be << 1")
    t_f = math.pi / (2.0 * omega0)
    if cfg.uv_cutoff_omega * t_f > 1.2e6:
        raise ScenarioError(
            "omega0 too small: cutoff-time product exceeds the "
            "quadrature budget")

    result = dec.gamma_harmonic(amplitude, omega0, cfg)
    dparams = dyn.RadiationDampingParams.from_config(cfg)
    roots = dyn.harmonic_roots(omega0, dparams)

    sweep = np.logspace(math.log10(omega0) - 1, math.log10(omega0) + 1, 21)
    rows = []
    for w0 in sweep:
        rep = dyn.harmonic_roots(w0, dparams)
        z = rep.physical_pair[0]
        rows.append([w0, z.real, z.imag, rep.runaway_root,
                     rep.damping_gamma])
    csv_path = outdir / "harmonic_roots.csv"
    _write_csv(csv_path, ["omega0_per_s", "re_z_per_s", "im_z_per_s",
                          "runaway_per_s", "gamma_damping_per_s"], rows)

    summary = {
        "scenario": "harmonic",
        "omega0_per_s": omega0,
        "omega0_tau0": omega0 * cfg.radiation_time,
        "collision_time_s": t_f,
        "gamma": result.gamma,
        "d_vac_asymptotic": result.d_vac_asymptotic,
        "mean_square_velocity_ratio": result.mean_square_velocity_ratio,
        "damping_gamma_per_s": roots.damping_gamma,
        "runaway_root_per_s": roots.runaway_root,
        "csv": csv_path.name,
    }
    json_path = outdir / "harmonic.json"
    _write_json(json_path, summary)
    return summary, [csv_path, json_path]


def _run_nparticle(params, outdir: Path):
    cfg = _config(params)
    n = _get(params, "n_particles", 6e23)
    d_target = _get(params, "d_target", 0.99)
    distance = _get(params, "distance", 1.0)
    try:
        v, t_f = dec.nparticle_velocity_bound(n, d_target, distance, cfg)
    except ValueError as exc:
        raise ScenarioError(str(exc)) from exc

    rows = []
    for n_i in np.logspace(0, math.log10(n), 24):
        v_i, t_i = dec.nparticle_velocity_bound(n_i, d_target, distance, cfg)
        rows.append([n_i, v_i, t_i])
    csv_path = outdir / "nparticle.csv"
    _write_csv(csv_path, ["n_particles", "v_max_m_per_s", "traversal_s"],
               rows)
    summary = {
        "scenario": "nparticle",
        "n_particles": n,
        "d_target": d_target,
        "distance_m": distance,
        "v_max_m_per_s": v,
        "traversal_time_s": t_f,
        "traversal_time_years": t_f / 3.1557e7,
        "csv": csv_path.name,
    }
    json_path = outdir / "nparticle.json"
    _write_json(json_path, summary)
    return summary, [csv_path, json_path]


def _run_cl_compare(params, outdir: Path):
    temperature = _get(params, "temperature", 1.0)
    cfg = _config({**params, "temperature": temperature})
    if temperature <= 0:
        raise ScenarioError("comparison needs temperature > 0")
    gamma_relax = _get(params, "gamma_relax", 1.0)
    t_lo = _get(params, "tf_min", 1e-6)
    t_hi = _get(params, "tf_max", 1.0)
    n = int(_get(params, "points", 31))
    mass_kg = ELECTRON_REST_ENERGY / SPEED_OF_LIGHT**2

    rows = []
    for t_f in np.logspace(math.log10(t_lo), math.log10(t_hi), n):
        l_rad = dec.coherence_length(t_f, cfg)
        l_cl = dec.caldeira_leggett_length(t_f, temperature, gamma_relax,
                                           mass_kg)
        rows.append([t_f, l_rad, l_cl])
    csv_path = outdir / "cl_compare.csv"
    _write_csv(csv_path, ["t_f_s", "L_m", "L_CL_m"], rows)
    summary = {
        "scenario": "cl_compare",
        "temperature_K": temperature,
        "gamma_relax_per_s": gamma_relax,
        "L_grows_with_time": bool(rows[-1][1] > rows[0][1]),
        "L_CL_shrinks_with_time": bool(rows[-1][2] < rows[0][2]),
        "csv": csv_path.name,
    }
    json_path = outdir / "cl_compare.json"
    _write_json(json_path, summary)
    return summary, [csv_path, json_path]


def _run_kernels_dump(params, outdir: Path):
    cfg = _config(params)
    ctx = KernelContext(cfg)
    span = _get(params, "t_max_over_cutoff", 20.0)
    n = int(_get(params, "points", 201))
    times = np.linspace(-span, span, n) / cfg.uv_cutoff_omega
    csv_path = outdir / "kernels.csv"
    export_kernel_table(csv_path, times, ctx)
    summary = {
        "scenario": "kernels_dump",
        "temperature_K": cfg.temperature,
        "uv_cutoff_omega_per_s": cfg.uv_cutoff_omega,
        "points": n,
        "csv": csv_path.name,
    }
    return summary, [csv_path]


def _run_abraham_lorentz(params, outdir: Path):
    omega0 = _get(params, "omega0", 1.0)
    omega0_tau0 = _get(params, "omega0_tau0", 1e-3)
    periods = _get(params, "periods", 10.0)
    steps_per_period = int(_get(params, "steps_per_period", 400))
    if omega0 <= 0 or omega0_tau0 <= 0:
        raise ScenarioError("omega0 and omega0_tau0 must be positive")

    dparams = dyn.RadiationDampingParams(m_R=1.0, tau_0=omega0_tau0 / omega0)
    period = 2.0 * math.pi / omega0
    step = _get(params, "step", period / steps_per_period)
    if step <= 0:
        raise ScenarioError("step must be positive")

    def force(t, x, v):
        return -omega0**2 * x

    traj = dyn.abraham_lorentz_solve(force, 1.0, 0.0,
                                     (0.0, periods * period), step, dparams)
    csv_path = outdir / "abraham_lorentz.csv"
    traj.export_csv(csv_path)

    gamma_expected = dparams.tau_0 * omega0**2
    gamma_fit = fit_amplitude_decay(traj.times, traj.position[:, 0])
    summary = {
        "scenario": "abraham_lorentz",
        "omega0": omega0,
        "omega0_tau0": omega0_tau0,
        "damping_gamma_expected": gamma_expected,
        "damping_gamma_fitted": gamma_fit,
        "max_accel_residual": traj.diagnostics["max_accel_residual"],
        "csv": csv_path.name,
    }
    json_path = outdir / "abraham_lorentz.json"
    _write_json(json_path, summary)
    return summary, [csv_path, json_path]


def fit_amplitude_decay(times, x) -> float:
    """Decay rate gamma from the envelope of an oscillating signal.

    Extracts local maxima with quadratic interpolation and fits
    log(amplitude) linearly; amplitude ~ exp(-gamma t / 2).
    """
    x = np.asarray(x, dtype=float)
    times = np.asarray(times, dtype=float)
    idx = np.where((x[1:-1] > x[:-2]) & (x[1:-1] >= x[2:]))[0] + 1
    peak_t, peak_a = [], []
    for i in idx:
        y0, y1, y2 = x[i - 1], x[i], x[i + 1]
        denom = y0 - 2.0 * y1 + y2
        delta = 0.5 * (y0 - y2) / denom if denom != 0 else 0.0
        dt = times[i + 1] - times[i]
        peak_t.append(times[i] + delta * dt)
        peak_a.append(y1 - 0.25 * (y0 - y2) * delta)
    if len(peak_a) < 3:
        raise ValueError("not enough oscillation peaks to fit a decay rate")
    slope = np.polyfit(peak_t, np.log(peak_a), 1)[0]
    return -2.0 * slope


_SCENARIOS = {
    "fig1_crossover": _run_fig1_crossover,
    "free_packet": _run_free_packet,
    "interference": _run_interference,
    "harmonic": _run_harmonic,
    "nparticle": _run_nparticle,
    "cl_compare": _run_cl_compare,
    "kernels_dump": _run_kernels_dump,
    "abraham_lorentz": _run_abraham_lorentz,
}

_ALIASES = {"fig1": "fig1_crossover"}

SCENARIO_NAMES = tuple(sorted(_SCENARIOS))


def resolve_scenario_name(name: str) -> str:
    name = _ALIASES.get(name, name)
    if name not in _SCENARIOS:
        raise KeyError(name)
    return name


def run_scenario(spec: ScenarioSpec) -> dict:
    """Execute a scenario, writing its artifacts and returning the summary."""
    try:
        name = resolve_scenario_name(spec.name)
    except KeyError:
        raise ScenarioError(
            f"unknown scenario {spec.name!r}; choose from "
            f"{', '.join(SCENARIO_NAMES)}") from None
    outdir = Path(spec.output_path
                  or os.environ.get(OUTPUT_DIR_ENV, "."))
    outdir.mkdir(parents=True, exist_ok=True)
    summary, paths = _SCENARIOS[name](dict(spec.parameters), outdir)
    summary["outputs"] = [str(p) for p in paths]
    return summary
