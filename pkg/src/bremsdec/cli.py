"""Command line front end: ``bremsdec run <scenario> [options]``.

Options override config-file values, which override scenario defaults.
Exit status: 0 on success, 1 on a physics/domain error, 2 on usage
errors (argparse convention).
"""

from __future__ import annotations

import argparse
import json
import sys

from .constants import ConfigError, parse_config_file
from .scenarios import (SCENARIO_NAMES, ScenarioError, ScenarioSpec,
                        run_scenario)

# (flag, parameter key, help)
_PARAM_FLAGS = [
    ("--temperature", "temperature", "bath temperature in K"),
    ("--tf", "tf", "final time / time of flight in s"),
    ("--v-over-c", "v_over_c", "packet velocity as a fraction of c"),
    ("--omega0", "omega0", "oscillator frequency in rad/s"),
    ("--dq-over-ctaub", "dq_over_ctaub",
     "superposition separation in units of c * tau_B"),
    ("--sigma0", "sigma0", "initial packet width in m"),
    ("--k0", "k0", "packet wavevector in 1/m"),
    ("--n-particles", "n_particles", "number of charges moving together"),
    ("--d-target", "d_target", "required decoherence factor"),
    ("--distance", "distance", "traversal distance in m"),
    ("--step", "step", "integrator time step in s"),
    ("--tau-p", "tau_p", "preparation time in s"),
    ("--alpha", "alpha", "fine structure constant"),
]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bremsdec",
        description="bremsstrahlung decoherence scenarios")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a named scenario")
    run.add_argument("scenario", choices=SCENARIO_NAMES + ("fig1",),
                     metavar="scenario",
                     help="one of: " + ", ".join(SCENARIO_NAMES))
    for flag, key, text in _PARAM_FLAGS:
        run.add_argument(flag, dest=key, type=float, default=None, help=text)
    run.add_argument("--points", type=float, default=None,
                     help="number of sweep points")
    run.add_argument("--config", default=None,
                     help="key = value parameter file")
    run.add_argument("--out", default=None,
                     help="output directory (default: $BREMSDEC_OUT or cwd)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    params: dict[str, float] = {}
    try:
        if args.config is not None:
            params.update(parse_config_file(args.config))
    except (ConfigError, OSError) as exc:
        print(f"bremsdec: {exc}", file=sys.stderr)
        return 1

    for _, key, _ in _PARAM_FLAGS:
        value = getattr(args, key)
        if value is not None:
            params[key] = value
    if args.points is not None:
        params["points"] = args.points

    spec = ScenarioSpec(name=args.scenario, parameters=params,
                        output_path=args.out)
    try:
        summary = run_scenario(spec)
    except (ScenarioError, ConfigError) as exc:
        print(f"bremsdec: {exc}", file=sys.stderr)
        return 1
    json.dump(summary, sys.stdout, indent=2, sort_keys=True)
    print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
