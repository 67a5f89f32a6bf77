"""Command-line scenario runner.

Exit codes: 0 success, 2 configuration error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .config import SCENARIOS, ConfigError, ScenarioConfig, load_config
from .lattice import build_lattice, transfer_matrix
from .observables import run_scenario

EXIT_CONFIG = 2
EXIT_IO = 3

# flag dest -> config key
_FLAG_KEYS = {
    "scenario": "scenario", "n": "n", "j": "j", "input": "input", "input2": "input2",
    "r": "r", "phi": "phi", "alpha_sq": "alpha_sq", "alpha_phase": "alpha_phase",
    "tau_max": "tau_max", "grid": "grid", "snapshots": "snapshots", "witness": "witness",
    "format": "format", "out": "out",
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="jxlattice", description="Quantum light transport in Jx photonic lattices.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    run = sub.add_parser("run", help="evaluate one scenario and write its report")
    run.add_argument("--config", help="JSON config file; flags override its values")
    run.add_argument("--scenario", choices=SCENARIOS)
    run.add_argument("--n", type=int, help="number of guides (default 20)")
    run.add_argument("--j", type=float, help="coupling scale J (default 1.0)")
    run.add_argument("--input", type=int, help="input guide, 1-based (default 1)")
    run.add_argument("--input2", type=int, help="second N00N guide (default 2)")
    run.add_argument("--r", type=float, help="squeezing strength")
    run.add_argument("--phi", type=float, help="squeezing direction in radians (default 0)")
    run.add_argument("--alpha-sq", type=float, help="coherent |alpha|^2")
    run.add_argument("--alpha-phase", type=float, help="phase of alpha in radians (default 0)")
    run.add_argument("--tau-max", type=float, help="grid end in units of 1/J (default 2*pi)")
    run.add_argument("--grid", type=int, help="number of grid points (default 400)")
    run.add_argument("--snapshots", help="comma-separated taus for correlation maps")
    run.add_argument("--witness", help="mode pairs for M(j,k), e.g. '1-3,4-2'")
    run.add_argument("--format", choices=("json", "csv"))
    run.add_argument("--out", help="output file (json) or directory (csv); json goes to stdout if omitted")

    val = sub.add_parser("validate", help="check a config file without running it")
    val.add_argument("config")

    tm = sub.add_parser("transfer", help="print the transfer matrix A(tau) as JSON")
    tm.add_argument("--n", type=int, required=True)
    tm.add_argument("--j", type=float, default=1.0)
    tm.add_argument("--tau", type=float, required=True)
    return parser


def _resolve(args) -> ScenarioConfig:
    data = load_config(args.config) if args.config else {}
    for dest, key in _FLAG_KEYS.items():
        value = getattr(args, dest)
        if value is not None:
            data[key] = value
    return ScenarioConfig.from_mapping(data)


def _summary(report) -> str:
    cfg = report.config
    lines = [f"scenario {cfg.scenario}: N={cfg.n} J={cfg.j} grid={cfg.grid} tau_max={cfg.tau_max:.6g}"]
    for label, vals in report.key_times.items():
        lines.append(
            f"  tau={label:<5} transfer F={vals['fidelity_transfer']:.12f}"
            f"  revival F={vals['fidelity_revival']:.12f}"
        )
    return "\n".join(lines)


def _run(args) -> int:
    config = _resolve(args)
    report = run_scenario(config)
    if config.format == "csv":
        paths = report.write_csv(config.out or f"{config.scenario}_csv")
        print(_summary(report))
        print(f"wrote {len(paths)} CSV files to {paths[0].parent}")
    elif config.out:
        report.write_json(config.out)
        print(_summary(report))
        print(f"wrote {config.out}")
    else:
        print(report.to_json())
        print(_summary(report), file=sys.stderr)
    return 0


def _validate(args) -> int:
    config = ScenarioConfig.from_mapping(load_config(args.config))
    build_lattice(config.n, config.j)
    print(f"{args.config}: ok ({config.scenario}, N={config.n})")
    return 0


def _transfer(args) -> int:
    try:
        lattice = build_lattice(args.n, args.j)
        A = transfer_matrix(lattice, args.tau)
    except ValueError as exc:
        raise ConfigError("n" if "n_guides" in str(exc) else "tau", str(exc)) from None
    print(json.dumps(A.to_dict()))
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"run": _run, "validate": _validate, "transfer": _transfer}[args.command]
    try:
        return handler(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
