"""
Fidelities and per-scenario observable time series.

Every scenario is evaluated on one uniform grid of dimensionless times
``tau = J t``. Transfer fidelity compares the evolved state with the input
transplanted to the mirror guides (same squeezing / displacement, no phase
correction); revival fidelity compares it with the input itself.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import fock, gaussian
from .config import ScenarioConfig
from .lattice import LatticeSpec, build_lattice, mirror_mode, transfer_matrices

__all__ = [
    "FidelitySeries",
    "ScenarioReport",
    "SCHEMA_VERSION",
    "fock_fidelity",
    "initial_state",
    "transfer_target",
    "transfer_and_revival_series",
    "mean_photon_series",
    "run_scenario",
    "tau_grid",
]

SCHEMA_VERSION = "1.0"
KEY_TIMES = {"pi/2": math.pi / 2, "pi": math.pi, "2pi": 2 * math.pi}


def fock_fidelity(state: fock.FockState, target: fock.FockState) -> float:
    """``|<target|state>|^2``."""
    if state.n_modes != target.n_modes:
        raise ValueError(f"mode count mismatch: {state.n_modes} vs {target.n_modes}")
    return abs(target.inner(state)) ** 2


@dataclass(frozen=True, eq=False)
class FidelitySeries:
    taus: np.ndarray
    values: np.ndarray
    kind: str
    target_description: str
    # arg <target|state>; only defined for Fock-basis states
    phases: np.ndarray | None = None

    def __post_init__(self):
        if self.kind not in ("transfer", "revival"):
            raise ValueError(f"kind must be 'transfer' or 'revival', got {self.kind!r}")
        if np.any(self.values < -1e-12) or np.any(self.values > 1 + 1e-12):
            raise ValueError("fidelity outside [0, 1]")


def tau_grid(tau_max: float = 2 * math.pi, points: int = 400) -> np.ndarray:
    return np.linspace(0.0, tau_max, points)


def _is_fock(config: ScenarioConfig) -> bool:
    return config.scenario in ("fock2", "noon2")


def _prepare(config: ScenarioConfig, modes: tuple[int, ...]):
    n = config.n
    if config.scenario == "fock2":
        return fock.two_photon_fock(modes[0], n)
    if config.scenario == "noon2":
        return fock.noon_state(modes[0], modes[1], n)
    if config.scenario == "squeezed":
        return gaussian.squeezed_vacuum(modes[0], config.r, config.phi, n)
    return gaussian.coherent_state(modes[0], config.alpha, n)


def initial_state(config: ScenarioConfig):
    """Input state of the scenario (FockState or GaussianState)."""
    return _prepare(config, config.input_modes)


def transfer_target(config: ScenarioConfig):
    """The input state moved unchanged onto the mirror guides."""
    return _prepare(config, tuple(mirror_mode(m, config.n) for m in config.input_modes))


def _describe(config: ScenarioConfig, modes) -> str:
    labels = ",".join(str(m) for m in modes)
    if config.scenario == "fock2":
        return f"two photons in guide {labels}"
    if config.scenario == "noon2":
        return f"two-photon N00N state on guides {labels}"
    if config.scenario == "squeezed":
        return f"squeezed vacuum r={config.r!r} phi={config.phi!r} in guide {labels}"
    return f"coherent state alpha={config.alpha!r} in guide {labels}"


def _evolve(state, A):
    if isinstance(state, fock.FockState):
        return fock.evolve_fock(state, A)
    return gaussian.evolve_gaussian(state, A)


def _fidelity(state, target) -> tuple[float, float | None]:
    if isinstance(state, fock.FockState):
        amp = target.inner(state)
        return abs(amp) ** 2, float(np.angle(amp))
    return gaussian.gaussian_overlap(target, state), None


def transfer_and_revival_series(config: ScenarioConfig, lattice: LatticeSpec, taus
                                ) -> tuple[FidelitySeries, FidelitySeries]:
    """Transfer and revival fidelity of the scenario input on ``taus``."""
    taus = np.asarray(taus, dtype=float)
    start = initial_state(config)
    targets = {"transfer": transfer_target(config), "revival": start}
    mirrored = tuple(mirror_mode(m, config.n) for m in config.input_modes)
    descriptions = {"transfer": _describe(config, mirrored), "revival": _describe(config, config.input_modes)}

    values = {k: np.empty(len(taus)) for k in targets}
    phases = {k: np.empty(len(taus)) for k in targets}
    for i, A in enumerate(transfer_matrices(lattice, taus)):
        evolved = _evolve(start, A)
        for kind, target in targets.items():
            values[kind][i], ph = _fidelity(evolved, target)
            phases[kind][i] = np.nan if ph is None else ph

    fock_like = _is_fock(config)
    return tuple(
        FidelitySeries(taus, values[k], k, descriptions[k], phases[k] if fock_like else None)
        for k in ("transfer", "revival")
    )


def mean_photon_series(config: ScenarioConfig, lattice: LatticeSpec, taus) -> np.ndarray:
    """``N_j(tau)`` from the closed forms in terms of ``A``; shape ``(len(taus), N)``."""
    A = transfer_matrices(lattice, taus)
    weights = np.abs(A) ** 2
    cols = [m - 1 for m in config.input_modes]
    if config.scenario == "fock2":
        return 2 * weights[:, :, cols[0]]
    if config.scenario == "noon2":
        return weights[:, :, cols[0]] + weights[:, :, cols[1]]
    if config.scenario == "squeezed":
        return math.sinh(config.r) ** 2 * weights[:, :, cols[0]]
    return config.alpha_sq * weights[:, :, cols[0]]


@dataclass(eq=False)
class ScenarioReport:
    """All observables of one scenario on a shared tau grid."""

    config: ScenarioConfig
    lattice: LatticeSpec
    grid: np.ndarray
    mean_photon: np.ndarray
    fidelity_transfer: FidelitySeries
    fidelity_revival: FidelitySeries
    key_times: dict = field(default_factory=dict)
    squeezing: dict | None = None
    witness: dict | None = None
    correlation_snapshots: list = field(default_factory=list)

    def to_dict(self) -> dict:
        series = {
            "mean_photon": self.mean_photon.tolist(),
            "fidelity_transfer": self.fidelity_transfer.values.tolist(),
            "fidelity_revival": self.fidelity_revival.values.tolist(),
        }
        if self.fidelity_transfer.phases is not None:
            series["overlap_phase_transfer"] = self.fidelity_transfer.phases.tolist()
            series["overlap_phase_revival"] = self.fidelity_revival.phases.tolist()
        if self.squeezing is not None:
            series["squeezing"] = {k: v.tolist() for k, v in self.squeezing.items()}
        if self.witness is not None:
            series["witness"] = {f"{j},{k}": v.tolist() for (j, k), v in self.witness.items()}
        if self.correlation_snapshots:
            series["correlation_snapshots"] = [c.to_dict() for c in self.correlation_snapshots]
        return {
            "schema_version": SCHEMA_VERSION,
            "scenario": self.config.scenario,
            "config": self.config.to_dict(),
            "lattice": {"n": self.lattice.n_guides, "j": self.lattice.coupling_scale},
            "input": self.fidelity_revival.target_description,
            "transfer_target": self.fidelity_transfer.target_description,
            "provenance": "deterministic: closed-form propagation, no random numbers",
            "key_times": self.key_times,
            "grid": self.grid.tolist(),
            "series": series,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1, allow_nan=False)

    def write_json(self, path: str | Path) -> None:
        Path(path).write_text(self.to_json() + "\n")

    def write_csv(self, directory: str | Path) -> list[Path]:
        """One CSV per series in ``directory``; returns the written paths."""
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        written = []

        def emit(name, header, rows):
            path = directory / name
            with path.open("w", newline="") as fh:
                writer = csv.writer(fh, lineterminator="\n")
                writer.writerow(header)
                writer.writerows(rows)
            written.append(path)

        taus = self.grid
        emit("mean_photon.csv", ("tau", "mode", "mean_photon"),
             ((repr(float(t)), j + 1, repr(float(v)))
              for t, row in zip(taus, self.mean_photon) for j, v in enumerate(row)))
        emit("fidelity.csv", ("tau", "fidelity_transfer", "fidelity_revival"),
             ((repr(float(t)), repr(float(a)), repr(float(b)))
              for t, a, b in zip(taus, self.fidelity_transfer.values, self.fidelity_revival.values)))
        if self.squeezing is not None:
            emit("squeezing.csv", ("tau", "mode", "s_q", "s_p"),
                 ((repr(float(t)), j + 1, repr(float(a)), repr(float(b)))
                  for t, rq, rp in zip(taus, self.squeezing["s_q"], self.squeezing["s_p"])
                  for j, (a, b) in enumerate(zip(rq, rp))))
        if self.witness is not None:
            emit("witness.csv", ("tau", "j", "k", "M_value"),
                 ((repr(float(t)), j, k, repr(float(v)))
                  for (j, k), vals in self.witness.items() for t, v in zip(taus, vals)))
        for i, snap in enumerate(self.correlation_snapshots):
            emit(f"correlation_{i}.csv", ("n", "m", "value"),
                 ((n, m, repr(v)) for n, m, v in snap.to_csv_rows()))
        return written


def _key_time_values(config: ScenarioConfig, lattice: LatticeSpec) -> dict:
    times = list(KEY_TIMES.values())
    transfer, revival = transfer_and_revival_series(config, lattice, times)
    return {
        label: {"tau": tau, "fidelity_transfer": float(f), "fidelity_revival": float(g)}
        for label, tau, f, g in zip(KEY_TIMES, times, transfer.values, revival.values)
    }


def run_scenario(config: ScenarioConfig) -> ScenarioReport:
    """Evaluate every observable of ``config`` on its tau grid."""
    lattice = build_lattice(config.n, config.j)
    taus = tau_grid(config.tau_max, config.grid)
    transfer, revival = transfer_and_revival_series(config, lattice, taus)
    report = ScenarioReport(
        config=config,
        lattice=lattice,
        grid=taus,
        mean_photon=mean_photon_series(config, lattice, taus),
        fidelity_transfer=transfer,
        fidelity_revival=revival,
        key_times=_key_time_values(config, lattice),
    )

    if config.scenario == "squeezed":
        start = initial_state(config)
        s_q, s_p = [], []
        witness = {pair: np.empty(len(taus)) for pair in config.witness}
        for i, A in enumerate(transfer_matrices(lattice, taus)):
            state = gaussian.evolve_gaussian(start, A)
            rep = gaussian.squeezing_factors(state)
            s_q.append(rep.s_q)
            s_p.append(rep.s_p)
            for (j, k), vals in witness.items():
                vals[i] = gaussian.witness_m(state, j, k)
        report.squeezing = {"s_q": np.array(s_q), "s_p": np.array(s_p)}
        report.witness = witness

    if _is_fock(config) and config.snapshots:
        start = initial_state(config)
        for tau, A in zip(config.snapshots, transfer_matrices(lattice, config.snapshots)):
            report.correlation_snapshots.append(
                fock.correlation_map(fock.evolve_fock(start, A), tau=float(tau))
            )
    return report
