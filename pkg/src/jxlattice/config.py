"""
Scenario configuration: which input state, which lattice, which grid.

A config is a flat mapping whose keys mirror the command-line flags
(``alpha_sq`` for ``--alpha-sq`` and so on). Keys that do not belong to
the chosen scenario are rejected rather than ignored.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

__all__ = ["ConfigError", "ScenarioConfig", "SCENARIOS", "load_config"]

SCENARIOS = ("fock2", "noon2", "squeezed", "coherent")
FORMATS = ("json", "csv")

_COMMON = {"scenario", "n", "j", "input", "tau_max", "grid", "format", "out"}
_EXTRA = {
    "fock2": {"snapshots"},
    "noon2": {"input2", "snapshots"},
    "squeezed": {"r", "phi", "witness"},
    "coherent": {"alpha_sq", "alpha_phase"},
}
_REQUIRED = {"fock2": set(), "noon2": set(), "squeezed": {"r"}, "coherent": {"alpha_sq"}}


class ConfigError(ValueError):
    """Invalid scenario configuration; ``field`` names the offending key."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


def _number(data, key, kind=float, positive=False, nonneg=False):
    value = data[key]
    if isinstance(value, bool):
        raise ConfigError(key, f"expected a number, got {value!r}")
    try:
        if kind is int:
            if isinstance(value, float) and not value.is_integer():
                raise ValueError
            value = int(value)
        else:
            value = float(value)
    except (TypeError, ValueError):
        raise ConfigError(key, f"expected {kind.__name__}, got {value!r}") from None
    if kind is float and not math.isfinite(value):
        raise ConfigError(key, f"must be finite, got {value}")
    if positive and value <= 0:
        raise ConfigError(key, f"must be positive, got {value}")
    if nonneg and value < 0:
        raise ConfigError(key, f"must be non-negative, got {value}")
    return value


def _float_list(data, key):
    value = data[key]
    if isinstance(value, str):
        value = [v for v in value.split(",") if v.strip()]
    if not isinstance(value, (list, tuple)):
        raise ConfigError(key, f"expected a list of numbers, got {value!r}")
    try:
        out = tuple(float(v) for v in value)
    except (TypeError, ValueError):
        raise ConfigError(key, f"expected a list of numbers, got {value!r}") from None
    if any(not math.isfinite(v) or v < 0 for v in out):
        raise ConfigError(key, "times must be finite and non-negative")
    return out


def _pair_list(data, key, n):
    value = data[key]
    if isinstance(value, str):
        value = [p.split("-") for p in value.split(",") if p.strip()]
    try:
        pairs = tuple((int(a), int(b)) for a, b in value)
    except (TypeError, ValueError):
        raise ConfigError(key, f"expected mode pairs like '1-3,4-2', got {data[key]!r}") from None
    for a, b in pairs:
        if a == b or not (1 <= a <= n and 1 <= b <= n):
            raise ConfigError(key, f"pair ({a}, {b}) must be two distinct modes in 1..{n}")
    return pairs


@dataclass(frozen=True)
class ScenarioConfig:
    """Validated scenario parameters. Mode labels are 1-based."""

    scenario: str
    n: int = 20
    j: float = 1.0
    input: int = 1
    input2: int | None = None
    r: float | None = None
    phi: float | None = None
    alpha_sq: float | None = None
    alpha_phase: float | None = None
    tau_max: float = 2 * math.pi
    grid: int = 400
    snapshots: tuple[float, ...] = ()
    witness: tuple[tuple[int, int], ...] = ()
    format: str = "json"
    out: str | None = None

    @property
    def alpha(self) -> complex:
        return math.sqrt(self.alpha_sq) * complex(math.cos(self.alpha_phase), math.sin(self.alpha_phase))

    @property
    def input_modes(self) -> tuple[int, ...]:
        return (self.input, self.input2) if self.scenario == "noon2" else (self.input,)

    @classmethod
    def from_mapping(cls, data: dict) -> "ScenarioConfig":
        """Validate a raw mapping. ``None`` values count as absent."""
        data = {k: v for k, v in data.items() if v is not None}
        if "scenario" not in data:
            raise ConfigError("scenario", "missing")
        scenario = data["scenario"]
        if scenario not in SCENARIOS:
            raise ConfigError("scenario", f"unknown scenario {scenario!r}; expected one of {SCENARIOS}")

        allowed = _COMMON | _EXTRA[scenario]
        for key in data:
            if key not in allowed:
                raise ConfigError(key, f"not a parameter of scenario {scenario!r}")
        for key in sorted(_REQUIRED[scenario]):
            if key not in data:
                raise ConfigError(key, f"required for scenario {scenario!r}")

        kw = {"scenario": scenario}
        if "n" in data:
            kw["n"] = _number(data, "n", int)
            if kw["n"] < 2:
                raise ConfigError("n", f"lattice needs at least 2 guides, got {kw['n']}")
        n = kw.get("n", cls.n)
        if "j" in data:
            kw["j"] = _number(data, "j", positive=True)
        for key in ("input", "input2"):
            if key in data:
                kw[key] = _number(data, key, int)
                if not 1 <= kw[key] <= n:
                    raise ConfigError(key, f"mode must be in 1..{n}, got {kw[key]}")
        if scenario == "noon2":
            kw.setdefault("input2", 2)
            if kw["input2"] > n:
                raise ConfigError("input2", f"mode must be in 1..{n}, got {kw['input2']}")
            if kw["input2"] == kw.get("input", cls.input):
                raise ConfigError("input2", "N00N input modes must differ")
        if "r" in data:
            kw["r"] = _number(data, "r", nonneg=True)
        if scenario == "squeezed":
            kw["phi"] = _number(data, "phi") if "phi" in data else 0.0
        if "alpha_sq" in data:
            kw["alpha_sq"] = _number(data, "alpha_sq", nonneg=True)
        if scenario == "coherent":
            kw["alpha_phase"] = _number(data, "alpha_phase") if "alpha_phase" in data else 0.0
        if "tau_max" in data:
            kw["tau_max"] = _number(data, "tau_max", positive=True)
        if "grid" in data:
            kw["grid"] = _number(data, "grid", int)
            if kw["grid"] < 2:
                raise ConfigError("grid", f"need at least 2 grid points, got {kw['grid']}")
        if "snapshots" in data:
            kw["snapshots"] = _float_list(data, "snapshots")
        if "witness" in data:
            kw["witness"] = _pair_list(data, "witness", n)
        elif scenario == "squeezed":
            kw["witness"] = ((1, 3), (n, 2)) if n >= 4 else ((1, 2),)
        if "format" in data:
            if data["format"] not in FORMATS:
                raise ConfigError("format", f"expected one of {FORMATS}, got {data['format']!r}")
            kw["format"] = data["format"]
        if "out" in data:
            kw["out"] = str(data["out"])
        return cls(**kw)

    def to_dict(self) -> dict:
        keys = ["scenario", "n", "j", "input"] + sorted(_EXTRA[self.scenario]) + ["tau_max", "grid"]
        out = {}
        for key in keys:
            value = getattr(self, key)
            if isinstance(value, tuple):
                value = [list(v) if isinstance(v, tuple) else v for v in value]
            out[key] = value
        return out


def load_config(path: str | Path) -> dict:
    """Read a raw JSON config mapping (not yet validated).

    Raises ``OSError`` for unreadable files and :class:`ConfigError` for
    malformed content.
    """
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError("config", f"malformed JSON in {path}: {exc}") from None
    if not isinstance(data, dict):
        raise ConfigError("config", f"{path} must hold a JSON object")
    return data
