"""
Few-photon Fock-state evolution through a linear lattice.

States are stored sparsely as ``{occupation tuple: amplitude}``. Mode
indices in the public API are 1-based, matching the waveguide labels.

Evolution is done in the Schroedinger picture: every creation operator of
the input polynomial is substituted ``a_l^dag -> sum_j A[j, l] a_j^dag``,
which is the picture-change of ``a_j(tau) = sum_l A[j, l] a_l(0)``.
"""

from __future__ import annotations

import math
import warnings
from collections import defaultdict
from dataclasses import dataclass, field

import numpy as np

from .lattice import TransferMatrix

__all__ = [
    "FockState",
    "CorrelationMap",
    "MAX_PHOTONS",
    "two_photon_fock",
    "noon_state",
    "single_photon",
    "evolve_fock",
    "mean_photon_numbers",
    "correlation_map",
]

MAX_PHOTONS = 4
NORM_TOL = 1e-10
# amplitudes below this are dropped after evolution
_PRUNE = 1e-15


def _check_mode(mode: int, n_modes: int, name: str = "mode") -> int:
    if int(mode) != mode or not 1 <= mode <= n_modes:
        raise ValueError(f"{name} must be an integer in 1..{n_modes}, got {mode!r}")
    return int(mode)


@dataclass(frozen=True, eq=False)
class FockState:
    """Normalised superposition of multi-mode number states.

    Attributes
    ----------
    n_modes : int
    amplitudes : dict
        Maps occupation tuples of length ``n_modes`` to complex amplitudes.
    max_total_photons : int
        Upper bound on the photon number of any basis vector (at most 4).
    """

    n_modes: int
    amplitudes: dict = field(repr=False)
    max_total_photons: int = 2

    def __post_init__(self):
        if not 0 <= self.max_total_photons <= MAX_PHOTONS:
            raise ValueError(f"max_total_photons must be in 0..{MAX_PHOTONS}")
        for occ in self.amplitudes:
            if len(occ) != self.n_modes or min(occ) < 0:
                raise ValueError(f"bad occupation vector {occ} for {self.n_modes} modes")
            if sum(occ) > self.max_total_photons:
                raise ValueError(
                    f"occupation {occ} exceeds max_total_photons={self.max_total_photons}"
                )
        if abs(self.norm() - 1.0) > NORM_TOL:
            raise ValueError(f"state is not normalised (norm^2 = {self.norm():.15g})")

    @classmethod
    def from_amplitudes(cls, n_modes: int, amplitudes: dict, max_total_photons: int = 2,
                        normalize: bool = False) -> "FockState":
        amps = {tuple(int(x) for x in occ): complex(c) for occ, c in amplitudes.items()}
        if normalize:
            scale = math.sqrt(sum(abs(c) ** 2 for c in amps.values()))
            amps = {occ: c / scale for occ, c in amps.items()}
        return cls(n_modes, amps, max_total_photons)

    def norm(self) -> float:
        """Squared norm."""
        return float(sum(abs(c) ** 2 for c in self.amplitudes.values()))

    def photon_sectors(self) -> set[int]:
        return {sum(occ) for occ in self.amplitudes}

    def inner(self, other: "FockState") -> complex:
        """``<self|other>``."""
        if other.n_modes != self.n_modes:
            raise ValueError(f"mode count mismatch: {self.n_modes} vs {other.n_modes}")
        return sum(
            (np.conj(c) * other.amplitudes.get(occ, 0.0) for occ, c in self.amplitudes.items()),
            0j,
        )

    def support(self, tol: float = 1e-10) -> set[tuple]:
        return {occ for occ, c in self.amplitudes.items() if abs(c) > tol}


def _basis_state(n_modes: int, occupation: dict[int, int], amplitude: complex = 1.0) -> tuple:
    occ = [0] * n_modes
    for mode, count in occupation.items():
        occ[mode - 1] += count
    return tuple(occ), amplitude


def single_photon(l: int, n_modes: int) -> FockState:
    """One photon in guide ``l``."""
    l = _check_mode(l, n_modes, "l")
    occ, amp = _basis_state(n_modes, {l: 1})
    return FockState(n_modes, {occ: amp}, max_total_photons=2)


def two_photon_fock(l: int, n_modes: int) -> FockState:
    """Two photons in guide ``l``, ``(a_l^dag)^2 |0> / sqrt(2)``."""
    l = _check_mode(l, n_modes, "l")
    occ, amp = _basis_state(n_modes, {l: 2})
    return FockState(n_modes, {occ: amp})


def noon_state(p: int, q: int, n_modes: int) -> FockState:
    """Two-photon N00N state ``(|2_p 0_q> + |0_p 2_q>) / sqrt(2)``."""
    p = _check_mode(p, n_modes, "p")
    q = _check_mode(q, n_modes, "q")
    if p == q:
        raise ValueError("N00N state needs two distinct modes (p == q)")
    amp = 1 / math.sqrt(2)
    occ_p, _ = _basis_state(n_modes, {p: 2})
    occ_q, _ = _basis_state(n_modes, {q: 2})
    return FockState(n_modes, {occ_p: amp, occ_q: amp})


def _sqrt_factorial_prod(occ) -> float:
    return math.sqrt(math.prod(math.factorial(k) for k in occ if k > 1))


def _as_matrix(A) -> np.ndarray:
    return A.entries if isinstance(A, TransferMatrix) else np.asarray(A)


def evolve_fock(state: FockState, A: TransferMatrix | np.ndarray) -> FockState:
    """Propagate ``state`` through the linear network ``A``.

    Each basis vector ``prod_l (a_l^dag)^{n_l} / sqrt(n_l!) |0>`` is expanded
    as a polynomial in the output creation operators, then re-expressed in
    the normalised number basis.
    """
    mat = _as_matrix(A)
    n = state.n_modes
    if mat.shape != (n, n):
        raise ValueError(f"transfer matrix shape {mat.shape} does not match {n} modes")

    out = defaultdict(complex)
    for occ, amp in state.amplitudes.items():
        # monomial coefficients: exponent tuple -> coefficient
        poly = {(0,) * n: amp / _sqrt_factorial_prod(occ)}
        for l, count in enumerate(occ):
            column = mat[:, l]
            nonzero = np.flatnonzero(column)
            for _ in range(count):
                nxt = defaultdict(complex)
                for expo, coeff in poly.items():
                    for j in nonzero:
                        e = list(expo)
                        e[j] += 1
                        nxt[tuple(e)] += coeff * column[j]
                poly = nxt
        for expo, coeff in poly.items():
            # (a^dag)^m |0> = sqrt(m!) |m>
            out[expo] += coeff * _sqrt_factorial_prod(expo)

    amps = {occ: c for occ, c in out.items() if abs(c) > _PRUNE}
    return FockState(n, amps, state.max_total_photons)


def mean_photon_numbers(state: FockState) -> np.ndarray:
    """``<a_j^dag a_j>`` for every guide."""
    means = np.zeros(state.n_modes)
    for occ, amp in state.amplitudes.items():
        means += abs(amp) ** 2 * np.asarray(occ, dtype=float)
    return means


@dataclass(frozen=True, eq=False)
class CorrelationMap:
    """Photon-photon correlation ``p[n, m] = <a_m^dag a_n^dag a_n a_m>`` (0-based arrays).

    ``two_photon`` is False when the state lives in a photon sector other
    than two; the map is still computed but is not the quantity studied for
    two-photon inputs.
    """

    matrix: np.ndarray
    tau: float | None = None
    two_photon: bool = True

    def to_dict(self) -> dict:
        return {"tau": self.tau, "matrix": self.matrix.tolist()}

    def to_csv_rows(self) -> list[tuple[int, int, float]]:
        """``(n, m, value)`` triples with 1-based guide labels."""
        n = self.matrix.shape[0]
        return [(i + 1, k + 1, float(self.matrix[i, k])) for i in range(n) for k in range(n)]


def correlation_map(state: FockState, tau: float | None = None) -> CorrelationMap:
    """Two-photon coincidence map of ``state``.

    The correlator is diagonal in the number basis: ``n_n n_m`` off the
    diagonal and ``n_n (n_n - 1)`` on it. No combinatorial rescaling is
    applied, so for a two-photon state the entries sum to 2.

    Raises
    ------
    ValueError
        If the state mixes different total photon numbers.
    """
    sectors = state.photon_sectors()
    if len(sectors) > 1:
        raise ValueError(f"state mixes photon-number sectors {sorted(sectors)}")
    two_photon = sectors == {2}
    if not two_photon:
        warnings.warn(
            f"correlation map of a {sorted(sectors)}-photon state; expected a two-photon state",
            stacklevel=2,
        )
    n = state.n_modes
    p = np.zeros((n, n))
    for occ, amp in state.amplitudes.items():
        weight = abs(amp) ** 2
        occ_arr = np.asarray(occ, dtype=float)
        outer = np.outer(occ_arr, occ_arr)
        outer[np.diag_indices(n)] -= occ_arr
        p += weight * outer
    return CorrelationMap(p, tau, two_photon)
