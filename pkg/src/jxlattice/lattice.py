"""
Coupling profiles and single-excitation propagators for waveguide lattices.

Time enters every public function as the dimensionless ``tau = J * t``.
The propagator is ``A(tau) = exp(-i C tau / J)`` where ``C`` is the
tridiagonal coupling matrix, so that a Heisenberg-picture annihilation
operator evolves as ``a_j(tau) = sum_l A[j, l] a_l(0)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from scipy.linalg import eigh_tridiagonal

__all__ = [
    "LatticeSpec",
    "TransferMatrix",
    "build_lattice",
    "coupling_matrix",
    "transfer_matrix",
    "transfer_matrices",
    "transfer_matrix_oracle",
    "mirror_mode",
]

PROFILES = ("jx", "uniform")

# RK4 oracle: largest allowed h * max|eigenvalue|
_RK4_STEP_BOUND = 0.1
# default step used when the caller does not pick one; keeps global error ~1e-9
_RK4_DEFAULT_STEP = 0.005


@dataclass(frozen=True, eq=False)
class LatticeSpec:
    """Waveguide array with nearest-neighbour couplings.

    Attributes
    ----------
    n_guides : int
        Number of waveguides ``N``.
    coupling_scale : float
        Characteristic coupling ``J``.
    couplings : ndarray
        The ``N - 1`` couplings ``J_1 .. J_{N-1}`` (absolute units, not divided by J).
    profile : str
        ``"jx"`` for ``J_j = J sqrt(j (N - j))`` or ``"uniform"`` for ``J_j = J``.
    """

    n_guides: int
    coupling_scale: float
    couplings: np.ndarray = field(repr=False)
    profile: str = "jx"

    @cached_property
    def spectrum(self) -> tuple[np.ndarray, np.ndarray]:
        """Eigenvalues and eigenvectors of ``C / J`` (ascending)."""
        diag = np.zeros(self.n_guides)
        off = self.couplings / self.coupling_scale
        return eigh_tridiagonal(diag, off)

    def to_dict(self) -> dict:
        return {"n": self.n_guides, "j": self.coupling_scale, "profile": self.profile}


@dataclass(frozen=True, eq=False)
class TransferMatrix:
    """``A(tau)`` for one lattice; ``entries[j, l]`` is the amplitude l -> j (0-based)."""

    tau: float
    entries: np.ndarray

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "tau": float(self.tau),
            "re": self.entries.real.tolist(),
            "im": self.entries.imag.tolist(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def build_lattice(n_guides: int, coupling_scale: float = 1.0, profile: str = "jx") -> LatticeSpec:
    """Build a lattice with the Jx (parabolic) coupling law.

    Parameters
    ----------
    n_guides : int
        Number of waveguides, at least 2.
    coupling_scale : float
        Characteristic coupling strength ``J > 0``.
    profile : {"jx", "uniform"}
        ``"uniform"`` gives constant couplings ``J`` and exists only as a
        non-transferring reference lattice.

    Returns
    -------
    LatticeSpec
    """
    if isinstance(n_guides, bool) or int(n_guides) != n_guides:
        raise TypeError(f"n_guides must be an integer, got {n_guides!r}")
    n_guides = int(n_guides)
    if n_guides < 2:
        raise ValueError(f"n_guides must be >= 2, got {n_guides}")
    coupling_scale = float(coupling_scale)
    if not np.isfinite(coupling_scale) or coupling_scale <= 0:
        raise ValueError(f"coupling_scale must be positive and finite, got {coupling_scale}")
    if profile not in PROFILES:
        raise ValueError(f"unknown coupling profile {profile!r}; expected one of {PROFILES}")

    j = np.arange(1, n_guides)
    if profile == "jx":
        couplings = coupling_scale * np.sqrt(j * (n_guides - j))
    else:
        couplings = np.full(n_guides - 1, coupling_scale)
    couplings.setflags(write=False)
    return LatticeSpec(n_guides, coupling_scale, couplings, profile)


def coupling_matrix(lattice: LatticeSpec) -> np.ndarray:
    """Dense ``N x N`` real symmetric tridiagonal coupling matrix ``C``."""
    return np.diag(lattice.couplings, 1) + np.diag(lattice.couplings, -1)


def _check_tau(tau: float) -> float:
    tau = float(tau)
    if not np.isfinite(tau):
        raise ValueError(f"tau must be finite, got {tau}")
    if tau < 0:
        raise ValueError(f"tau must be non-negative, got {tau}")
    return tau


def transfer_matrix(lattice: LatticeSpec, tau: float) -> TransferMatrix:
    """Exact propagator ``A(tau)`` from the eigendecomposition of ``C``."""
    tau = _check_tau(tau)
    evals, evecs = lattice.spectrum
    phases = np.exp(-1j * evals * tau)
    return TransferMatrix(tau, (evecs * phases) @ evecs.T)


def transfer_matrices(lattice: LatticeSpec, taus) -> np.ndarray:
    """Stack of ``A(tau)`` over a grid, shape ``(len(taus), N, N)``."""
    taus = np.asarray(taus, dtype=float)
    for tau in taus:
        _check_tau(tau)
    evals, evecs = lattice.spectrum
    phases = np.exp(-1j * np.outer(taus, evals))
    return np.einsum("jk,tk,lk->tjl", evecs, phases, evecs)


def _coupled_mode_rhs(couplings: np.ndarray, amps: np.ndarray) -> np.ndarray:
    # i dA_j/dtau = k_{j-1} A_{j-1} + k_j A_{j+1}
    out = np.zeros_like(amps)
    out[:-1] += couplings[:, None] * amps[1:]
    out[1:] += couplings[:, None] * amps[:-1]
    return -1j * out


def transfer_matrix_oracle(lattice: LatticeSpec, tau: float, steps: int | None = None) -> TransferMatrix:
    """Propagator by classical RK4 integration of the coupled-mode equations.

    Independent of :func:`transfer_matrix`: no diagonalisation is used. The
    equations are linear, so one RK4 step applied to the identity yields the
    exact one-step RK4 update matrix, which is then applied ``steps`` times.

    Parameters
    ----------
    lattice : LatticeSpec
    tau : float
        Dimensionless end time.
    steps : int, optional
        Number of RK4 steps. Must satisfy ``(tau / steps) * max|eig| < 0.1``.
        Chosen automatically for ~1e-9 accuracy when omitted.
    """
    tau = _check_tau(tau)
    n = lattice.n_guides
    k = lattice.couplings / lattice.coupling_scale
    # Gershgorin bound; avoids using the eigensolver inside the oracle
    bound = float(np.max(np.concatenate(([k[0], k[-1]], k[:-1] + k[1:]))))
    if tau == 0:
        return TransferMatrix(0.0, np.eye(n, dtype=complex))
    if steps is None:
        steps = max(1, int(np.ceil(tau * bound / _RK4_DEFAULT_STEP)))
    if steps < 1 or (tau / steps) * bound >= _RK4_STEP_BOUND:
        raise ValueError(
            f"steps={steps} too small: need (tau/steps)*max|eig| < {_RK4_STEP_BOUND}"
        )
    h = tau / steps
    eye = np.eye(n, dtype=complex)
    k1 = _coupled_mode_rhs(k, eye)
    k2 = _coupled_mode_rhs(k, eye + 0.5 * h * k1)
    k3 = _coupled_mode_rhs(k, eye + 0.5 * h * k2)
    k4 = _coupled_mode_rhs(k, eye + h * k3)
    step = eye + (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)

    amps = eye
    for _ in range(steps):
        amps = step @ amps
    return TransferMatrix(tau, amps)


def mirror_mode(mode: int, n_guides: int) -> int:
    """1-based mirror image ``N + 1 - mode``."""
    return n_guides + 1 - mode
