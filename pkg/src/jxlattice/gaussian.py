"""
Gaussian states of the lattice modes: squeezed vacua, coherent states,
their passive linear evolution and the quadrature observables.

Quadratures are ``q = (a + a^dag)/sqrt(2)`` and ``p = (a - a^dag)/(sqrt(2) i)``,
ordered ``(q_1, p_1, ..., q_N, p_N)``. The covariance is the symmetrised one,
so the vacuum has covariance ``I/2``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .lattice import TransferMatrix

__all__ = [
    "GaussianState",
    "SqueezingReport",
    "vacuum",
    "squeezed_vacuum",
    "coherent_state",
    "passive_symplectic",
    "evolve_gaussian",
    "ladder_moments",
    "mean_photon_numbers",
    "squeezing_factors",
    "squeezing_closed_form",
    "witness_m",
    "gaussian_overlap",
    "symplectic_form",
]

PHYSICAL_TOL = 1e-9


def symplectic_form(n_modes: int) -> np.ndarray:
    return np.kron(np.eye(n_modes), np.array([[0.0, 1.0], [-1.0, 0.0]]))


@dataclass(frozen=True, eq=False)
class GaussianState:
    """Quadrature means and covariance of an ``n_modes``-mode Gaussian state."""

    n_modes: int
    mean: np.ndarray
    covariance: np.ndarray

    def __post_init__(self):
        dim = 2 * self.n_modes
        if self.mean.shape != (dim,) or self.covariance.shape != (dim, dim):
            raise ValueError(
                f"expected mean ({dim},) and covariance ({dim}, {dim}); "
                f"got {self.mean.shape} and {self.covariance.shape}"
            )
        if not np.allclose(self.covariance, self.covariance.T, atol=PHYSICAL_TOL, rtol=0):
            raise ValueError("covariance matrix is not symmetric")
        bona_fide = self.covariance + 0.5j * symplectic_form(self.n_modes)
        if np.linalg.eigvalsh(bona_fide).min() < -PHYSICAL_TOL:
            raise ValueError("covariance violates the uncertainty principle")

    def symplectic_eigenvalues(self) -> np.ndarray:
        """Williamson eigenvalues, ascending; all 1/2 for a pure state."""
        vals = np.abs(np.linalg.eigvals(1j * symplectic_form(self.n_modes) @ self.covariance))
        return np.sort(vals)[::2]

    def is_pure(self, tol: float = PHYSICAL_TOL) -> bool:
        return bool(np.all(np.abs(self.symplectic_eigenvalues() - 0.5) < tol))

    def quadrature_means(self, mode: int) -> tuple[float, float]:
        i = 2 * (mode - 1)
        return float(self.mean[i]), float(self.mean[i + 1])


@dataclass(frozen=True, eq=False)
class SqueezingReport:
    """Per-mode squeezing factors ``Var(q_j) - 1/2`` and ``Var(p_j) - 1/2``.

    Negative entries mark squeezing in that quadrature.
    """

    s_q: np.ndarray
    s_p: np.ndarray
    tau: float | None = None

    def to_csv_rows(self) -> list[tuple]:
        return [
            (self.tau, j + 1, float(sq), float(sp))
            for j, (sq, sp) in enumerate(zip(self.s_q, self.s_p))
        ]


def _check_mode(mode: int, n_modes: int) -> int:
    if int(mode) != mode or not 1 <= mode <= n_modes:
        raise ValueError(f"mode must be an integer in 1..{n_modes}, got {mode!r}")
    return int(mode)


def vacuum(n_modes: int) -> GaussianState:
    return GaussianState(n_modes, np.zeros(2 * n_modes), 0.5 * np.eye(2 * n_modes))


def squeezed_vacuum(l: int, r: float, phi: float, n_modes: int) -> GaussianState:
    """Squeezed vacuum ``exp(xi a_l^dag^2 / 2 - xi^* a_l^2 / 2)|0>`` with ``xi = r e^{i phi}``.

    With this sign convention ``<a_l^2> = cosh(r) sinh(r) e^{i phi}``, so
    ``phi = pi`` squeezes the q quadrature.
    """
    l = _check_mode(l, n_modes)
    if r < 0:
        raise ValueError(f"squeezing strength r must be >= 0, got {r} (put the sign in phi)")
    nbar = np.sinh(r) ** 2
    pair = np.cosh(r) * np.sinh(r) * np.exp(1j * phi)
    cov = 0.5 * np.eye(2 * n_modes)
    i = 2 * (l - 1)
    cov[i : i + 2, i : i + 2] = [
        [0.5 + nbar + pair.real, pair.imag],
        [pair.imag, 0.5 + nbar - pair.real],
    ]
    return GaussianState(n_modes, np.zeros(2 * n_modes), cov)


def coherent_state(l: int, alpha: complex, n_modes: int) -> GaussianState:
    """Coherent state ``|alpha>`` in guide ``l``, vacuum elsewhere."""
    l = _check_mode(l, n_modes)
    mean = np.zeros(2 * n_modes)
    mean[2 * (l - 1)] = np.sqrt(2) * np.real(alpha)
    mean[2 * (l - 1) + 1] = np.sqrt(2) * np.imag(alpha)
    return GaussianState(n_modes, mean, 0.5 * np.eye(2 * n_modes))


def passive_symplectic(A: TransferMatrix | np.ndarray) -> np.ndarray:
    """Real ``2N x 2N`` orthogonal symplectic matrix of the unitary ``A``.

    From ``q' + i p' = A (q + i p)``: ``q' = Re(A) q - Im(A) p`` and
    ``p' = Im(A) q + Re(A) p``.
    """
    mat = A.entries if isinstance(A, TransferMatrix) else np.asarray(A)
    n = mat.shape[0]
    S = np.empty((2 * n, 2 * n))
    S[0::2, 0::2] = mat.real
    S[0::2, 1::2] = -mat.imag
    S[1::2, 0::2] = mat.imag
    S[1::2, 1::2] = mat.real
    return S


def evolve_gaussian(state: GaussianState, A: TransferMatrix | np.ndarray) -> GaussianState:
    S = passive_symplectic(A)
    if S.shape[0] != 2 * state.n_modes:
        raise ValueError(
            f"transfer matrix for {S.shape[0] // 2} modes applied to {state.n_modes}-mode state"
        )
    return GaussianState(state.n_modes, S @ state.mean, S @ state.covariance @ S.T)


def ladder_moments(state: GaussianState) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """First and second moments of the ladder operators.

    Returns
    -------
    alpha : ndarray, shape (N,)
        ``<a_j>``.
    normal : ndarray, shape (N, N)
        ``<a_j^dag a_k>``.
    anomalous : ndarray, shape (N, N)
        ``<a_j a_k>``.
    """
    V = state.covariance
    alpha = (state.mean[0::2] + 1j * state.mean[1::2]) / np.sqrt(2)
    qq, pp = V[0::2, 0::2], V[1::2, 1::2]
    qp, pq = V[0::2, 1::2], V[1::2, 0::2]
    normal = 0.5 * (qq + pp + 1j * (qp - pq)) - 0.5 * np.eye(state.n_modes)
    normal = normal + np.outer(alpha.conj(), alpha)
    anomalous = 0.5 * (qq - pp + 1j * (qp + pq)) + np.outer(alpha, alpha)
    return alpha, normal, anomalous


def mean_photon_numbers(state: GaussianState) -> np.ndarray:
    _, normal, _ = ladder_moments(state)
    return normal.diagonal().real.copy()


def squeezing_factors(state: GaussianState, tau: float | None = None) -> SqueezingReport:
    """Read ``s_j(q)`` and ``s_j(p)`` off the covariance diagonal."""
    diag = state.covariance.diagonal()
    return SqueezingReport(diag[0::2] - 0.5, diag[1::2] - 0.5, tau)


def squeezing_closed_form(A: TransferMatrix | np.ndarray, l: int, r: float, phi: float,
                          tau: float | None = None) -> SqueezingReport:
    """Squeezing factors of an evolved single-mode squeezed vacuum from ``A`` alone.

    ``s_j = |A_jl|^2 sinh^2 r -/+ sinh(2r)/4 (A_jl^2 e^{i phi} + c.c.)``, with
    the upper sign for p and the lower for q.
    """
    mat = A.entries if isinstance(A, TransferMatrix) else np.asarray(A)
    col = mat[:, l - 1]
    cross = 0.25 * np.sinh(2 * r) * 2 * np.real(col**2 * np.exp(1j * phi))
    base = np.abs(col) ** 2 * np.sinh(r) ** 2
    return SqueezingReport(base + cross, base - cross, tau)


def witness_m(state: GaussianState, j: int, k: int) -> float:
    """``M(j,k) = <n_j> + <n_k> + <a_j a_k> + <a_j^dag a_k^dag>``.

    Negative values certify entanglement between guides ``j`` and ``k``.
    """
    j = _check_mode(j, state.n_modes)
    k = _check_mode(k, state.n_modes)
    if j == k:
        raise ValueError("witness needs two distinct modes")
    _, normal, anomalous = ladder_moments(state)
    return float(
        normal[j - 1, j - 1].real + normal[k - 1, k - 1].real + 2 * anomalous[j - 1, k - 1].real
    )


def gaussian_overlap(a: GaussianState, b: GaussianState) -> float:
    """``|<a|b>|^2`` for two pure Gaussian states.

    Uses ``Tr(rho_a rho_b) = exp(-d^T (V_a + V_b)^{-1} d / 2) / sqrt(det(V_a + V_b))``,
    valid with vacuum covariance ``I/2``.
    """
    if a.n_modes != b.n_modes:
        raise ValueError(f"mode count mismatch: {a.n_modes} vs {b.n_modes}")
    for name, s in (("first", a), ("second", b)):
        if not s.is_pure():
            raise ValueError(f"{name} state is mixed; overlap formula needs pure states")
    total = a.covariance + b.covariance
    d = a.mean - b.mean
    _, logdet = np.linalg.slogdet(total)
    expo = -0.5 * d @ np.linalg.solve(total, d) - 0.5 * logdet
    return float(min(1.0, np.exp(expo)))
