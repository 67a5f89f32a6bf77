"""Independent reference computations used only by the tests."""

import itertools
import math

import numpy as np
from scipy.linalg import expm


def occupation_basis(n_modes, max_photons):
    """All occupation tuples with total photon number <= max_photons."""
    return [
        occ for occ in itertools.product(range(max_photons + 1), repeat=n_modes)
        if sum(occ) <= max_photons
    ]


def second_quantized_hamiltonian(couplings, max_photons):
    """Dense H = sum_j k_j (a_j^dag a_{j+1} + h.c.) on the truncated Fock space."""
    n = len(couplings) + 1
    basis = occupation_basis(n, max_photons)
    index = {occ: i for i, occ in enumerate(basis)}
    H = np.zeros((len(basis), len(basis)))
    for col, occ in enumerate(basis):
        for j, k in enumerate(couplings):
            for src, dst in ((j + 1, j), (j, j + 1)):
                # a_dst^dag a_src
                if occ[src] == 0:
                    continue
                new = list(occ)
                amp = math.sqrt(occ[src])
                new[src] -= 1
                new[dst] += 1
                amp *= math.sqrt(new[dst])
                H[index[tuple(new)], col] += k * amp
    return basis, H


def evolve_brute_force(amplitudes, couplings, tau, max_photons):
    """Schroedinger evolution exp(-i H tau) of a sparse amplitude dict."""
    basis, H = second_quantized_hamiltonian(couplings, max_photons)
    vec = np.array([amplitudes.get(occ, 0.0) for occ in basis], dtype=complex)
    out = expm(-1j * H * tau) @ vec
    return dict(zip(basis, out))


def squeezed_fock_vector(r, phi, cutoff):
    """Single-mode squeezed vacuum in the number basis (even photon numbers only)."""
    vec = np.zeros(cutoff + 1, dtype=complex)
    t = math.tanh(r)
    for m in range(cutoff // 2 + 1):
        # sqrt((2m)!)/(m! 2^m) via logs to stay finite at large m
        log_c = 0.5 * math.lgamma(2 * m + 1) - math.lgamma(m + 1) - m * math.log(2)
        vec[2 * m] = np.exp(1j * m * phi) * t**m * math.exp(log_c)
    return vec / math.sqrt(math.cosh(r))


def coherent_fock_vector(alpha, cutoff):
    n = np.arange(cutoff + 1)
    log_fact = np.array([math.lgamma(k + 1) for k in n])
    mag = np.exp(-abs(alpha) ** 2 / 2 + n * np.log(abs(alpha) + 1e-300) - 0.5 * log_fact)
    return mag * np.exp(1j * n * np.angle(alpha))


def rk4_scalar_check(f, y0, t, steps):
    """Plain RK4 on a vector ODE y' = f(y); used to cross-check the oracle itself."""
    h = t / steps
    y = np.array(y0, dtype=complex)
    for _ in range(steps):
        k1 = f(y)
        k2 = f(y + 0.5 * h * k1)
        k3 = f(y + 0.5 * h * k2)
        k4 = f(y + h * k3)
        y = y + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
    return y


def witness_formula_13(tau, r, phi):
    """M(1,3) for four guides, J = 1, squeezed input in guide 1."""
    c, s = math.cos(tau), math.sin(tau)
    return c**2 * math.sinh(r) * (
        -2 * math.sqrt(3) * c**2 * math.cos(phi) * math.cosh(r) * s**2
        + (3 * s**4 + c**4) * math.sinh(r)
    )


def witness_formula_42(tau, r, phi):
    """M(4,2) for four guides, J = 1, squeezed input in guide 1."""
    c, s = math.cos(tau), math.sin(tau)
    return s**2 * math.sinh(r) * (
        2 * math.sqrt(3) * c**2 * math.cos(phi) * math.cosh(r) * s**2
        + (3 * c**4 + s**4) * math.sinh(r)
    )
