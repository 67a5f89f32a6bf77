"""Exit criteria for the package, one test per criterion.

Run with ``pytest tests/test_acceptance.py -v``; a PASS/FAIL line per
criterion is printed in the terminal summary.
"""

import math
import time

import numpy as np
import pytest

from jxlattice import fock, gaussian
from jxlattice.cli import main
from jxlattice.config import ScenarioConfig
from jxlattice.lattice import build_lattice, transfer_matrices, transfer_matrix, transfer_matrix_oracle
from jxlattice.observables import fock_fidelity, tau_grid, transfer_and_revival_series

from .oracles import evolve_brute_force, witness_formula_13, witness_formula_42

HALF_PI, PI = math.pi / 2, math.pi
R = 1.15
ALPHA_SQ = 2.0


def fidelities(taus, **kw):
    config = ScenarioConfig.from_mapping(kw)
    return transfer_and_revival_series(config, build_lattice(config.n), taus)


def test_ac01_transfer_matrix_vs_rk4(criterion):
    with criterion("AC1 spectral A(tau) vs RK4 <= 1e-8, unitarity <= 1e-10, 100 draws < 10 s"):
        rng = np.random.default_rng(20240601)
        start = time.perf_counter()
        worst_rk4 = worst_unitary = 0.0
        for _ in range(100):
            n = int(rng.integers(2, 26))
            tau = float(rng.uniform(0, 2 * PI))
            lat = build_lattice(n)
            A = transfer_matrix(lat, tau).entries
            B = transfer_matrix_oracle(lat, tau).entries
            worst_rk4 = max(worst_rk4, np.max(np.abs(A - B)))
            worst_unitary = max(worst_unitary, np.max(np.abs(A @ A.conj().T - np.eye(n))))
        elapsed = time.perf_counter() - start
        assert worst_rk4 < 1e-8, worst_rk4
        assert worst_unitary < 1e-10, worst_unitary
        assert elapsed < 10, elapsed


def test_ac02_pst_amplitude_law(criterion):
    with criterion("AC2 |A(pi/2)| = anti-identity for N=2..25 (1e-10); uniform N=20 off by > 0.1"):
        for n in range(2, 26):
            A = np.abs(transfer_matrix(build_lattice(n), HALF_PI).entries)
            assert np.max(np.abs(A - np.fliplr(np.eye(n)))) < 1e-10, n
        U = np.abs(transfer_matrix(build_lattice(20, profile="uniform"), HALF_PI).entries)
        assert np.max(np.abs(U - np.fliplr(np.eye(20)))) > 0.1


def test_ac03_two_photon_fock(criterion):
    with criterion("AC3 two-photon Fock N=20: F(pi/2)=1 (1e-9), N_20(pi/2)=2 (1e-10), N_1(pi)=2"):
        tr, _ = fidelities([HALF_PI], scenario="fock2", n=20, input=1)
        assert abs(tr.values[0] - 1) < 1e-9
        lat = build_lattice(20)
        start = fock.two_photon_fock(1, 20)
        m_half = fock.mean_photon_numbers(fock.evolve_fock(start, transfer_matrix(lat, HALF_PI)))
        m_full = fock.mean_photon_numbers(fock.evolve_fock(start, transfer_matrix(lat, PI)))
        assert abs(m_half[19] - 2) < 1e-10
        assert abs(m_full[0] - 2) < 1e-10


def test_ac04_noon(criterion):
    with criterion("AC4 N00N N=20 (1,2): F=1 (1e-9); map on {19,20}^2 with sum 2; closed form 50 times (1e-10)"):
        tr, _ = fidelities([HALF_PI], scenario="noon2", n=20, input=1, input2=2)
        assert abs(tr.values[0] - 1) < 1e-9
        lat = build_lattice(20)
        start = fock.noon_state(1, 2, 20)
        p = fock.correlation_map(fock.evolve_fock(start, transfer_matrix(lat, HALF_PI))).matrix
        outside = p.copy()
        outside[18:, 18:] = 0
        assert np.max(np.abs(outside)) < 1e-10
        assert abs(p.sum() - 2) < 1e-10
        for A in transfer_matrices(lat, np.linspace(0, 2 * PI, 50)):
            p = fock.correlation_map(fock.evolve_fock(start, A)).matrix
            closed = np.abs(np.outer(A[:, 0], A[:, 0]) + np.outer(A[:, 1], A[:, 1])) ** 2
            assert np.max(np.abs(p - closed)) < 1e-10


def test_ac05_squeezed_parity(criterion):
    with criterion("AC5 squeezed r=1.15: F=1 (N=21), F=1/cosh(2r) (N=20) at 1e-9; q->p (N=20), q->q (N=21)"):
        tr21, _ = fidelities([HALF_PI], scenario="squeezed", n=21, r=R, phi=PI)
        tr20, _ = fidelities([HALF_PI], scenario="squeezed", n=20, r=R, phi=PI)
        assert abs(tr21.values[0] - 1) < 1e-9
        assert abs(tr20.values[0] - 1 / math.cosh(2 * R)) < 1e-9
        for n, swapped in ((20, True), (21, False)):
            lat = build_lattice(n)
            start = gaussian.squeezed_vacuum(1, R, PI, n)
            s0 = gaussian.squeezing_factors(start)
            assert s0.s_q[0] < 0 < s0.s_p[0]
            out = gaussian.squeezing_factors(gaussian.evolve_gaussian(start, transfer_matrix(lat, HALF_PI)))
            if swapped:
                assert out.s_p[n - 1] < 0 < out.s_q[n - 1]
            else:
                assert out.s_q[n - 1] < 0 < out.s_p[n - 1]


def test_ac06_squeezing_closed_form(criterion):
    with criterion("AC6 covariance-path s_j = closed form over 400-point grid, N in {20,21} (1e-10)"):
        taus = tau_grid()
        for n in (20, 21):
            lat = build_lattice(n)
            for phi in (0.0, PI):
                start = gaussian.squeezed_vacuum(1, R, phi, n)
                for A in transfer_matrices(lat, taus):
                    rep = gaussian.squeezing_factors(gaussian.evolve_gaussian(start, A))
                    closed = gaussian.squeezing_closed_form(A, 1, R, phi)
                    assert np.max(np.abs(rep.s_q - closed.s_q)) < 1e-10
                    assert np.max(np.abs(rep.s_p - closed.s_p)) < 1e-10


def test_ac07_witness(criterion):
    with criterion("AC7 N=4 witness M(1,3), M(4,2) match four-guide formulas (1e-9); min M(1,3) < 0 at phi=0"):
        taus = tau_grid()
        lat = build_lattice(4)
        mats = transfer_matrices(lat, taus)
        for phi in (0.0, PI):
            start = gaussian.squeezed_vacuum(1, R, phi, 4)
            m13 = []
            for tau, A in zip(taus, mats):
                out = gaussian.evolve_gaussian(start, A)
                m13.append(gaussian.witness_m(out, 1, 3))
                assert abs(m13[-1] - witness_formula_13(tau, R, phi)) < 1e-9
                assert abs(gaussian.witness_m(out, 4, 2) - witness_formula_42(tau, R, phi)) < 1e-9
            if phi == 0.0:
                assert min(m13) < 0


def test_ac08_coherent_parity(criterion):
    with criterion("AC8 coherent |a|^2=2: F(pi/2)=1, e^-4, e^-8 for N=21,20,19; revival pi (N=21), 2pi (N=20)"):
        expected = {21: 1.0, 20: math.exp(-4), 19: math.exp(-8)}
        for n, value in expected.items():
            tr, _ = fidelities([HALF_PI], scenario="coherent", n=n, alpha_sq=ALPHA_SQ)
            assert abs(tr.values[0] - value) < 1e-9, (n, tr.values[0])
        _, rev21 = fidelities([PI], scenario="coherent", n=21, alpha_sq=ALPHA_SQ)
        _, rev20 = fidelities([2 * PI], scenario="coherent", n=20, alpha_sq=ALPHA_SQ)
        assert abs(rev21.values[0] - 1) < 1e-9
        assert abs(rev20.values[0] - 1) < 1e-9


def test_ac09_fock_brute_force(criterion):
    with criterion("AC9 evolve_fock vs truncated second-quantized Hamiltonian, N=4 P=2, 20 times (1e-8)"):
        rng = np.random.default_rng(7)
        lat = build_lattice(4)
        state = fock.FockState.from_amplitudes(
            4, {(2, 0, 0, 0): 0.5, (0, 1, 1, 0): 0.5j, (0, 0, 0, 2): -0.5, (1, 0, 0, 1): 0.5}
        )
        for tau in rng.uniform(0, 2 * PI, 20):
            ref = evolve_brute_force(state.amplitudes, lat.couplings, tau, max_photons=2)
            got = fock.evolve_fock(state, transfer_matrix(lat, tau)).amplitudes
            assert max(abs(got.get(occ, 0) - amp) for occ, amp in ref.items()) < 1e-8
            assert fock_fidelity(fock.evolve_fock(state, transfer_matrix(lat, tau)), state) <= 1 + 1e-12


SUITE = [
    ["--scenario", "fock2", "--n", "20", "--snapshots", "0,0.7853981633974483,1.5707963267948966"],
    ["--scenario", "noon2", "--n", "20", "--snapshots", "0,0.7853981633974483,1.5707963267948966"],
    ["--scenario", "squeezed", "--n", "20", "--r", "1.15", "--phi", "3.141592653589793"],
    ["--scenario", "squeezed", "--n", "21", "--r", "1.15", "--phi", "3.141592653589793"],
    ["--scenario", "squeezed", "--n", "4", "--r", "1.15", "--phi", "0", "--witness", "1-3,4-2"],
    ["--scenario", "coherent", "--n", "19", "--alpha-sq", "2"],
    ["--scenario", "coherent", "--n", "20", "--alpha-sq", "2"],
    ["--scenario", "coherent", "--n", "21", "--alpha-sq", "2"],
]


def test_ac10_determinism(tmp_path, criterion):
    with criterion("AC10 two runs of the full scenario suite give byte-identical JSON"):
        for run in ("a", "b"):
            (tmp_path / run).mkdir()
            for i, args in enumerate(SUITE):
                assert main(["run", *args, "--out", str(tmp_path / run / f"{i}.json")]) == 0
        for i in range(len(SUITE)):
            assert (tmp_path / "a" / f"{i}.json").read_bytes() == (tmp_path / "b" / f"{i}.json").read_bytes()
