"""
Two photons in one guide
========================

Mean photon number in guides 1 and 20 when two photons enter guide 1,
plus the transfer and revival fidelities. Equivalent CLI call::

    jxlattice run --scenario fock2 --n 20 --input 1 --out fock2.json
"""

import numpy as np

from jxlattice import ScenarioConfig, run_scenario

report = run_scenario(ScenarioConfig.from_mapping({"scenario": "fock2", "n": 20, "grid": 17, "tau_max": np.pi}))

print(" tau     N_1     N_20    F_transfer  F_revival")
for tau, row, ft, fr in zip(report.grid, report.mean_photon,
                            report.fidelity_transfer.values, report.fidelity_revival.values):
    print(f"{tau:5.3f}  {row[0]:6.4f}  {row[19]:6.4f}  {ft:10.6f}  {fr:9.6f}")

print(report.key_times)
