"""
Coherent light: transfer and revival
====================================

A coherent state with |alpha|^2 = 2 enters guide 1. Photon number always
transfers. The state itself arrives intact only when the arrival phase
(-i)^(N-1) equals 1, i.e. N = 1 (mod 4). Equivalent CLI::

    jxlattice run --scenario coherent --n 19 --alpha-sq 2 --out coh19.json
"""

import numpy as np

from jxlattice import ScenarioConfig, build_lattice, transfer_and_revival_series

key = [np.pi / 2, np.pi, 2 * np.pi]
for n in (19, 20, 21):
    config = ScenarioConfig.from_mapping({"scenario": "coherent", "n": n, "alpha_sq": 2})
    transfer, revival = transfer_and_revival_series(config, build_lattice(n), key)
    print(f"N={n}: F_transfer(pi/2)={transfer.values[0]:.6e}  "
          f"F_revival(pi)={revival.values[1]:.6e}  F_revival(2pi)={revival.values[2]:.6e}")
print("exp(-4) =", np.exp(-4), " exp(-8) =", np.exp(-8))
