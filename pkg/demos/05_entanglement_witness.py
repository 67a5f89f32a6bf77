"""
Entanglement between guides
===========================

Four guides, squeezed light in guide 1. The witness M(j,k) goes negative
when guides j and k are entangled. Equivalent CLI::

    jxlattice run --scenario squeezed --n 4 --r 1.15 --phi 0 --witness 1-3,4-2 --format csv --out witness_csv
"""

import numpy as np

from jxlattice import build_lattice, evolve_gaussian, squeezed_vacuum, transfer_matrices, witness_m

lattice = build_lattice(4)
taus = np.linspace(0, np.pi, 13)
for phi, pair in ((0.0, (1, 3)), (np.pi, (4, 2))):
    start = squeezed_vacuum(1, 1.15, phi, 4)
    values = [witness_m(evolve_gaussian(start, A), *pair) for A in transfer_matrices(lattice, taus)]
    print(f"phi={phi:.3f}  M{pair}:", np.round(values, 3))
    print("   entangled at tau =", np.round(taus[np.array(values) < 0], 3))
