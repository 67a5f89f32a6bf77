"""
Parabolic coupling and mirror transfer
======================================

Build a 20-guide Jx lattice, look at its coupling profile and spectrum,
and watch a single excitation hop from guide 1 to guide 20 at J t = pi/2.
"""

import numpy as np

from jxlattice import build_lattice, coupling_matrix, transfer_matrix, transfer_matrix_oracle

lattice = build_lattice(20, coupling_scale=1.0)
print("couplings J_j:", np.round(lattice.couplings, 3))

# The coupling matrix has an equally spaced spectrum, gap 2J.
evals = np.linalg.eigvalsh(coupling_matrix(lattice))
print("eigenvalues:", evals.round(6))

# |A_{j,1}| along the lattice at a few times.
for tau in (0.0, np.pi / 4, np.pi / 2, np.pi):
    col = np.abs(transfer_matrix(lattice, tau).entries[:, 0])
    print(f"tau={tau:5.3f}  |A_j1| =", np.round(col, 3))

# The phase picked up on arrival is (-i)^(N-1); an RK4 integration agrees.
A = transfer_matrix(lattice, np.pi / 2).entries
B = transfer_matrix_oracle(lattice, np.pi / 2).entries
print("A_20,1 =", np.round(A[19, 0], 12), " RK4 max deviation:", np.abs(A - B).max())

# A uniform array does not transfer.
uniform = build_lattice(20, profile="uniform")
print("uniform array |A_20,1(pi/2)| =", abs(transfer_matrix(uniform, np.pi / 2).entries[19, 0]))
