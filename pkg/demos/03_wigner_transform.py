"""Discrete Wigner functions: transform, negativity, and the Stokes bridge.

Run with:  python demos/03_wigner_transform.py
"""

import numpy as np

from dwfnet import (
    DensityState,
    build_net,
    dwf_from_rho,
    hadamard_matrix,
    net_context,
    purity_from_dwf,
    rho_from_dwf,
    spinflip_matrix,
    stokes_from_rho,
)

ctx = net_context(2)
net = build_net(ctx, 7)

# --- Bell state --------------------------------------------------------
psi = np.zeros(4)
psi[0] = psi[3] = 1.0 / np.sqrt(2.0)
bell = DensityState(2, np.outer(psi, psi))

w = dwf_from_rho(bell, net)
print("Bell-state DWF on net 7 (4 x 4 grid, rows = q, cols = p):")
print(np.round(w.w.reshape(4, 4), 4))
print("sum:", round(float(w.w.sum()), 12), " purity:", round(purity_from_dwf(w), 12))
print("negative values present:", bool((w.w < -1e-12).any()))

# the transform is invertible: rho = sum_alpha w_alpha A_alpha
back = rho_from_dwf(w, net)
print("round trip recovers rho:", np.allclose(back.rho, bell.rho, atol=1e-12))

# --- Stokes bridge: S = H W --------------------------------------------
h = hadamard_matrix(net)
s = stokes_from_rho(bell)
print("\nHadamard bridge S(rho) == H w(rho):", np.allclose(h.h @ w.w, s.s.real, atol=1e-12))
print("H entries are all +/-1:", set(np.unique(h.h)) == {-1, 1})
print("H H^T == N^2 I:", np.array_equal(h.h @ h.h.T, 16 * np.eye(16, dtype=np.int64)))

# --- spin flip on the DWF grid ------------------------------------------
g = spinflip_matrix(net)
print("\nBell state is invariant under the spin-flip matrix G:",
      np.allclose(g @ w.w, w.w, atol=1e-12))
