"""Generalized Stokes vectors and the net-dependent Hadamard bridge S = H W.

Pauli-word index convention: component j corresponds to the word
sigma_{j_1} (x) ... (x) sigma_{j_n} with j = sum_i j_i * 4^(n-i) (first
qubit most significant) and 0,1,2,3 <-> I, sigma_x, sigma_y, sigma_z.

Stokes components carry no 1/2^n prefactor: s_j = Tr(rho Sigma_j).  Under
this convention H has pure +-1 entries, H^{-1} = H^T / N^2, and the
subsystem selection matrices of the reduction engine are plain 0/1
matrices.  A 1/2^n rescaling recovers the normalized convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import NetConstructionError, ValidationError
from .nets import QuantumNet, net_context
from .wigner import DensityState

_SIGMA = (
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


@lru_cache(maxsize=8)
def pauli_words(n: int) -> np.ndarray:
    """All 4^n Pauli words as a (4^n, 2^n, 2^n) array in index order."""
    words = [np.array([[1.0 + 0.0j]])]
    for _ in range(n):
        words = [np.kron(w, s) for w in words for s in _SIGMA]
    return np.array(words)


@dataclass(frozen=True)
class StokesVector:
    n: int
    s: np.ndarray

    def __post_init__(self):
        s = np.asarray(self.s, dtype=float)
        if s.shape != (4**self.n,):
            raise ValidationError(f"s must have length {4 ** self.n} for n={self.n}")
        object.__setattr__(self, "s", s)


def stokes_from_rho(state: DensityState) -> StokesVector:
    """s_j = Tr(rho Sigma_j); s[0] = 1 for unit-trace inputs."""
    vals = np.einsum("jab,ba->j", pauli_words(state.n), state.rho)
    if np.max(np.abs(vals.imag)) > 1e-10:
        raise ValidationError("Stokes components carry imaginary residue")
    return StokesVector(state.n, vals.real)


@dataclass(frozen=True)
class HadamardMatrix:
    """The +-1 matrix with H[j, alpha] = Tr(Sigma_j A_alpha) for one net."""

    n: int
    net_id: int
    h: np.ndarray  # integer entries, exactly +-1

    @property
    def inverse(self) -> np.ndarray:
        return self.h.T / float(4**self.n)


def _hadamard_uncached(net: QuantumNet) -> HadamardMatrix:
    ops = net.ops_array
    raw = np.einsum("jab,kba->jk", pauli_words(net.n_qubits), ops)
    if np.max(np.abs(raw.imag)) > 1e-9 or np.max(np.abs(np.abs(raw.real) - 1.0)) > 1e-9:
        raise NetConstructionError(
            f"net {net.net_id}: Tr(Sigma_j A_alpha) entries are not all +-1"
        )
    h = np.where(raw.real > 0, 1, -1).astype(np.int64)
    return HadamardMatrix(net.n_qubits, net.net_id, h)


@lru_cache(maxsize=4096)
def _hadamard_by_id(n: int, net_id: int) -> HadamardMatrix:
    from .nets import build_net

    return _hadamard_uncached(build_net(net_context(n), net_id))


def hadamard_matrix(net: QuantumNet) -> HadamardMatrix:
    """Net-dependent Hadamard matrix realizing S = H W and W = H^T S / N^2."""
    return _hadamard_by_id(net.n_qubits, net.net_id)


def conjugation_matrix(net: QuantumNet) -> np.ndarray:
    """F with F W(rho) = W(conj(rho)); F[b, a] = Tr(conj(A_b) A_a) / N.

    F is real, satisfies F @ F = I, and is the same matrix for every net of
    a given size.
    """
    ops = net.ops_array
    f = np.einsum("bij,aji->ba", ops.conj(), ops) / net.order
    if np.max(np.abs(f.imag)) > 1e-10:
        raise NetConstructionError("conjugation matrix is not real")
    return f.real


def spinflip_matrix(net: QuantumNet) -> np.ndarray:
    """G with G W(rho) = W(sigma_y^(xn) conj(rho) sigma_y^(xn)).

    G is F with rows permuted by the phase-space translation whose operator
    is sigma_y^(xn) up to phase.
    """
    n = net.n_qubits
    u = np.array([[1.0 + 0.0j]])
    for _ in range(n):
        u = np.kron(u, _SIGMA[2])
    ops = net.ops_array
    flipped = np.einsum("ab,kbc,cd->kad", u, ops.conj(), u.conj().T)
    g = np.einsum("bij,aji->ba", flipped, ops) / net.order
    if np.max(np.abs(g.imag)) > 1e-10:
        raise NetConstructionError("spin-flip matrix is not real")
    return g.real
