"""Small dense complex-matrix helpers on top of numpy.

Everything here is deterministic: no randomized algorithms, so identical
inputs give bit-identical outputs across runs.  Default tolerances: 1e-10
for commutation/orthogonality checks, 1e-9 for reconstructions.
"""

from __future__ import annotations

import numpy as np

from .errors import DegeneracyError, DimensionMismatchError, NonCommutingError

TOL = 1e-10
RECON_TOL = 1e-9


def mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatchError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def tensor(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product; the left operand is the most significant factor."""
    return np.kron(a, b)


def adjoint(a: np.ndarray) -> np.ndarray:
    return a.conj().T


def trace(a: np.ndarray) -> complex:
    if a.shape[0] != a.shape[1]:
        raise DimensionMismatchError(f"trace of non-square {a.shape}")
    return complex(np.trace(a))


def commutes(a: np.ndarray, b: np.ndarray, tol: float = TOL) -> bool:
    return np.max(np.abs(a @ b - b @ a)) < tol


def _phase(z: complex) -> float:
    """Angle of z mapped to [0, 2*pi); values within 1e-9 of 2*pi clamp to 0."""
    ang = float(np.angle(z)) % (2.0 * np.pi)
    if ang > 2.0 * np.pi - 1e-9:
        ang = 0.0
    return ang


def _eigenspaces(b: np.ndarray, tol: float = 1e-8):
    """Eigenvalue clusters of a small normal matrix with orthonormal bases.

    Returns [(eigenvalue, basis)] ordered by ascending eigenvalue phase.
    Bases come from the SVD null space of (b - lam*I), so they are
    orthonormal even inside a degenerate cluster.
    """
    vals = np.linalg.eigvals(b)
    order = np.argsort([_phase(v) for v in vals], kind="stable")
    vals = vals[order]
    clusters = []
    for v in vals:
        if clusters and abs(v - clusters[-1][0][-1]) < tol:
            clusters[-1][0].append(v)
        else:
            clusters.append(([v], None))
    out = []
    for members, _ in clusters:
        lam = complex(np.mean(members))
        shifted = b - lam * np.eye(b.shape[0])
        _, s, vh = np.linalg.svd(shifted)
        rank = int(np.sum(s > tol * max(1.0, s[0] if s.size else 1.0)))
        basis = vh[rank:].conj().T
        if basis.shape[1] != len(members):
            raise DegeneracyError(
                f"eigenspace dimension {basis.shape[1]} != multiplicity {len(members)}"
            )
        out.append((lam, basis))
    return out


def joint_eigenprojectors(ops) -> list:
    """Common rank-one eigenprojectors of commuting unitaries.

    Refines eigenspaces sequentially through the operator list; every block
    must end up one-dimensional (true for maximal commuting Pauli sets).
    Output order is canonical: ascending lexicographic order of the tuple of
    eigenvalue phases with respect to the input sequence.  Each eigenvector's
    global phase is fixed by making its first nonzero amplitude real positive.
    """
    ops = [np.asarray(u, dtype=complex) for u in ops]
    dim = ops[0].shape[0]
    for u in ops:
        if u.shape != (dim, dim):
            raise DimensionMismatchError("operators must share a square shape")
    for i, a in enumerate(ops):
        for b in ops[i + 1 :]:
            if not commutes(a, b):
                raise NonCommutingError("input operators do not commute")

    blocks = [np.eye(dim, dtype=complex)]
    for u in ops:
        refined = []
        for v in blocks:
            if v.shape[1] == 1:
                refined.append(v)
                continue
            restricted = v.conj().T @ u @ v
            for _, basis in _eigenspaces(restricted):
                refined.append(v @ basis)
        blocks = refined

    vecs = []
    for v in blocks:
        if v.shape[1] != 1:
            raise DegeneracyError("joint spectrum did not resolve to dimension one")
        vec = v[:, 0]
        nz = np.flatnonzero(np.abs(vec) > 1e-9)
        vec = vec * (abs(vec[nz[0]]) / vec[nz[0]])
        vecs.append(vec)

    def key(vec):
        return tuple(_phase(vec.conj() @ u @ vec) for u in ops)

    vecs.sort(key=key)
    return [np.outer(v, v.conj()) for v in vecs]


def factorize_tensor(m: np.ndarray, dims) -> tuple | None:
    """Split m into (a, b) with m = kron(a, b), or None if no such split.

    Uses the realignment of m: the split exists iff the realigned matrix has
    numerical rank one.  Scale convention: a has unit Frobenius norm and the
    phase is chosen so trace(b) is real non-negative (falling back to b's
    largest entry if b is traceless).
    """
    d1, d2 = dims
    if m.shape != (d1 * d2, d1 * d2):
        raise DimensionMismatchError(f"expected {(d1 * d2, d1 * d2)}, got {m.shape}")
    r = m.reshape(d1, d2, d1, d2).transpose(0, 2, 1, 3).reshape(d1 * d1, d2 * d2)
    u, s, vh = np.linalg.svd(r)
    if s.size > 1 and s[1] > RECON_TOL * max(1.0, s[0]):
        return None
    a = (np.sqrt(s[0]) * u[:, 0]).reshape(d1, d1)
    b = (np.sqrt(s[0]) * vh[0, :]).reshape(d2, d2)
    tb = np.trace(b)
    ref = tb if abs(tb) > 1e-9 else b.flat[int(np.argmax(np.abs(b)))]
    phase = ref / abs(ref)
    b = b / phase
    a = a * phase
    na = np.linalg.norm(a)
    return a / na, b * na
