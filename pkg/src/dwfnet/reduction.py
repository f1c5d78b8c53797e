"""Subsystem reduction of discrete Wigner functions for arbitrary nets.

The reduction route is W -> S = H_n W (Stokes vector of the composite),
keep only the Pauli words acting as identity on the traced qubits
(selection matrix T_k), then map back with the target net's inverse
Hadamard: P = H_k^{-1} T_k H_n.  Applying P to the Wigner vector of any
state gives the Wigner vector (in the target net) of the partial trace.

The marginal-sum and sign-kernel shortcuts for product-structured two-qubit
nets are provided as an independent cross-check path, together with a
concurrence evaluator for pure two-qubit states.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import (
    DimensionMismatchError,
    NetMismatchError,
    PurityError,
    UnsupportedNetError,
    ValidationError,
)
from .nets import (
    QuantumNet,
    build_net,
    detect_product_structure,
    net_context,
    _qubit_point_indices,
)
from .stokes import hadamard_matrix
from .wigner import WignerFunction, purity_from_dwf


@dataclass(frozen=True)
class KeepSet:
    """The qubit positions retained by a reduction (0-based, ascending)."""

    n: int
    keep: tuple

    def __post_init__(self):
        keep = tuple(self.keep)
        if not keep:
            raise ValidationError("keep set must be non-empty")
        if list(keep) != sorted(set(keep)) or keep[0] < 0 or keep[-1] >= self.n:
            raise ValidationError(
                f"keep positions {keep} must be strictly increasing and < n={self.n}"
            )
        object.__setattr__(self, "keep", keep)

    @property
    def k(self) -> int:
        return len(self.keep)


def selection_matrix(keep: KeepSet) -> np.ndarray:
    """0/1 matrix extracting the kept qubits' Stokes components.

    Row r (a k-qubit Pauli index) selects the n-qubit Pauli index whose
    digits equal r's digits on kept positions and 0 on traced positions.
    """
    n, k = keep.n, keep.k
    t = np.zeros((4**k, 4**n), dtype=np.int64)
    for r in range(4**k):
        digits = [0] * n
        rr = r
        for pos in reversed(keep.keep):
            digits[pos] = rr % 4
            rr //= 4
        c = 0
        for d in digits:
            c = c * 4 + d
        t[r, c] = 1
    return t


@dataclass(frozen=True)
class ReductionMap:
    """Precomputed 4^k x 4^n matrix taking composite DWFs to subsystem DWFs."""

    keep: KeepSet
    source_net: int
    target_net: int
    p: np.ndarray


@lru_cache(maxsize=4096)
def _reduction_map_cached(n: int, keep: tuple, source_net: int, target_net: int):
    ks = KeepSet(n, keep)
    h_n = hadamard_matrix(build_net(net_context(n), source_net))
    h_k = hadamard_matrix(build_net(net_context(ks.k), target_net))
    p = h_k.inverse @ selection_matrix(ks) @ h_n.h
    return ReductionMap(ks, source_net, target_net, p)


def reduction_map(
    source_net: QuantumNet, target_net: QuantumNet, keep: KeepSet
) -> ReductionMap:
    """P = H_k^{-1} T_k H_n for the given net pair and keep set; exact."""
    if source_net.n_qubits != keep.n:
        raise DimensionMismatchError(
            f"source net is for n={source_net.n_qubits}, keep set for n={keep.n}"
        )
    if target_net.n_qubits != keep.k:
        raise DimensionMismatchError(
            f"target net is for n={target_net.n_qubits}, keep set keeps k={keep.k}"
        )
    return _reduction_map_cached(
        keep.n, keep.keep, source_net.net_id, target_net.net_id
    )


def reduce_dwf(w: WignerFunction, rmap: ReductionMap) -> WignerFunction:
    """Apply a reduction map: w' = P w, tagged with the target net."""
    if w.n != rmap.keep.n or w.net_id != rmap.source_net:
        raise NetMismatchError(
            f"Wigner function (n={w.n}, net {w.net_id}) does not match reduction "
            f"map source (n={rmap.keep.n}, net {rmap.source_net})"
        )
    return WignerFunction(rmap.keep.k, rmap.target_net, rmap.p @ w.w)


def convert_net(w: WignerFunction, target_net: QuantumNet) -> WignerFunction:
    """Re-express a DWF in another net of the same size (keep-all reduction)."""
    if target_net.n_qubits != w.n:
        raise DimensionMismatchError("target net size differs from the input DWF")
    rmap = _reduction_map_cached(w.n, tuple(range(w.n)), w.net_id, target_net.net_id)
    return reduce_dwf(w, rmap)


# -- product-net shortcut (cross-check path) -------------------------------


def shortcut_reduce(w: WignerFunction, net: QuantumNet, which: str) -> WignerFunction:
    """Two-qubit reduction via the product-structure shortcut.

    which="A": subsystem 1 by plain marginal over the second qubit's point
    labels; the output net is the one matching the first factor family.
    which="B": subsystem 2 by the (-1)^((q+q')(p+p')) sign kernel; the
    output net matches the conjugated second-factor family.

    Only defined when the net's point operators have the tensor-product
    structure; other nets raise.
    """
    if net.n_qubits != 2:
        raise UnsupportedNetError("shortcut reduction is defined for two qubits")
    if w.n != 2 or w.net_id != net.net_id:
        raise NetMismatchError("Wigner function does not match the supplied net")
    report = detect_product_structure(net)
    if not report.is_product:
        raise UnsupportedNetError(
            f"net {net.net_id} has no product structure; use reduction_map"
        )
    pairs = _qubit_point_indices(net.ctx)  # per point: (alpha_1, alpha_2)
    if which == "A":
        out = np.zeros(4)
        for value, (i1, _) in zip(w.w, pairs):
            out[i1] += value
        return WignerFunction(1, report.factor_a_net, out)
    if which == "B":
        out = np.zeros(4)
        for beta in range(4):
            qb, pb = divmod(beta, 2)
            acc = 0.0
            for value, (_, i2) in zip(w.w, pairs):
                qa, pa = divmod(i2, 2)
                sign = -1.0 if (qa ^ qb) & (pa ^ pb) else 1.0
                acc += sign * value
            out[beta] = 0.5 * acc
        return WignerFunction(1, report.factor_b_conj_net, out)
    raise ValidationError(f"which must be 'A' or 'B', got {which!r}")


def concurrence_from_dwf(w: WignerFunction, source_net: QuantumNet) -> float:
    """Concurrence of a pure two-qubit state straight from its DWF.

    Reduces to qubit 0 (any fixed target net; the value is net independent)
    and evaluates sqrt(2 (1 - Tr rho_A^2)) via the purity identity
    Tr rho_A^2 = 2 sum (w^A)^2.
    """
    if w.n != 2:
        raise ValidationError("concurrence is defined for two-qubit DWFs")
    purity = purity_from_dwf(w)
    if abs(purity - 1.0) > 1e-6:
        raise PurityError(
            f"input purity {purity:.8f} is not 1; concurrence needs a pure state"
        )
    rmap = reduction_map(
        source_net, build_net(net_context(1), 0), KeepSet(2, (0,))
    )
    wa = reduce_dwf(w, rmap)
    purity_a = purity_from_dwf(wa)
    return float(np.sqrt(max(0.0, 2.0 * (1.0 - purity_a))))
