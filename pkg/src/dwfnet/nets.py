"""Quantum nets: line-projector assignments and phase-point operators.

A net is identified by N+1 digits, one per striation in canonical order,
naming which eigenstate of the striation's translation group sits on its
ray.  Every other line inherits its projector by translating the ray by the
canonical representative shift, so the whole net is fixed by its digits.
The scalar net id is the mixed-radix value of the digits with striation 0
most significant.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import (
    NetConstructionError,
    UnsupportedDimensionError,
    UnsupportedNetError,
    ValidationError,
)
from .ffield import GF2m
from .matkernel import factorize_tensor
from .phasespace import PhaseSpace, Point
from .translations import TranslationTable, build_eigensystems

_PAULI = {
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
}

FULL_ENUMERATION_LIMIT = 4  # N above this needs explicit sampling


class NetContext:
    """Per-field cache of everything net construction needs."""

    def __init__(self, m: int) -> None:
        self.field = GF2m(m)
        self.space = PhaseSpace(self.field)
        self.table = TranslationTable(self.space)
        self.eigensystems = build_eigensystems(self.space, self.table)

    @property
    def order(self) -> int:
        return self.field.order

    @property
    def n_qubits(self) -> int:
        return self.field.m

    @property
    def net_count(self) -> int:
        n = self.order
        return n ** (n + 1)


@lru_cache(maxsize=None)
def net_context(m: int) -> NetContext:
    return NetContext(m)


def digits_of(net_id: int, order: int) -> tuple:
    """Mixed-radix digits of a scalar net id (striation 0 most significant)."""
    count = order ** (order + 1)
    if not 0 <= net_id < count:
        raise ValidationError(f"net id {net_id} out of range [0, {count})")
    digits = []
    for _ in range(order + 1):
        digits.append(net_id % order)
        net_id //= order
    return tuple(reversed(digits))


def id_of(digits, order: int) -> int:
    if len(digits) != order + 1 or any(not 0 <= d < order for d in digits):
        raise ValidationError(f"invalid net digits {digits} for N={order}")
    value = 0
    for d in digits:
        value = value * order + d
    return value


class QuantumNet:
    """A built net: one projector per line and the N^2 point operators."""

    def __init__(self, ctx: NetContext, net_id: int) -> None:
        self.ctx = ctx
        self.net_id = net_id
        self.digits = digits_of(net_id, ctx.order)
        n = ctx.order

        # (striation_id, c) -> rank-one projector
        self.projectors = {}
        for es, st, digit in zip(ctx.eigensystems, ctx.space.striations, self.digits):
            ray = es.states[digit]
            self.projectors[(st.striation_id, 0)] = ray
            for c in range(1, n):
                t = ctx.table[ctx.space.representative_shift(st.striation_id, c)]
                self.projectors[(st.striation_id, c)] = t @ ray @ t.conj().T

        eye = np.eye(n, dtype=complex)
        point_ops = []
        for pt in ctx.space.points:
            acc = -eye.copy()
            for line in ctx.space.lines_through(pt):
                acc += self.projectors[(line.striation_id, line.c)]
            point_ops.append(acc)
        self.point_ops = tuple(point_ops)
        self.ops_array = np.array(point_ops)  # (N^2, N, N) stacked view

    @property
    def order(self) -> int:
        return self.ctx.order

    @property
    def n_qubits(self) -> int:
        return self.ctx.n_qubits

    def projector(self, line) -> np.ndarray:
        return self.projectors[(line.striation_id, line.c)]

    def point_op(self, pt: Point) -> np.ndarray:
        return self.point_ops[self.ctx.space.point_index(pt)]


def build_net(ctx: NetContext, net_id: int) -> QuantumNet:
    return QuantumNet(ctx, net_id)


def enumerate_nets(ctx: NetContext, sample: int | None = None):
    """Net ids in deterministic order.

    Full enumeration (ascending ids) is allowed only for N <= 4; larger
    fields must pass an explicit `sample` count and get evenly strided ids.
    """
    total = ctx.net_count
    if sample is None:
        if ctx.order > FULL_ENUMERATION_LIMIT:
            raise UnsupportedDimensionError(
                f"full enumeration of {total} nets for N={ctx.order} refused; "
                "pass an explicit sample count"
            )
        return range(total)
    if not 1 <= sample <= total:
        raise ValidationError(f"sample count {sample} out of range [1, {total}]")
    stride = total // sample
    return range(0, stride * sample, stride)


def _match_state(projector: np.ndarray, states, tol: float = 1e-8) -> int:
    """Index of the canonical eigenstate equal to `projector`."""
    for i, s in enumerate(states):
        if np.max(np.abs(projector - s)) < tol:
            return i
    raise NetConstructionError("projector does not match any canonical eigenstate")


@lru_cache(maxsize=8)
def _shift_digit_permutations(m: int):
    """perm[beta_index][striation][digit] -> digit of the conjugated net.

    Conjugating every line projector by T_beta maps a net to another net
    with the same line geometry: within each striation the eigenstates are
    permuted, so only the ray digits move.  (Shifting the lines along with
    the conjugation is the identity on covariantly built nets, so the
    conjugation action is what produces the size-N^2 orbits.)
    """
    ctx = net_context(m)
    space, table = ctx.space, ctx.table
    perms = []
    for beta in space.points:
        u = table[beta]
        per_striation = []
        for es in ctx.eigensystems:
            per_striation.append(
                tuple(
                    _match_state(u @ s @ u.conj().T, es.states) for s in es.states
                )
            )
        perms.append(tuple(per_striation))
    return tuple(perms)


def translate_net_id(ctx: NetContext, net_id: int, beta_index: int) -> int:
    """Net id after conjugating all projectors by the translation operator
    of the point with index beta_index."""
    perms = _shift_digit_permutations(ctx.n_qubits)[beta_index]
    digits = digits_of(net_id, ctx.order)
    return id_of([perms[s][d] for s, d in enumerate(digits)], ctx.order)


def classify_nets(ctx: NetContext) -> dict:
    """Partition all net ids into translation orbits.

    Two nets are in one orbit when some translation operator conjugates
    every projector of one into the other.  Returns
    {orbit_representative: sorted tuple of member ids}; the representative
    is the smallest id in the orbit.
    """
    if ctx.order > FULL_ENUMERATION_LIMIT:
        raise UnsupportedDimensionError(
            f"classification over all {ctx.net_count} nets refused for N={ctx.order}"
        )
    n_points = ctx.order**2
    seen = {}
    orbits = {}
    for net_id in enumerate_nets(ctx):
        if net_id in seen:
            continue
        orbit = sorted(
            {translate_net_id(ctx, net_id, b) for b in range(n_points)}
        )
        if net_id not in orbit:
            raise NetConstructionError("identity shift failed to fix the net")
        rep = orbit[0]
        orbits[rep] = tuple(orbit)
        for member in orbit:
            seen[member] = rep
    return orbits


def orbit_representative(ctx: NetContext, net_id: int) -> int:
    """Smallest net id in the translation orbit of net_id."""
    return min(
        translate_net_id(ctx, net_id, b) for b in range(ctx.order**2)
    )


# -- product structure (two-qubit nets) ----------------------------------


@lru_cache(maxsize=1)
def _single_qubit_families():
    """Point-op families of the 8 single-qubit nets, indexed by net id."""
    ctx = net_context(1)
    return tuple(QuantumNet(ctx, i).point_ops for i in range(8))


def _match_family(family, tol: float = 1e-8) -> int | None:
    """Single-qubit net id whose point-op family equals `family`, if any."""
    for net_id, ref in enumerate(_single_qubit_families()):
        if all(np.max(np.abs(a - b)) < tol for a, b in zip(family, ref)):
            return net_id
    return None


def _bloch_parity(a00: np.ndarray) -> int:
    """Product of the signs of the three Bloch components of a single-qubit
    point operator (all components are +-1 for a valid family)."""
    parity = 1
    for sigma in (_PAULI["x"], _PAULI["y"], _PAULI["z"]):
        comp = np.trace(a00 @ sigma).real
        if abs(abs(comp) - 1.0) > 1e-8:
            raise NetConstructionError("factor is not a single-qubit point operator")
        parity *= 1 if comp > 0 else -1
    return parity


@dataclass(frozen=True)
class ProductReport:
    is_product: bool
    form: str  # "eq6", "eq7" or "none"
    factor_a_net: int | None = None  # single-qubit net of the first factor
    factor_b_conj_net: int | None = None  # net matching the conjugated second factor


def _qubit_point_indices(ctx: NetContext):
    """Per two-qubit point: (single-qubit index of qubit 1, of qubit 2)."""
    fld = ctx.field
    pairs = []
    for pt in ctx.space.points:
        qbits = fld.expand(pt.q)
        pbits = fld.expand(pt.p, dual=True)
        pairs.append(tuple(2 * qi + pi for qi, pi in zip(qbits, pbits)))
    return pairs


def detect_product_structure(net: QuantumNet) -> ProductReport:
    """Decide whether every point operator splits as a tensor product whose
    factors form single-qubit point-operator families.

    The 32 product-structured two-qubit nets fall into two translation
    orbits whose projectors are entrywise complex conjugates of each other.
    The `form` label separates the orbits by the Bloch-sign parity of the
    first factor's origin operator: parity +1 is reported as "eq6"
    (conjugation on the second subsystem), parity -1 as "eq7".
    """
    if net.n_qubits != 2:
        raise UnsupportedNetError("product-structure detection is defined for n=2")
    pairs = _qubit_point_indices(net.ctx)
    first = [None] * 4
    second = [None] * 4
    for a_op, (i1, i2) in zip(net.point_ops, pairs):
        split = factorize_tensor(a_op, (2, 2))
        if split is None:
            return ProductReport(False, "none")
        a, b = split
        ta = np.trace(a)
        if abs(ta) < 1e-8:
            return ProductReport(False, "none")
        a, b = a / ta, b * ta  # both factors now have unit trace
        for slot, mat in ((first, a), (second, b)):
            idx = i1 if slot is first else i2
            if slot[idx] is None:
                slot[idx] = mat
            elif np.max(np.abs(slot[idx] - mat)) > 1e-8:
                return ProductReport(False, "none")
    net_a = _match_family(first)
    net_b_conj = _match_family([m.conj() for m in second])
    if net_a is None or net_b_conj is None:
        return ProductReport(False, "none")
    form = "eq6" if _bloch_parity(first[0]) > 0 else "eq7"
    return ProductReport(True, form, net_a, net_b_conj)
