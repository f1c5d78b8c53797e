"""Phase-space translation operators and the striation eigensystems.

The operator attached to the shift (q, p) is the Pauli word
X^{q_1} Z^{p_1} (x) ... (x) X^{q_n} Z^{p_n}, with q expanded in the
polynomial basis and p in its trace-dual.  That basis pairing makes the N
operators of each striation pairwise commute, so each striation carries a
joint eigenbasis; the N+1 bases are mutually unbiased.
"""

from __future__ import annotations

import numpy as np

from . import matkernel
from .errors import NonCommutingError
from .phasespace import PhaseSpace, Point, Striation

_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)
_SINGLE = {
    (0, 0): np.eye(2, dtype=complex),
    (1, 0): _X,
    (0, 1): _Z,
    (1, 1): _X @ _Z,
}


def translation_matrix(fld, pt: Point) -> np.ndarray:
    """Unitary matrix of the translation operator at shift `pt`."""
    qbits = fld.expand(pt.q)
    pbits = fld.expand(pt.p, dual=True)
    mat = np.array([[1.0 + 0.0j]])
    for qi, pi in zip(qbits, pbits):
        mat = np.kron(mat, _SINGLE[(qi, pi)])
    return mat


class TranslationTable:
    """All N^2 translation operators for one field, indexed by point index."""

    def __init__(self, space: PhaseSpace) -> None:
        self.space = space
        n = space.order
        self.matrices = tuple(
            translation_matrix(space.field, pt) for pt in space.points
        )
        assert len(self.matrices) == n * n

    def __getitem__(self, pt: Point) -> np.ndarray:
        return self.matrices[self.space.point_index(pt)]


class StriationEigensystem:
    """The commuting translation group of one striation and its eigenbasis.

    `states` holds the N rank-one projectors in the canonical order produced
    by joint eigen-decomposition of the generator operators T_{s(a,b)} with
    s running over the field's polynomial basis elements.
    """

    def __init__(self, space: PhaseSpace, striation: Striation,
                 table: TranslationTable) -> None:
        fld = space.field
        self.striation_id = striation.striation_id
        a, b = striation.a, striation.b
        self.ops = tuple(
            table[Point(fld.mul(s, a), fld.mul(s, b))] for s in fld.elements()
        )
        for i, u in enumerate(self.ops):
            for v in self.ops[i + 1 :]:
                if not matkernel.commutes(u, v):
                    raise NonCommutingError(
                        f"striation {self.striation_id} translations do not "
                        "commute; field basis duality is misconfigured"
                    )
        generators = [
            table[Point(fld.mul(s, a), fld.mul(s, b))] for s in fld.basis
        ]
        self.states = tuple(matkernel.joint_eigenprojectors(generators))


def build_eigensystems(space: PhaseSpace, table: TranslationTable) -> tuple:
    """One eigensystem per striation, in canonical striation order."""
    return tuple(
        StriationEigensystem(space, st, table) for st in space.striations
    )
