"""Arithmetic in GF(2^m) with a fixed polynomial basis and its trace-dual.

Elements are plain non-negative integers below 2^m whose binary digits are
the coefficients over the polynomial basis {1, w, ..., w^(m-1)}, where w is
a root of the defining irreducible polynomial.  Addition is XOR.

One irreducible polynomial is fixed per degree so that every derived object
(phase-space point indices, net identifiers) is reproducible:

    m=1 : x            -> 0b10     = 2   (prime field GF(2))
    m=2 : x^2 + x + 1  -> 0b111    = 7
    m=3 : x^3 + x + 1  -> 0b1011   = 11
    m=4 : x^4 + x + 1  -> 0b10011  = 19
    m=5 : x^5 + x^2 + 1-> 0b100101 = 37
"""

from __future__ import annotations

from .errors import FieldDomainError, UnsupportedDimensionError

_IRREDUCIBLE = {
    1: 0b10,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
}


class GF2m:
    """The finite field GF(2^m) for 1 <= m <= 5.

    Attributes
    ----------
    m : extension degree (qubits per phase-space axis).
    order : number of elements N = 2^m.
    poly : bit mask of the defining irreducible polynomial.
    basis : the polynomial basis (1, w, w^2, ...) as integers.
    dual_basis : the unique basis dual under the trace form, i.e.
        trace(basis[i] * dual_basis[j]) == (i == j).
    """

    def __init__(self, m: int) -> None:
        if m not in _IRREDUCIBLE:
            raise UnsupportedDimensionError(
                f"unsupported extension degree m={m}; must be in {sorted(_IRREDUCIBLE)}"
            )
        self.m = m
        self.order = 1 << m
        self.poly = _IRREDUCIBLE[m]
        self.basis = tuple(1 << i for i in range(m))
        self.dual_basis = self._compute_dual_basis()

    # -- core arithmetic ------------------------------------------------

    def _check(self, *values: int) -> None:
        for v in values:
            if not 0 <= v < self.order:
                raise FieldDomainError(f"{v} is not an element of GF(2^{self.m})")

    def add(self, a: int, b: int) -> int:
        """Field addition (characteristic 2, so XOR of coefficient masks)."""
        self._check(a, b)
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        """Carry-less polynomial product reduced modulo the defining polynomial."""
        self._check(a, b)
        p = 0
        top = 1 << self.m
        while b:
            if b & 1:
                p ^= a
            a <<= 1
            if a & top:
                a ^= self.poly
            b >>= 1
        return p

    def pow(self, a: int, e: int) -> int:
        """a**e by square and multiply; 0**0 == 1 by convention."""
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def inv(self, a: int) -> int:
        """Multiplicative inverse via a^(2^m - 2)."""
        if a == 0:
            raise FieldDomainError("zero has no multiplicative inverse")
        return self.pow(a, self.order - 2)

    def trace(self, a: int) -> int:
        """Field trace to GF(2): sum of a^(2^i) for i < m.  Always 0 or 1."""
        t = 0
        x = a
        for _ in range(self.m):
            t ^= x
            x = self.mul(x, x)
        assert t in (0, 1)
        return t

    # -- basis expansions ------------------------------------------------

    def _compute_dual_basis(self) -> tuple:
        # Exhaustive search is instant for order <= 32 and needs no linear
        # algebra over GF(2).
        dual = []
        for j in range(self.m):
            hits = [
                f
                for f in range(self.order)
                if all(
                    self.trace(self.mul(self.basis[i], f)) == (1 if i == j else 0)
                    for i in range(self.m)
                )
            ]
            if len(hits) != 1:
                raise FieldDomainError(
                    f"dual basis element {j} not unique for m={self.m}"
                )
            dual.append(hits[0])
        return tuple(dual)

    def expand(self, a: int, dual: bool = False) -> tuple:
        """Coefficients of `a` over the primal (or dual) basis, as 0/1 ints.

        The coefficient of basis vector b_i is trace(a * f_i) where {f_i} is
        the opposite basis; this round-trips exactly with :meth:`compose`.
        """
        against = self.basis if dual else self.dual_basis
        return tuple(self.trace(self.mul(a, f)) for f in against)

    def compose(self, coeffs, dual: bool = False) -> int:
        """Rebuild the element from its coefficient vector."""
        which = self.dual_basis if dual else self.basis
        a = 0
        for c, b in zip(coeffs, which):
            if c:
                a ^= b
        return a

    def elements(self) -> range:
        return range(self.order)

    def __repr__(self) -> str:  # pragma: no cover
        return f"GF2m(m={self.m}, poly={bin(self.poly)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, GF2m) and other.m == self.m

    def __hash__(self) -> int:
        return hash(("GF2m", self.m))
