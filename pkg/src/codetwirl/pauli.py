"""Exact n-qubit Pauli algebra in symplectic (x-bits, z-bits, phase) form.

Bit vectors are stored as Python integers (bit ``q`` = qubit ``q``), so all
group arithmetic is exact and works for any qubit count.  A Pauli string is

    P = i^k * prod_q X_q^{x_q} Z_q^{z_q}

with per-site operators in X-then-Z order and ``k`` in {0,1,2,3}.  With this
convention the site (x=1, z=1) carries XZ = -iY, and the canonical Hermitian
Y string is ``i * XZ``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np

_PHASES = (1, 1j, -1, -1j)

_SINGLE = {
    "I": (0, 0, 0),
    "X": (1, 0, 0),
    "Z": (0, 1, 0),
    "Y": (1, 1, 1),  # Y = i * XZ
}

_MATS = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


@dataclass(frozen=True)
class PauliString:
    """Immutable Pauli operator on ``n`` qubits with exact phase tracking."""

    n: int
    x: int = 0
    z: int = 0
    phase_exp: int = 0  # power of i, modulo 4

    def __post_init__(self):
        mask = (1 << self.n) - 1
        if self.x & ~mask or self.z & ~mask:
            raise ValueError("bit vector exceeds qubit count")
        object.__setattr__(self, "phase_exp", self.phase_exp % 4)

    # -- constructors -----------------------------------------------------

    @staticmethod
    def identity(n: int) -> "PauliString":
        return PauliString(n)

    @staticmethod
    def from_label(label: str, phase_exp: int = 0) -> "PauliString":
        """Build from a left-to-right label like ``"XIZZY"`` (qubit 0 first)."""
        x = z = 0
        k = phase_exp
        for q, ch in enumerate(label.upper()):
            try:
                xq, zq, kq = _SINGLE[ch]
            except KeyError:
                raise ValueError(f"invalid Pauli letter {ch!r}") from None
            x |= xq << q
            z |= zq << q
            k += kq
        return PauliString(len(label), x, z, k)

    @staticmethod
    def single(n: int, q: int, kind: str) -> "PauliString":
        xq, zq, kq = _SINGLE[kind.upper()]
        return PauliString(n, xq << q, zq << q, kq)

    # -- basic queries -----------------------------------------------------

    @property
    def phase(self) -> complex:
        return _PHASES[self.phase_exp]

    def weight(self) -> int:
        return (self.x | self.z).bit_count()

    def support(self) -> list[int]:
        s = self.x | self.z
        return [q for q in range(self.n) if (s >> q) & 1]

    def letter(self, q: int) -> str:
        xq = (self.x >> q) & 1
        zq = (self.z >> q) & 1
        return "IXZY"[xq + 2 * zq] if not (xq and zq) else "Y"

    def label(self) -> str:
        return "".join(self.letter(q) for q in range(self.n))

    def is_x_type(self) -> bool:
        return self.z == 0

    def is_z_type(self) -> bool:
        return self.x == 0

    def is_hermitian(self) -> bool:
        # P^dag = (-1)^{k + |x&z|} P, so Hermitian iff k = |x&z| (mod 2)
        return (self.phase_exp + (self.x & self.z).bit_count()) % 2 == 0

    # -- group operations ---------------------------------------------------

    def __mul__(self, other: "PauliString") -> "PauliString":
        if self.n != other.n:
            raise ValueError("qubit counts differ")
        # moving other's X past self's Z gives (-1)^{|z1 & x2|}
        k = self.phase_exp + other.phase_exp + 2 * ((self.z & other.x).bit_count() % 2)
        return PauliString(self.n, self.x ^ other.x, self.z ^ other.z, k)

    def commutes(self, other: "PauliString") -> bool:
        if self.n != other.n:
            raise ValueError("qubit counts differ")
        sym = (self.x & other.z).bit_count() + (self.z & other.x).bit_count()
        return sym % 2 == 0

    def adjoint(self) -> "PauliString":
        k = (-self.phase_exp) % 4
        # (X^x Z^z)^dag = Z^z X^x = (-1)^{x.z} X^x Z^z per site
        k += 2 * ((self.x & self.z).bit_count() % 2)
        return PauliString(self.n, self.x, self.z, k)

    def scaled(self, phase_exp: int) -> "PauliString":
        return PauliString(self.n, self.x, self.z, self.phase_exp + phase_exp)

    def hermitian_form(self) -> "PauliString":
        """The +1-phase Hermitian representative i^{|x&z|} X^x Z^z of this string."""
        return PauliString(self.n, self.x, self.z, (self.x & self.z).bit_count())

    def same_operator(self, other: "PauliString") -> bool:
        return (self.n, self.x, self.z, self.phase_exp) == (
            other.n,
            other.x,
            other.z,
            other.phase_exp,
        )

    def same_up_to_phase(self, other: "PauliString") -> bool:
        return (self.n, self.x, self.z) == (other.n, other.x, other.z)

    # -- dense matrix / state action ----------------------------------------

    def to_matrix(self) -> np.ndarray:
        """Dense 2^n x 2^n matrix (qubit 0 = fastest-varying index)."""
        mats = []
        for q in range(self.n):
            xq = (self.x >> q) & 1
            zq = (self.z >> q) & 1
            m = _MATS["I"]
            if xq and zq:
                m = _MATS["X"] @ _MATS["Z"]
            elif xq:
                m = _MATS["X"]
            elif zq:
                m = _MATS["Z"]
            mats.append(m)
        full = reduce(np.kron, mats[::-1]) if mats else np.array([[1.0]])
        return self.phase * full

    def apply(self, vec: np.ndarray) -> np.ndarray:
        """Apply to a dense state vector of length 2^n without materializing the matrix.

        Basis convention: amplitude index b has qubit q in state (b >> q) & 1.
        """
        if vec.shape[0] != 1 << self.n:
            raise ValueError("state dimension mismatch")
        idx = np.arange(1 << self.n)
        src = idx ^ self.x  # X flips: amplitude at idx comes from idx ^ x
        # Z part acts on the source basis state; each site with x&z is XZ (Z first).
        signs = 1 - 2 * (np.bitwise_count(src & self.z) % 2).astype(np.int64)
        out = self.phase * signs * vec[src]
        return out.astype(complex)


def weight_parity_product(a: PauliString, b: PauliString) -> int:
    """Parity of |ab| (of |ab/i| when a,b anticommute), with the identity check.

    Returns ``weight(ab) % 2`` and asserts the weight-composition rule: for
    commuting Hermitian Paulis |ab| = |a|+|b| (mod 2); for anticommuting ones
    |ab/i| = |a|+|b|+1 (mod 2).
    """
    if a.n != b.n:
        raise ValueError("qubit counts differ")
    prod = a * b
    parity = prod.weight() % 2
    if a.commutes(b):
        assert parity == (a.weight() + b.weight()) % 2
    else:
        assert parity == (a.weight() + b.weight() + 1) % 2
    return parity
