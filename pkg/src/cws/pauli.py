"""Exact n-qubit Pauli arithmetic in binary symplectic form.

An operator is stored as two bit masks plus a phase exponent:

    P = i**phase_exp * Z^z_mask * X^x_mask

Bit j of a mask refers to qubit j+1, so qubit 1 is bit 0 and corresponds to
the leftmost character of a Pauli string such as ``"XYIZ"``.  A position with
both bits set is the letter Y (up to the tracked phase, since Y = i^3 Z X).
All products and Clifford conjugations are phase exact.  Masks are machine
words; n is capped at 16, comfortably above the n <= 9 searches this package
runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

import numpy as np

MAX_QUBITS = 16

_SIGN_PREFIXES = {"": 0, "+": 0, "i": 1, "+i": 1, "-": 2, "-i": 3}
_SIGN_STRINGS = {0: "", 1: "+i", 2: "-", 3: "-i"}
_LETTERS = {(0, 0): "I", (1, 0): "X", (1, 1): "Y", (0, 1): "Z"}


class PauliError(ValueError):
    """Malformed Pauli string or mismatched operator lengths."""


@dataclass(frozen=True)
class PauliOperator:
    """An n-qubit Pauli ``i**phase_exp * Z^z_mask * X^x_mask``."""

    n: int
    x_mask: int
    z_mask: int
    phase_exp: int = 0

    def __post_init__(self):
        if not 1 <= self.n <= MAX_QUBITS:
            raise PauliError(f"qubit count {self.n} outside 1..{MAX_QUBITS}")
        full = (1 << self.n) - 1
        if self.x_mask & ~full or self.z_mask & ~full:
            raise PauliError("mask bits set above position n-1")
        if not 0 <= self.phase_exp < 4:
            object.__setattr__(self, "phase_exp", self.phase_exp % 4)

    def is_identity(self) -> bool:
        return self.x_mask == 0 and self.z_mask == 0

    def letter(self, qubit: int) -> str:
        """Single-qubit letter at 0-based position ``qubit``."""
        return _LETTERS[(self.x_mask >> qubit) & 1, (self.z_mask >> qubit) & 1]

    def key(self) -> tuple[int, int]:
        """Mask pair identifying the operator modulo phase."""
        return (self.x_mask, self.z_mask)

    def __mul__(self, other: "PauliOperator") -> "PauliOperator":
        return multiply(self, other)

    def __str__(self) -> str:
        return format_pauli(self)


def identity(n: int) -> PauliOperator:
    return PauliOperator(n, 0, 0, 0)


def single(n: int, qubit: int, letter: str) -> PauliOperator:
    """The weight-1 operator with ``letter`` on 0-based position ``qubit``."""
    if not 0 <= qubit < n:
        raise PauliError(f"qubit {qubit} out of range for n={n}")
    bit = 1 << qubit
    if letter == "X":
        return PauliOperator(n, bit, 0, 0)
    if letter == "Z":
        return PauliOperator(n, 0, bit, 0)
    if letter == "Y":
        return PauliOperator(n, bit, bit, 3)
    if letter == "I":
        return identity(n)
    raise PauliError(f"unknown Pauli letter {letter!r}")


def multiply(a: PauliOperator, b: PauliOperator) -> PauliOperator:
    """Exact product a*b with phase tracking.

    Moving X^{u_a} across Z^{v_b} costs a sign per overlapping position:
    i^p Z^{v_a} X^{u_a} * i^q Z^{v_b} X^{u_b}
      = i^{p+q} (-1)^{|u_a & v_b|} Z^{v_a^v_b} X^{u_a^u_b}.
    """
    if a.n != b.n:
        raise PauliError(f"length mismatch: {a.n} vs {b.n}")
    phase = (a.phase_exp + b.phase_exp + 2 * (a.x_mask & b.z_mask).bit_count()) % 4
    return PauliOperator(a.n, a.x_mask ^ b.x_mask, a.z_mask ^ b.z_mask, phase)


def commutes(a: PauliOperator, b: PauliOperator) -> bool:
    """True iff the symplectic inner product x_a.z_b + z_a.x_b vanishes mod 2."""
    if a.n != b.n:
        raise PauliError(f"length mismatch: {a.n} vs {b.n}")
    return ((a.x_mask & b.z_mask).bit_count() + (a.z_mask & b.x_mask).bit_count()) % 2 == 0


def weight(p: PauliOperator) -> int:
    """Number of positions carrying a non-identity letter."""
    return (p.x_mask | p.z_mask).bit_count()


def parse_pauli(s: str) -> PauliOperator:
    """Parse an optional sign prefix (+, -, +i, -i) followed by I/X/Y/Z letters."""
    if not s:
        raise PauliError("empty Pauli string")
    body = s
    sign_exp = 0
    for prefix in ("-i", "+i", "i", "-", "+"):
        if s.startswith(prefix):
            sign_exp = _SIGN_PREFIXES[prefix]
            body = s[len(prefix):]
            break
    if not body:
        raise PauliError(f"no Pauli letters in {s!r}")
    n = len(body)
    if n > MAX_QUBITS:
        raise PauliError(f"Pauli string longer than {MAX_QUBITS} qubits")
    x_mask = z_mask = n_y = 0
    for pos, ch in enumerate(body):
        if ch == "I":
            continue
        elif ch == "X":
            x_mask |= 1 << pos
        elif ch == "Z":
            z_mask |= 1 << pos
        elif ch == "Y":
            x_mask |= 1 << pos
            z_mask |= 1 << pos
            n_y += 1
        else:
            raise PauliError(f"invalid character {ch!r} in Pauli string {s!r}")
    return PauliOperator(n, x_mask, z_mask, (sign_exp + 3 * n_y) % 4)


def format_pauli(p: PauliOperator) -> str:
    """Inverse of :func:`parse_pauli`; emits "", "+i", "-" or "-i" prefixes."""
    n_y = (p.x_mask & p.z_mask).bit_count()
    sign_exp = (p.phase_exp + n_y) % 4
    letters = "".join(p.letter(q) for q in range(p.n))
    return _SIGN_STRINGS[sign_exp] + letters


class AxisLabel(Enum):
    """Single-qubit relabelings of the Pauli axes kept by the search.

    The three values are coset representatives of the X<->Y swap inside the
    permutation group of {X, Y, Z}: identity, X<->Z and Y<->Z.  Error sets
    symmetric under X<->Y are exhausted by these three choices per qubit.
    """

    ID = "ID"
    XZ = "XZ"
    YZ = "YZ"


_LABEL_ORDER = (AxisLabel.ID, AxisLabel.XZ, AxisLabel.YZ)


@dataclass(frozen=True)
class AxisPerm:
    """A per-qubit assignment of axis relabelings."""

    per_qubit: tuple[AxisLabel, ...]

    def __post_init__(self):
        if not self.per_qubit:
            raise PauliError("empty axis permutation")
        if any(not isinstance(l, AxisLabel) for l in self.per_qubit):
            raise PauliError("per_qubit entries must be AxisLabel")

    @property
    def n(self) -> int:
        return len(self.per_qubit)

    @cached_property
    def masks(self) -> tuple[int, int]:
        """(xz_mask, yz_mask): bit sets of qubits with each non-trivial label."""
        xz = yz = 0
        for j, label in enumerate(self.per_qubit):
            if label is AxisLabel.XZ:
                xz |= 1 << j
            elif label is AxisLabel.YZ:
                yz |= 1 << j
        return xz, yz

    @staticmethod
    def identity(n: int) -> "AxisPerm":
        return AxisPerm((AxisLabel.ID,) * n)

    @staticmethod
    def from_labels(labels) -> "AxisPerm":
        return AxisPerm(tuple(AxisLabel(l) if not isinstance(l, AxisLabel) else l
                              for l in labels))

    @staticmethod
    def from_index(n: int, index: int) -> "AxisPerm":
        """Decode a base-3 index; qubit 1 is the most significant digit."""
        if not 0 <= index < 3 ** n:
            raise PauliError(f"perm index {index} out of range for n={n}")
        labels = []
        for j in range(n - 1, -1, -1):
            labels.append(_LABEL_ORDER[(index // 3 ** j) % 3])
        return AxisPerm(tuple(labels))

    def to_index(self) -> int:
        index = 0
        for label in self.per_qubit:
            index = 3 * index + _LABEL_ORDER.index(label)
        return index

    def labels(self) -> list[str]:
        return [l.value for l in self.per_qubit]


def apply_axis_perm(p: PauliOperator, perm: AxisPerm) -> PauliOperator:
    """Relabel each single-qubit letter per the qubit's permutation.

    The output phase is normalized to zero: error sets are compared modulo
    phase, and the relabeling is only defined up to sign anyway.
    Bit rules per qubit (letters as (x, z) pairs):
    XZ swap exchanges the bits, YZ swap sends x to x^z.
    """
    if p.n != perm.n:
        raise PauliError(f"length mismatch: {p.n} vs {perm.n}")
    xz, yz = perm.masks
    keep = ~(xz | yz)
    x, z = p.x_mask, p.z_mask
    new_x = (x & keep) | (z & xz) | ((x ^ z) & yz)
    new_z = (z & keep) | (x & xz) | (z & yz)
    return PauliOperator(p.n, new_x & ((1 << p.n) - 1), new_z & ((1 << p.n) - 1), 0)


# Fixed single-qubit unitaries realizing the axis relabelings: Hadamard for
# X<->Z and V = exp(-i pi X / 4) for Y<->Z.  Conjugation by V sends
# X -> X, Y -> Z, Z -> -Y; any other Clifford with the same letter action
# would give an equivalent code, the fixed table keeps output deterministic.
_SQRT2 = np.sqrt(2.0)
CLIFFORD_UNITARIES = {
    AxisLabel.ID: np.eye(2, dtype=complex),
    AxisLabel.XZ: np.array([[1, 1], [1, -1]], dtype=complex) / _SQRT2,
    AxisLabel.YZ: np.array([[1, -1j], [-1j, 1]], dtype=complex) / _SQRT2,
}


@dataclass(frozen=True)
class LocalCliffordUnitary:
    """Tensor product of table unitaries realizing an axis permutation."""

    perm: AxisPerm

    @property
    def n(self) -> int:
        return self.perm.n

    def factor(self, qubit: int) -> np.ndarray:
        return CLIFFORD_UNITARIES[self.perm.per_qubit[qubit]]


# Signed images of the Z_j and X_j generators under conjugation by each table
# unitary (U P U^dag).  Entries are (x_bit, z_bit, phase_exp) templates; -Y is
# phase_exp 1 since -Y = i^2 * i^3 ZX = i ZX.
_CONJ_Z = {
    AxisLabel.ID: (0, 1, 0),   # Z -> Z
    AxisLabel.XZ: (1, 0, 0),   # Z -> X
    AxisLabel.YZ: (1, 1, 1),   # Z -> -Y
}
_CONJ_X = {
    AxisLabel.ID: (1, 0, 0),   # X -> X
    AxisLabel.XZ: (0, 1, 0),   # X -> Z
    AxisLabel.YZ: (1, 0, 0),   # X -> X
}


def conjugate_by_clifford(p: PauliOperator, perm: AxisPerm) -> PauliOperator:
    """Exact U p U^dag for U the tensor of table unitaries realizing ``perm``.

    Expands p = i^e * prod Z_j^{v_j} * prod X_j^{u_j} and conjugates factor by
    factor, so signs are tracked exactly through the Pauli product.
    """
    if p.n != perm.n:
        raise PauliError(f"length mismatch: {p.n} vs {perm.n}")
    acc = PauliOperator(p.n, 0, 0, p.phase_exp)
    for table, mask in ((_CONJ_Z, p.z_mask), (_CONJ_X, p.x_mask)):
        m = mask
        while m:
            j = (m & -m).bit_length() - 1
            m &= m - 1
            xb, zb, ph = table[perm.per_qubit[j]]
            acc = multiply(acc, PauliOperator(p.n, xb << j, zb << j, ph))
    return acc
