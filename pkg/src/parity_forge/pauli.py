"""Binary symplectic representation of Pauli strings.

An n-qubit Pauli string (up to scalar prefactors) is encoded as a pair of
n-bit masks ``(x_bits, z_bits)``: bit ``j-1`` of ``x_bits`` is set when qubit
``j`` carries an X component and bit ``j-1`` of ``z_bits`` when it carries a
Z component (both set means Y). Commutation of two strings is the symplectic
form of their vectors, and the commutator itself maps to plain mod-2 vector
addition gated by that form. The all-zero vector encodes "the pair commuted";
no actual Pauli string maps to it.

Scalar phases are deliberately dropped here; the statevector simulator is the
only phase-aware component of the toolkit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidInputError

MAX_QUBITS = 32

_LETTERS = "IXYZ"


@dataclass(frozen=True)
class PauliVector:
    """A point of the 2n-dimensional binary symplectic space.

    Qubit labels are 1-based externally; internally qubit ``j`` owns bit
    ``j - 1`` of each mask.
    """

    n: int
    x_bits: int
    z_bits: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_QUBITS:
            raise InvalidInputError(f"qubit count must be in 1..{MAX_QUBITS}, got {self.n}")
        mask = (1 << self.n) - 1
        if self.x_bits & ~mask or self.z_bits & ~mask:
            raise InvalidInputError("bit mask exceeds qubit count")
        if self.x_bits < 0 or self.z_bits < 0:
            raise InvalidInputError("bit masks must be non-negative")

    @staticmethod
    def zero(n: int) -> "PauliVector":
        return PauliVector(n, 0, 0)

    @staticmethod
    def x(n: int, j: int) -> "PauliVector":
        _check_qubit(n, j)
        return PauliVector(n, 1 << (j - 1), 0)

    @staticmethod
    def z(n: int, j: int) -> "PauliVector":
        _check_qubit(n, j)
        return PauliVector(n, 0, 1 << (j - 1))

    @staticmethod
    def z_set(n: int, qubits: Iterable[int]) -> "PauliVector":
        """The Z-only vector supported on ``qubits`` (a parity generator)."""
        bits = 0
        for j in qubits:
            _check_qubit(n, j)
            bits |= 1 << (j - 1)
        return PauliVector(n, 0, bits)

    @staticmethod
    def x_set(n: int, qubits: Iterable[int]) -> "PauliVector":
        bits = 0
        for j in qubits:
            _check_qubit(n, j)
            bits |= 1 << (j - 1)
        return PauliVector(n, bits, 0)

    @staticmethod
    def from_packed(n: int, code: int) -> "PauliVector":
        """Inverse of :attr:`packed`."""
        mask = (1 << n) - 1
        return PauliVector(n, code & mask, code >> n)

    @property
    def packed(self) -> int:
        """The vector as a single 2n-bit integer, ``x | z << n``."""
        return self.x_bits | self.z_bits << self.n

    @property
    def is_zero(self) -> bool:
        return self.x_bits == 0 and self.z_bits == 0

    def x_support(self) -> frozenset[int]:
        return _bits_to_set(self.x_bits)

    def z_support(self) -> frozenset[int]:
        return _bits_to_set(self.z_bits)

    def support(self) -> frozenset[int]:
        return _bits_to_set(self.x_bits | self.z_bits)

    def weight(self) -> int:
        return (self.x_bits | self.z_bits).bit_count()

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "x": sorted(self.x_support()),
            "z": sorted(self.z_support()),
        }

    @staticmethod
    def from_json(data: dict) -> "PauliVector":
        try:
            n = int(data["n"])
            xs = [int(j) for j in data["x"]]
            zs = [int(j) for j in data["z"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInputError(f"malformed Pauli vector JSON: {exc}") from exc
        vx = PauliVector.x_set(n, xs)
        vz = PauliVector.z_set(n, zs)
        return PauliVector(n, vx.x_bits, vz.z_bits)

    def __repr__(self):
        return f"PauliVector({to_string(self).letters!r})"


@dataclass(frozen=True)
class PauliString:
    """A Pauli word as letters over {I, X, Y, Z} with a power-of-i prefactor.

    The leftmost letter acts on qubit 1.
    """

    letters: str
    phase_quarter: int = 0

    def __post_init__(self):
        if not self.letters:
            raise InvalidInputError("Pauli string must be non-empty")
        bad = set(self.letters) - set(_LETTERS)
        if bad:
            raise InvalidInputError(f"invalid Pauli letters: {sorted(bad)}")
        object.__setattr__(self, "phase_quarter", self.phase_quarter % 4)

    @property
    def n(self) -> int:
        return len(self.letters)


def _check_qubit(n: int, j: int) -> None:
    if not 1 <= j <= n:
        raise InvalidInputError(f"qubit label {j} out of range 1..{n}")


def _bits_to_set(bits: int) -> frozenset[int]:
    out = []
    j = 1
    while bits:
        if bits & 1:
            out.append(j)
        bits >>= 1
        j += 1
    return frozenset(out)


def from_string(s: PauliString | str) -> PauliVector:
    """Map a Pauli string to its symplectic vector; the phase is discarded."""
    letters = s.letters if isinstance(s, PauliString) else s
    if not letters:
        raise InvalidInputError("Pauli string must be non-empty")
    if len(letters) > MAX_QUBITS:
        raise InvalidInputError(f"Pauli string longer than {MAX_QUBITS} qubits")
    x_bits = z_bits = 0
    for pos, letter in enumerate(letters):
        if letter in "XY":
            x_bits |= 1 << pos
        if letter in "ZY":
            z_bits |= 1 << pos
        if letter not in _LETTERS:
            raise InvalidInputError(f"invalid Pauli letter {letter!r}")
    return PauliVector(len(letters), x_bits, z_bits)


def to_string(v: PauliVector) -> PauliString:
    """Inverse of :func:`from_string`; the phase comes back as 0."""
    lookup = "IXZY"  # indexed by x + 2z
    chars = []
    for pos in range(v.n):
        x = v.x_bits >> pos & 1
        z = v.z_bits >> pos & 1
        chars.append(lookup[x + 2 * z])
    return PauliString("".join(chars))


def symplectic_product(a: PauliVector, b: PauliVector) -> int:
    """The mod-2 symplectic form; 1 exactly when the strings anticommute."""
    if a.n != b.n:
        raise InvalidInputError(f"qubit counts differ: {a.n} vs {b.n}")
    return ((a.x_bits & b.z_bits).bit_count() + (a.z_bits & b.x_bits).bit_count()) & 1


def adjoint(a: PauliVector, b: PauliVector) -> PauliVector:
    """Image of the commutator: ``a + b`` if the pair anticommutes, else zero."""
    if symplectic_product(a, b) == 0:
        return PauliVector.zero(a.n)
    return PauliVector(a.n, a.x_bits ^ b.x_bits, a.z_bits ^ b.z_bits)


def evaluate_sequence(seq: Sequence[PauliVector]) -> PauliVector:
    """Right-fold a nested-commutator sequence.

    ``evaluate_sequence([u1, ..., ur])`` is ``ad_{u1} ... ad_{u_{r-1}}(ur)``:
    the last element seeds the fold and earlier elements wrap around it. Once
    any step commutes the result is the zero vector and stays there.
    """
    if not seq:
        raise InvalidInputError("adjoint sequence must be non-empty")
    n = seq[0].n
    for v in seq:
        if v.n != n:
            raise InvalidInputError("adjoint sequence mixes qubit counts")
    acc = seq[-1]
    for v in reversed(seq[:-1]):
        acc = adjoint(v, acc)
        if acc.is_zero:
            return acc
    return acc


def suffix_evaluations(seq: Sequence[PauliVector]) -> list[PauliVector]:
    """Evaluations of every suffix, shortest first (the fold intermediates)."""
    if not seq:
        raise InvalidInputError("adjoint sequence must be non-empty")
    acc = seq[-1]
    out = [acc]
    for v in reversed(seq[:-1]):
        acc = adjoint(v, acc)
        out.append(acc)
    return out


def weight(v: PauliVector) -> int:
    return v.weight()


def x_support(v: PauliVector) -> frozenset[int]:
    return v.x_support()


def z_support(v: PauliVector) -> frozenset[int]:
    return v.z_support()
