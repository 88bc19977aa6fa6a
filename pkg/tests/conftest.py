"""Shared test helpers: a dense-matrix Pauli oracle independent of the
symplectic arithmetic under test."""

from __future__ import annotations

import numpy as np
import pytest

from parity_forge.pauli import PauliVector, to_string

I2 = np.eye(2, dtype=complex)
PAULI_1Q = {
    "I": I2,
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def dense_pauli(letters: str) -> np.ndarray:
    """Kronecker product of the single-qubit matrices, qubit 1 leftmost."""
    m = np.eye(1, dtype=complex)
    for letter in letters:
        m = np.kron(m, PAULI_1Q[letter])
    return m


def dense_of_vector(v: PauliVector) -> np.ndarray:
    return dense_pauli(to_string(v).letters)


def dense_commute(a: PauliVector, b: PauliVector) -> bool:
    ma, mb = dense_of_vector(a), dense_of_vector(b)
    return np.allclose(ma @ mb, mb @ ma)


def oracle_adjoint(a: PauliVector, b: PauliVector) -> PauliVector:
    """Commutator computed on dense matrices, mapped back to a vector.

    Returns the zero vector for a commuting pair; otherwise identifies the
    unique Pauli string proportional to [A, B] and asserts the
    proportionality constant is a power of i times 2.
    """
    ma, mb = dense_of_vector(a), dense_of_vector(b)
    comm = ma @ mb - mb @ ma
    if np.allclose(comm, 0):
        return PauliVector.zero(a.n)
    expected = PauliVector(a.n, a.x_bits ^ b.x_bits, a.z_bits ^ b.z_bits)
    mc = dense_of_vector(expected)
    # [A, B] = 2 A B for anticommuting strings, and A B is i^s times a string
    ratio = comm @ mc.conj().T / (1 << a.n)
    scalar = np.trace(ratio) / 2
    assert np.allclose(comm, 2 * scalar * mc), "commutator is not a Pauli string"
    assert np.isclose(abs(scalar), 1.0), f"unexpected commutator scale {scalar}"
    return expected


def oracle_fold(seq) -> PauliVector:
    """Right-fold of dense commutators (halved each step), as vectors."""
    acc = seq[-1]
    for v in reversed(seq[:-1]):
        acc = oracle_adjoint(v, acc)
        if acc.is_zero:
            return acc
    return acc


def all_vectors(n: int):
    for code in range(1, 1 << (2 * n)):
        yield PauliVector.from_packed(n, code)


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)
