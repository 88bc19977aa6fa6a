"""Dense statevector oracle.

Deliberately simple and phase-exact: this module is the referee for every
circuit identity in the toolkit, so clarity wins over speed. Wire 1 is the
most significant bit of the amplitude index, matching ket notation
``|q1 q2 ... qm>``.

Gate semantics (see :mod:`parity_forge.circuits` for the gate alphabet):

* ``RX(q, a) = exp(-i a X_q)``, ``RZ(q, a) = exp(-i a Z_q)``, ``H`` standard;
* ``PARITY_PHASE(S, t)`` multiplies each basis amplitude by
  ``exp(-i t (-1)^p)`` with p the parity of the bits in S, i.e. it equals
  ``exp(-i t Z_S)``;
* :func:`exact_pauli_rotation` is ``exp(+i t P)`` written as
  ``cos(t) + i sin(t) P`` --- note the sign is opposite to the gate
  convention, so ``PARITY_PHASE(S, t)`` equals the exact rotation of the
  Z-string on S at angle ``-t``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .circuits import CNOT, RX, RZ, Circuit, H, ParityPhase
from .errors import InternalError, InvalidInputError, ResourceLimitError
from .pauli import PauliString, from_string

MAX_SIM_QUBITS = 12

_NORM_TOL = 1e-10


@dataclass
class StateVector:
    """A working buffer of 2^m amplitudes, owned by one context at a time."""

    m: int
    amplitudes: np.ndarray

    def copy(self) -> "StateVector":
        return StateVector(self.m, self.amplitudes.copy())

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


def _check_qubits(m: int) -> None:
    if not 1 <= m <= MAX_SIM_QUBITS:
        raise ResourceLimitError(f"simulator capped at {MAX_SIM_QUBITS} qubits, got {m}")


def zero_state(m: int) -> StateVector:
    """The computational basis state |0...0>."""
    _check_qubits(m)
    amp = np.zeros(1 << m, dtype=np.complex128)
    amp[0] = 1.0
    return StateVector(m, amp)


def basis_state(m: int, bits: str) -> StateVector:
    """|bits> with the leftmost character on wire 1."""
    _check_qubits(m)
    if len(bits) != m or set(bits) - {"0", "1"}:
        raise InvalidInputError(f"need {m} characters over 0/1, got {bits!r}")
    amp = np.zeros(1 << m, dtype=np.complex128)
    amp[int(bits, 2)] = 1.0
    return StateVector(m, amp)


def plus_state(m: int) -> StateVector:
    _check_qubits(m)
    amp = np.full(1 << m, 1 / np.sqrt(1 << m), dtype=np.complex128)
    return StateVector(m, amp)


def random_state(m: int, rng: np.random.Generator) -> StateVector:
    """Haar-like random state from normalized complex Gaussians."""
    _check_qubits(m)
    amp = rng.standard_normal(1 << m) + 1j * rng.standard_normal(1 << m)
    amp /= np.linalg.norm(amp)
    return StateVector(m, amp.astype(np.complex128))


def tensor(a: StateVector, b: StateVector) -> StateVector:
    """``a`` on the leading wires, ``b`` appended after them."""
    _check_qubits(a.m + b.m)
    return StateVector(a.m + b.m, np.kron(a.amplitudes, b.amplitudes))


def _bit(m: int, qubit: int) -> int:
    return 1 << (m - qubit)


def _parity(indices: np.ndarray, mask: int) -> np.ndarray:
    par = np.zeros(len(indices), dtype=np.int64)
    pos = 0
    while mask >> pos:
        if mask >> pos & 1:
            par ^= indices >> pos & 1
        pos += 1
    return par


def _apply_1q(amp: np.ndarray, m: int, qubit: int, mat: np.ndarray) -> np.ndarray:
    pre = 1 << (qubit - 1)
    post = 1 << (m - qubit)
    view = amp.reshape(pre, 2, post)
    out = np.empty_like(view)
    out[:, 0, :] = mat[0, 0] * view[:, 0, :] + mat[0, 1] * view[:, 1, :]
    out[:, 1, :] = mat[1, 0] * view[:, 0, :] + mat[1, 1] * view[:, 1, :]
    return out.reshape(-1)


_H_MATRIX = np.array([[1, 1], [1, -1]], dtype=np.complex128) / np.sqrt(2)


def _rx_matrix(theta: float) -> np.ndarray:
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, -1j * s], [-1j * s, c]], dtype=np.complex128)


def _rz_matrix(theta: float) -> np.ndarray:
    return np.array(
        [[np.exp(-1j * theta), 0], [0, np.exp(1j * theta)]], dtype=np.complex128
    )


def apply_circuit(state: StateVector, circuit: Circuit) -> StateVector:
    """Apply the gates in order; returns a fresh state."""
    if circuit.num_qubits != state.m:
        raise InvalidInputError(
            f"circuit has {circuit.num_qubits} wires, state has {state.m}"
        )
    _check_qubits(state.m)
    m = state.m
    amp = state.amplitudes.copy()
    idx = np.arange(1 << m)
    for gate in circuit.gates:
        if isinstance(gate, CNOT):
            tbit = _bit(m, gate.target)
            sel = (idx & _bit(m, gate.control)).astype(bool)
            new = amp.copy()
            new[idx[sel]] = amp[idx[sel] ^ tbit]
            amp = new
        elif isinstance(gate, RX):
            amp = _apply_1q(amp, m, gate.qubit, _rx_matrix(gate.theta))
        elif isinstance(gate, RZ):
            amp = _apply_1q(amp, m, gate.qubit, _rz_matrix(gate.theta))
        elif isinstance(gate, H):
            amp = _apply_1q(amp, m, gate.qubit, _H_MATRIX)
        elif isinstance(gate, ParityPhase):
            mask = 0
            for q in gate.qubits:
                mask |= _bit(m, q)
            par = _parity(idx, mask)
            amp = amp * np.exp(-1j * gate.theta * (1 - 2 * par))
        else:
            raise InvalidInputError(f"unknown gate {gate!r}")
        norm = np.linalg.norm(amp)
        if abs(norm - 1.0) > _NORM_TOL:
            raise InternalError(f"norm drifted to {norm} after {gate!r}")
    return StateVector(m, amp)


def _string_masks(p: PauliString | str, m: int) -> tuple[int, int, int]:
    s = p if isinstance(p, PauliString) else PauliString(p)
    if s.n != m:
        raise InvalidInputError(f"Pauli string has {s.n} letters, state has {m} wires")
    v = from_string(s)
    # wire j owns amplitude bit m - j, so the masks must be mirrored
    x = z = 0
    for j in range(1, m + 1):
        if v.x_bits >> (j - 1) & 1:
            x |= _bit(m, j)
        if v.z_bits >> (j - 1) & 1:
            z |= _bit(m, j)
    y_count = (x & z).bit_count()
    return x, z, y_count


def apply_pauli(state: StateVector, p: PauliString | str) -> StateVector:
    """Phase-exact action of the Hermitian Pauli string given by letters."""
    m = state.m
    x, z, y_count = _string_masks(p, m)
    idx = np.arange(1 << m)
    signs = 1 - 2 * _parity(idx, z)
    out = np.empty_like(state.amplitudes)
    out[idx ^ x] = (1j**y_count) * signs * state.amplitudes
    return StateVector(m, out)


def exact_pauli_rotation(
    state: StateVector, p: PauliString | str, theta: float
) -> StateVector:
    """``cos(theta)|psi> + i sin(theta) P|psi>``, i.e. ``exp(i theta P)``."""
    rotated = apply_pauli(state, p)
    amp = np.cos(theta) * state.amplitudes + 1j * np.sin(theta) * rotated.amplitudes
    return StateVector(state.m, amp)


def equal_up_to_global_phase(a: StateVector, b: StateVector, tol: float) -> bool:
    """True when the overlap magnitude of the normalized states is >= 1 - tol."""
    if a.m != b.m:
        raise InvalidInputError(f"qubit counts differ: {a.m} vs {b.m}")
    return overlap(a, b) >= 1.0 - tol


def overlap(a: StateVector, b: StateVector) -> float:
    """|<a|b>| after normalizing both sides."""
    na, nb = a.norm(), b.norm()
    if na == 0 or nb == 0:
        return 0.0
    return float(abs(np.vdot(a.amplitudes, b.amplitudes)) / (na * nb))


def is_stabilized(state: StateVector, p: PauliString | str, tol: float = 1e-9) -> bool:
    """Phase-exact +1 eigenvalue check: ``P|psi> = |psi>`` within ``tol``."""
    rotated = apply_pauli(state, p)
    return float(np.linalg.norm(rotated.amplitudes - state.amplitudes)) <= tol
