"""Parity encoding circuits and in-place parity rotations.

``build_encoder`` produces the CNOT circuit that writes the parity of each
subset onto its parity wire (base wires first, parity wires appended in
parity-set order). ``flow_rotation`` is the ancilla-free alternative: the
parity is temporarily accumulated on a base qubit, rotated, and undone.
Both enact ``exp(-i theta Z_S)`` on the base register, as does the native
parity-phase gate; the statevector tests pin down this three-way agreement.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .circuits import CNOT, RZ, Circuit
from .errors import InvalidInputError, ResourceLimitError
from .parity_sets import ParitySet
from .pauli import PauliString
from . import simulator
from .simulator import MAX_SIM_QUBITS


def build_encoder(p: ParitySet) -> Circuit:
    """CNOT encoder on n + k wires; parity wire n + j collects subset j.

    Within one parity wire the fan-in is ordered by ascending base qubit;
    those CNOTs share a fresh target and commute, so the order is fixed
    purely for reproducible circuit text.
    """
    n, k = p.n, p.k
    gates = []
    for j, subset in enumerate(p.sets, start=1):
        for i in sorted(subset):
            gates.append(CNOT(i, n + j))
    return Circuit(n + k, gates)


def flow_rotation(s: Iterable[int], pivot: int, theta: float, n: int) -> Circuit:
    """In-place rotation ``exp(-i theta Z_S)`` on n wires.

    CNOTs fan the parity of S into the pivot qubit, a single RZ applies the
    phase, and the mirrored fan undoes the accumulation.
    """
    subset = sorted(set(int(q) for q in s))
    if not subset:
        raise InvalidInputError("rotation support must be non-empty")
    if pivot not in subset:
        raise InvalidInputError(f"pivot {pivot} not in support {subset}")
    for q in subset:
        if not 1 <= q <= n:
            raise InvalidInputError(f"qubit {q} out of range 1..{n}")
    fan_in = [CNOT(i, pivot) for i in subset if i != pivot]
    return Circuit(n, fan_in + [RZ(pivot, theta)] + fan_in[::-1])


def ancilla_rotation(s: Iterable[int], theta: float, n: int) -> Circuit:
    """``exp(-i theta Z_S)`` via one fresh parity wire appended at n + 1.

    Encodes the parity of S onto the ancilla, rotates it, and decodes with
    the reversed CNOTs; on input ``|psi>|0>`` the ancilla returns to ``|0>``.
    """
    subset = sorted(set(int(q) for q in s))
    if not subset:
        raise InvalidInputError("rotation support must be non-empty")
    for q in subset:
        if not 1 <= q <= n:
            raise InvalidInputError(f"qubit {q} out of range 1..{n}")
    fan_in = [CNOT(i, n + 1) for i in subset]
    return Circuit(n + 1, fan_in + [RZ(n + 1, theta)] + fan_in[::-1])


def lhz_state(p: ParitySet, base: simulator.StateVector) -> simulator.StateVector:
    """Encode an n-qubit base state into the n + k wire parity-encoded state."""
    if base.m != p.n:
        raise InvalidInputError(f"base state has {base.m} qubits, expected {p.n}")
    if p.n + p.k > MAX_SIM_QUBITS:
        raise ResourceLimitError(
            f"encoding needs {p.n + p.k} wires, simulator cap is {MAX_SIM_QUBITS}"
        )
    full = simulator.tensor(base, simulator.zero_state(p.k))
    return simulator.apply_circuit(full, build_encoder(p))


def stabilizer_string(p: ParitySet, j: int) -> PauliString:
    """The j-th stabilizer of the encoded state: Z on parity wire n + j and
    on every base wire in subset j."""
    if not 1 <= j <= p.k:
        raise InvalidInputError(f"parity index {j} out of range 1..{p.k}")
    letters = ["I"] * (p.n + p.k)
    letters[p.n + j - 1] = "Z"
    for i in p.sets[j - 1]:
        letters[i - 1] = "Z"
    return PauliString("".join(letters))


def check_lhz_stabilizers(
    p: ParitySet, trials: int, seed: int = 0, tol: float = 1e-9
) -> bool:
    """Encode random base states and verify every stabilizer identity."""
    if p.n + p.k > MAX_SIM_QUBITS:
        raise ResourceLimitError(
            f"encoding needs {p.n + p.k} wires, simulator cap is {MAX_SIM_QUBITS}"
        )
    rng = np.random.default_rng(seed)
    strings = [stabilizer_string(p, j) for j in range(1, p.k + 1)]
    for _ in range(trials):
        encoded = lhz_state(p, simulator.random_state(p.n, rng))
        for s in strings:
            if not simulator.is_stabilized(encoded, s, tol):
                return False
    return True
