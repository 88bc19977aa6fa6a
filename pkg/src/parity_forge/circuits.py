"""Circuit values and their text format.

A circuit is an ordered gate list over a fixed alphabet: CNOT, single-qubit
rotations RX/RZ, Hadamard, and the multi-qubit parity phase. Rotation gates
follow the physics convention ``R_P(theta) = exp(-i * theta * P)``; the
parity phase on a set S is ``exp(-i * theta * Z_S)`` with ``Z_S`` the tensor
product of Z over S.

Text format, one gate per line (1-based wires, radians as decimals):

    CNOT c t
    RX q theta
    RZ q theta
    H q
    PPHASE q1,q2,...,qm theta

``#`` starts a comment. A ``# qubits: m`` comment records the wire count.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .errors import InvalidInputError


@dataclass(frozen=True)
class CNOT:
    control: int
    target: int


@dataclass(frozen=True)
class RX:
    qubit: int
    theta: float


@dataclass(frozen=True)
class RZ:
    qubit: int
    theta: float


@dataclass(frozen=True)
class H:
    qubit: int


@dataclass(frozen=True)
class ParityPhase:
    qubits: tuple[int, ...]
    theta: float


Gate = Union[CNOT, RX, RZ, H, ParityPhase]


@dataclass(frozen=True)
class Circuit:
    """An ordered gate list on ``num_qubits`` wires."""

    num_qubits: int
    gates: tuple[Gate, ...]

    def __init__(self, num_qubits: int, gates: Iterable[Gate]) -> None:
        if num_qubits < 1:
            raise InvalidInputError(f"wire count must be positive, got {num_qubits}")
        gates = tuple(gates)
        for gate in gates:
            _validate_gate(gate, num_qubits)
        object.__setattr__(self, "num_qubits", num_qubits)
        object.__setattr__(self, "gates", gates)

    def __len__(self) -> int:
        return len(self.gates)

    def inverse(self) -> "Circuit":
        """Gate-reversed circuit with negated rotation angles."""
        inv = []
        for gate in reversed(self.gates):
            if isinstance(gate, RX):
                inv.append(RX(gate.qubit, -gate.theta))
            elif isinstance(gate, RZ):
                inv.append(RZ(gate.qubit, -gate.theta))
            elif isinstance(gate, ParityPhase):
                inv.append(ParityPhase(gate.qubits, -gate.theta))
            else:
                inv.append(gate)
        return Circuit(self.num_qubits, inv)


def _validate_gate(gate: Gate, num_qubits: int) -> None:
    def check(q: int) -> None:
        if not 1 <= q <= num_qubits:
            raise InvalidInputError(f"wire {q} out of range 1..{num_qubits}")

    if isinstance(gate, CNOT):
        check(gate.control)
        check(gate.target)
        if gate.control == gate.target:
            raise InvalidInputError("CNOT control and target must differ")
    elif isinstance(gate, (RX, RZ, H)):
        check(gate.qubit)
    elif isinstance(gate, ParityPhase):
        if not gate.qubits:
            raise InvalidInputError("parity phase needs a non-empty wire set")
        if len(set(gate.qubits)) != len(gate.qubits):
            raise InvalidInputError("parity phase wires must be distinct")
        for q in gate.qubits:
            check(q)
    else:
        raise InvalidInputError(f"unknown gate {gate!r}")


def render_circuit(circuit: Circuit) -> str:
    """Serialize to the one-gate-per-line text format."""
    lines = [f"# qubits: {circuit.num_qubits}"]
    for gate in circuit.gates:
        if isinstance(gate, CNOT):
            lines.append(f"CNOT {gate.control} {gate.target}")
        elif isinstance(gate, RX):
            lines.append(f"RX {gate.qubit} {gate.theta!r}")
        elif isinstance(gate, RZ):
            lines.append(f"RZ {gate.qubit} {gate.theta!r}")
        elif isinstance(gate, H):
            lines.append(f"H {gate.qubit}")
        elif isinstance(gate, ParityPhase):
            wires = ",".join(str(q) for q in gate.qubits)
            lines.append(f"PPHASE {wires} {gate.theta!r}")
    return "\n".join(lines) + "\n"


def parse_circuit(text: str, num_qubits: int | None = None) -> Circuit:
    """Parse the text format; wire count from ``# qubits:`` or the gates."""
    gates: list[Gate] = []
    declared = num_qubits
    max_wire = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("#"):
            body = line[1:].strip()
            if body.lower().startswith("qubits:"):
                try:
                    declared = max(declared or 0, int(body.split(":", 1)[1]))
                except ValueError:
                    pass
            continue
        if not line:
            continue
        if "#" in line:
            line = line.split("#", 1)[0].strip()
        parts = line.split()
        try:
            gate = _parse_gate(parts)
        except (ValueError, IndexError) as exc:
            raise InvalidInputError(f"line {lineno}: cannot parse {raw!r}") from exc
        gates.append(gate)
        if isinstance(gate, CNOT):
            max_wire = max(max_wire, gate.control, gate.target)
        elif isinstance(gate, ParityPhase):
            max_wire = max(max_wire, *gate.qubits)
        else:
            max_wire = max(max_wire, gate.qubit)
    total = max(declared or 0, max_wire)
    if total == 0:
        raise InvalidInputError("circuit text contains no gates and no wire count")
    return Circuit(total, gates)


def _parse_gate(parts: list[str]) -> Gate:
    name = parts[0].upper()
    if name == "CNOT":
        return CNOT(int(parts[1]), int(parts[2]))
    if name == "RX":
        return RX(int(parts[1]), float(parts[2]))
    if name == "RZ":
        return RZ(int(parts[1]), float(parts[2]))
    if name == "H":
        return H(int(parts[1]))
    if name == "PPHASE":
        wires = tuple(int(q) for q in parts[1].split(","))
        return ParityPhase(wires, float(parts[2]))
    raise ValueError(f"unknown gate name {name}")


def load_circuit(path: str, num_qubits: int | None = None) -> Circuit:
    with open(path) as fh:
        return parse_circuit(fh.read(), num_qubits)


def save_circuit(circuit: Circuit, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(render_circuit(circuit))
