"""parity-forge: compile and verify minimally universal parity computing.

Decides universality of parity generating sets by brute-force commutator
closure, compiles arbitrary Pauli-string rotations into nested-commutator
sequences over a minimal generating set, emits executable circuits, and
checks everything against an independent dense statevector oracle.
"""

from .closure import (
    BACKEND,
    ClosureResult,
    closure,
    is_universal,
    single_extension_scan,
    witness_sequence,
)
from .compiler import (
    AdjointSequence,
    CompiledRotation,
    GenRef,
    block_merge_sequence,
    chain_compile,
    emit_circuit,
    entangling_gate_count,
    exact_seq_depth,
    minimal_compile,
    seq_depth,
    support_lift_prefix,
)
from .circuits import CNOT, RX, RZ, Circuit, H, ParityPhase, load_circuit, parse_circuit, render_circuit, save_circuit
from .encoding import (
    ancilla_rotation,
    build_encoder,
    check_lhz_stabilizers,
    flow_rotation,
    lhz_state,
    stabilizer_string,
)
from .errors import (
    InternalError,
    InvalidInputError,
    NotFoundError,
    ParityForgeError,
    ResourceLimitError,
)
from .gflow import (
    GFlow,
    OpenGraph,
    build_resource_graph,
    canonical_gflow,
    odd_neighborhood,
    verify_gflow,
)
from .parity_sets import (
    CheckResult,
    GeneratingSet,
    ParitySet,
    build_generating_set,
    chain_subset,
    check_chain_condition,
    minimal_parity,
    pairs_parity,
)
from .pauli import (
    PauliString,
    PauliVector,
    adjoint,
    evaluate_sequence,
    from_string,
    symplectic_product,
    to_string,
)
from . import simulator

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "AdjointSequence",
    "CNOT",
    "Circuit",
    "CheckResult",
    "ClosureResult",
    "CompiledRotation",
    "GFlow",
    "GenRef",
    "GeneratingSet",
    "H",
    "InternalError",
    "InvalidInputError",
    "NotFoundError",
    "OpenGraph",
    "ParityForgeError",
    "ParityPhase",
    "ParitySet",
    "PauliString",
    "PauliVector",
    "RX",
    "RZ",
    "ResourceLimitError",
    "adjoint",
    "ancilla_rotation",
    "block_merge_sequence",
    "build_encoder",
    "build_generating_set",
    "build_resource_graph",
    "canonical_gflow",
    "chain_compile",
    "chain_subset",
    "check_chain_condition",
    "check_lhz_stabilizers",
    "closure",
    "emit_circuit",
    "entangling_gate_count",
    "evaluate_sequence",
    "exact_seq_depth",
    "flow_rotation",
    "from_string",
    "is_universal",
    "lhz_state",
    "load_circuit",
    "minimal_compile",
    "minimal_parity",
    "odd_neighborhood",
    "pairs_parity",
    "parse_circuit",
    "render_circuit",
    "save_circuit",
    "seq_depth",
    "simulator",
    "single_extension_scan",
    "stabilizer_string",
    "support_lift_prefix",
    "symplectic_product",
    "to_string",
    "verify_gflow",
    "witness_sequence",
]
