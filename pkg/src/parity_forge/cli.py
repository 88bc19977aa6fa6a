"""Command-line entry point.

Machine-readable JSON goes to stdout (sorted keys, compact separators, so
identical invocations are byte-identical); human diagnostics go to stderr.
Exit codes: 0 success, 1 domain error (with a structured JSON error object
on stdout), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys

import numpy as np

from . import __version__
from .circuits import load_circuit, save_circuit
from .closure import closure, single_extension_scan, witness_sequence
from .compiler import chain_compile, emit_circuit, minimal_compile
from .encoding import build_encoder
from .errors import InvalidInputError, ParityForgeError
from .gflow import build_resource_graph, canonical_gflow, graph_to_json, verify_gflow
from .parity_sets import ParitySet, build_generating_set, check_chain_condition, minimal_parity
from .pauli import from_string
from . import simulator


def parse_angle(text: str) -> float:
    """Radians as a decimal or in the ``pi/4`` style (``-pi``, ``3*pi/2``...)."""
    s = text.strip().lower().replace(" ", "")
    try:
        return float(s)
    except ValueError:
        pass
    sign = 1.0
    if s.startswith("-"):
        sign, s = -1.0, s[1:]
    elif s.startswith("+"):
        s = s[1:]
    match = re.fullmatch(r"(?:(\d+(?:\.\d+)?)\*)?pi(?:/(\d+(?:\.\d+)?))?", s)
    if not match:
        raise InvalidInputError(f"cannot parse angle {text!r}")
    num = float(match.group(1)) if match.group(1) else 1.0
    den = float(match.group(2)) if match.group(2) else 1.0
    if den == 0:
        raise InvalidInputError("angle denominator must be non-zero")
    return sign * num * math.pi / den


def _emit(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True, separators=(",", ":")))


def _diag(message: str) -> None:
    print(message, file=sys.stderr)


def _gen_token(n: int, k: int, index: int) -> str:
    if index < n:
        return f"x{index + 1}"
    if index < 2 * n:
        return f"z{index - n + 1}"
    return f"p{index - 2 * n + 1}"


def cmd_check(args) -> dict:
    p = ParitySet.load(args.parity)
    result = check_chain_condition(p)
    return {"ok": result.ok, "violations": list(result.violations)}


def cmd_closure(args) -> dict:
    p = ParitySet.load(args.parity)
    gens = build_generating_set(p)
    result = closure(gens.all)
    payload = {"reachable_count": result.size, "universal": result.universal}
    if args.witness:
        target = from_string(args.witness)
        if target.n != p.n:
            raise InvalidInputError(
                f"witness target has {target.n} qubits, parity set {p.n}"
            )
        indices = result.witness_indices(target)
        payload["witness"] = [_gen_token(p.n, p.k, i) for i in indices]
        _diag(f"witness length {len(indices)}")
    return payload


def cmd_theorem2(args) -> dict:
    return single_extension_scan(args.n)


def cmd_compile(args) -> dict:
    p = ParitySet.load(args.parity) if args.parity else None
    n = args.n if args.n is not None else (p.n if p else None)
    if n is None:
        raise InvalidInputError("need --n or --parity")
    if p is not None and p.n != n:
        raise InvalidInputError(f"--n {n} disagrees with parity set on {p.n} qubits")
    target = from_string(args.target)
    if target.n != n:
        raise InvalidInputError(f"target has {target.n} qubits, expected {n}")
    angle = parse_angle(args.angle)
    if args.mode == "prop1":
        if p is not None and p.sets != minimal_parity(n).sets:
            raise InvalidInputError("prop1 mode uses the minimal parity set")
        compiled = minimal_compile(n, target, angle)
    else:
        compiled = chain_compile(p if p is not None else minimal_parity(n), target, angle)
    payload = {
        "sequence": compiled.sequence.tokens(),
        "parity_uses": compiled.parity_uses,
    }
    if args.emit:
        save_circuit(emit_circuit(compiled), args.emit)
        payload["emitted"] = args.emit
        _diag(f"wrote circuit to {args.emit}")
    return payload


def cmd_verify(args) -> dict:
    target = args.target
    angle = parse_angle(args.angle)
    circuit = load_circuit(args.circuit, num_qubits=len(target))
    if circuit.num_qubits != len(target):
        raise InvalidInputError(
            f"circuit touches {circuit.num_qubits} wires, target has {len(target)}"
        )
    rng = np.random.default_rng(args.seed)
    min_overlap = 1.0
    for _ in range(args.trials):
        state = simulator.random_state(len(target), rng)
        via_circuit = simulator.apply_circuit(state, circuit)
        exact = simulator.exact_pauli_rotation(state, target, angle)
        min_overlap = min(min_overlap, simulator.overlap(via_circuit, exact))
    passed = min_overlap >= 1.0 - 1e-9
    _diag(f"min overlap {min_overlap:.3e} over {args.trials} states")
    return {"pass": passed, "min_overlap": min_overlap, "trials": args.trials, "seed": args.seed}


def cmd_encode(args) -> dict:
    p = ParitySet.load(args.parity)
    circuit = build_encoder(p)
    save_circuit(circuit, args.out)
    return {"num_qubits": circuit.num_qubits, "gates": len(circuit), "out": args.out}


def cmd_gflow(args) -> dict:
    graph = build_resource_graph(args.n, args.l)
    flow = canonical_gflow(args.n, args.l)
    payload = {
        "num_vertices": graph.num_vertices,
        "num_edges": len(graph.edges()),
        "inputs": sorted(graph.inputs),
        "outputs": sorted(graph.outputs),
    }
    if args.verify:
        result = verify_gflow(graph, flow)
        payload["ok"] = result.ok
        payload["violations"] = [list(v) for v in result.violations]
    if args.export:
        with open(args.export, "w") as fh:
            json.dump(graph_to_json(graph, args.n, args.l), fh, sort_keys=True, indent=1)
            fh.write("\n")
        payload["exported"] = args.export
    return payload


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parity-forge",
        description="Compile and verify minimally universal parity quantum computing.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="check the universality sufficient condition")
    p_check.add_argument("--parity", required=True, help="parity-set JSON file")
    p_check.set_defaults(func=cmd_check)

    p_closure = sub.add_parser("closure", help="brute-force closure of a parity generating set")
    p_closure.add_argument("--parity", required=True, help="parity-set JSON file")
    p_closure.add_argument("--witness", help="Pauli string to extract a witness sequence for")
    p_closure.set_defaults(func=cmd_closure)

    p_thm2 = sub.add_parser(
        "theorem2", help="scan all single-Pauli extensions of the single-qubit set"
    )
    p_thm2.add_argument("--n", type=int, required=True, help="odd qubit count (3..7)")
    p_thm2.set_defaults(func=cmd_theorem2)

    p_compile = sub.add_parser("compile", help="compile a Pauli rotation to a sequence")
    p_compile.add_argument("--n", type=int, help="qubit count")
    p_compile.add_argument("--target", required=True, help="Pauli string, e.g. XYZI")
    p_compile.add_argument("--angle", required=True, help="radians (decimal or pi/4 form)")
    p_compile.add_argument("--mode", choices=["prop1", "theorem1"], default="prop1")
    p_compile.add_argument("--parity", help="parity-set JSON file (theorem1 mode)")
    p_compile.add_argument("--emit", help="write the emitted circuit to this file")
    p_compile.set_defaults(func=cmd_compile)

    p_verify = sub.add_parser("verify", help="check a circuit against the exact rotation")
    p_verify.add_argument("--circuit", required=True, help="circuit text file")
    p_verify.add_argument("--target", required=True, help="Pauli string")
    p_verify.add_argument("--angle", required=True, help="radians (decimal or pi/4 form)")
    p_verify.add_argument("--seed", type=int, default=7, help="random-state seed")
    p_verify.add_argument("--trials", type=int, default=10, help="number of random states")
    p_verify.set_defaults(func=cmd_verify)

    p_encode = sub.add_parser("encode", help="emit the parity encoding circuit")
    p_encode.add_argument("--parity", required=True, help="parity-set JSON file")
    p_encode.add_argument("--out", required=True, help="output circuit file")
    p_encode.set_defaults(func=cmd_encode)

    p_gflow = sub.add_parser("gflow", help="build (and verify) a resource graph")
    p_gflow.add_argument("--n", type=int, required=True, help="number of chains")
    p_gflow.add_argument("--l", type=int, required=True, help="number of layers")
    p_gflow.add_argument("--verify", action="store_true", help="verify the canonical gflow")
    p_gflow.add_argument("--export", help="write the open graph as JSON")
    p_gflow.set_defaults(func=cmd_gflow)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload = args.func(args)
    except ParityForgeError as exc:
        _emit({"error": {"kind": exc.kind, "message": str(exc)}, "status": "error"})
        return 1
    except OSError as exc:
        _emit({"error": {"kind": "io-error", "message": str(exc)}, "status": "error"})
        return 1
    _emit(payload)
    return 0


if __name__ == "__main__":
    sys.exit(main())
