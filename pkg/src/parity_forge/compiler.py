"""Constructive compilation of Pauli rotations over parity generating sets.

Any non-zero target vector is produced as a nested-commutator sequence over
the generating set of a chain-condition parity set. The building blocks:

* a block-merge sequence that produces the Z-string on ``A ∪ (C \\ B∩C)``
  from the parity generator of a block B (four cases, split on whether A
  meets C and on the parity of |A|);
* a single-qubit lift prefix that turns the Z-string on a support T into any
  vector fully supported on T;
* an inductive sweep along the chain of blocks that stitches the merges
  together through the shared labels.

For the minimal parity sets there are shorter explicit sequences using at
most three parity-generator occurrences for even n (six for odd n), and the
emitted circuit conjugates a single rotation by quarter-turn Clifford
rotations, one pair per remaining sequence element.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .circuits import RX, RZ, Circuit, Gate, ParityPhase
from .errors import InternalError, InvalidInputError, NotFoundError
from .parity_sets import ParitySet, build_generating_set, check_chain_condition, minimal_parity
from .pauli import PauliVector, suffix_evaluations

_PI_4 = 0.7853981633974483  # quarter turn for the Clifford conjugation layers


@dataclass(frozen=True)
class GenRef:
    """Reference to one generator: basis x_j / z_j or a parity-set entry."""

    kind: str  # "x" | "z" | "parity"
    index: int  # qubit label for x/z, 1-based parity-set index otherwise

    def __post_init__(self):
        if self.kind not in ("x", "z", "parity"):
            raise InvalidInputError(f"unknown generator kind {self.kind!r}")

    @property
    def token(self) -> str:
        return {"x": "x", "z": "z", "parity": "p"}[self.kind] + str(self.index)

    def resolve(self, p: ParitySet) -> PauliVector:
        if self.kind == "x":
            return PauliVector.x(p.n, self.index)
        if self.kind == "z":
            return PauliVector.z(p.n, self.index)
        if not 1 <= self.index <= p.k:
            raise InvalidInputError(f"parity index {self.index} out of range 1..{p.k}")
        return PauliVector.z_set(p.n, p.sets[self.index - 1])


@dataclass(frozen=True)
class AdjointSequence:
    """Ordered generator references with right-fold adjoint semantics.

    The last element seeds the fold. Construction verifies the defining
    invariant that no strict suffix evaluates to zero, so a valid sequence
    never annihilates midway.
    """

    n: int
    elements: tuple[GenRef, ...]
    parity_set: ParitySet

    def __post_init__(self):
        if not self.elements:
            raise InvalidInputError("adjoint sequence must be non-empty")
        if self.parity_set.n != self.n:
            raise InvalidInputError("parity set and sequence disagree on qubit count")
        for value in suffix_evaluations(self.vectors()):
            if value.is_zero:
                raise InternalError("adjoint sequence annihilates midway")

    def vectors(self) -> list[PauliVector]:
        return [ref.resolve(self.parity_set) for ref in self.elements]

    def evaluate(self) -> PauliVector:
        return suffix_evaluations(self.vectors())[-1]

    @property
    def parity_uses(self) -> int:
        return sum(1 for ref in self.elements if ref.kind == "parity")

    def tokens(self) -> list[str]:
        return [ref.token for ref in self.elements]

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class CompiledRotation:
    """A target rotation together with the sequence that produces it."""

    target: PauliVector
    angle: float
    sequence: AdjointSequence
    parity_uses: int

    def __post_init__(self):
        if self.parity_uses != self.sequence.parity_uses:
            raise InternalError("parity-use count out of sync with the sequence")


def _x_refs(labels: Iterable[int]) -> list[GenRef]:
    return [GenRef("x", j) for j in sorted(labels)]


def _z_refs(labels: Iterable[int]) -> list[GenRef]:
    return [GenRef("z", j) for j in sorted(labels)]


def _merge_body(
    a: frozenset[int], b: frozenset[int], c: frozenset[int], b_ref: GenRef
) -> list[GenRef]:
    """The merge sequence up to (not including) its trailing seed block.

    Entries indexed by an empty set are omitted. Requires the caller to have
    validated A, B, C (non-empty A ⊆ B, |B| even, |B ∩ C| = 1 when C is
    non-empty).
    """
    bc = b & c
    ac = a & c
    if len(a) % 2 == 1:
        if ac:
            body = _x_refs(a) + _z_refs(a - bc) + [b_ref] + _x_refs(a - bc)
        else:
            body = _x_refs(a) + _z_refs(a) + [b_ref] + _x_refs(a | bc) + _z_refs(bc)
    else:
        pivot = min(a - ac)
        a_bar = b - a
        a_tilde = a_bar | {pivot}
        if ac:
            body = (
                _x_refs({pivot})
                + [b_ref]
                + _x_refs(a_bar)
                + _z_refs(a_bar)
                + [b_ref]
                + _x_refs(a_tilde | bc)
                + _z_refs(bc)
            )
        else:
            body = (
                _x_refs({pivot})
                + [b_ref]
                + _x_refs(a_bar)
                + _z_refs(a_bar - bc)
                + [b_ref]
                + _x_refs(a_tilde - bc)
            )
    return body


def _check_merge_args(
    a: frozenset[int], b: frozenset[int], c: frozenset[int]
) -> None:
    if not a:
        raise InvalidInputError("merge block A must be non-empty")
    if not b:
        raise InvalidInputError("merge block B must be non-empty")
    if not a <= b:
        raise InvalidInputError(f"A must be contained in B, got extra {sorted(a - b)}")
    if len(b) % 2 != 0:
        raise InvalidInputError(f"B must have even size, got {len(b)}")
    if c and len(b & c) != 1:
        raise InvalidInputError(
            f"B and C must share exactly one label, got {sorted(b & c)}"
        )


def block_merge_sequence(
    a: Iterable[int], b: Iterable[int], c: Iterable[int], p: ParitySet
) -> AdjointSequence:
    """Sequence over the generators of ``p`` evaluating to z^{A ∪ (C \\ B∩C)}.

    B (and C, when non-empty) must be entries of ``p`` so that both the body
    and the seed exist as generators.
    """
    a, b, c = frozenset(a), frozenset(b), frozenset(c)
    _check_merge_args(a, b, c)
    try:
        b_ref = GenRef("parity", p.sets.index(b) + 1)
    except ValueError:
        raise InvalidInputError(f"B = {sorted(b)} is not a parity set of p") from None
    body = _merge_body(a, b, c, b_ref)
    if c:
        try:
            c_ref = GenRef("parity", p.sets.index(c) + 1)
        except ValueError:
            raise InvalidInputError(f"C = {sorted(c)} is not a parity set of p") from None
        refs = body + [b_ref] + _x_refs(b & c) + [c_ref]
    else:
        refs = body + [b_ref]
    seq = AdjointSequence(p.n, tuple(refs), p)
    expected = PauliVector.z_set(p.n, a | (c - (b & c)))
    if seq.evaluate() != expected:
        raise InternalError("block merge produced an unexpected vector")
    return seq


def support_lift_prefix(t: Iterable[int], w: PauliVector) -> list[GenRef]:
    """Single-qubit prefix turning z^T into ``w`` when prepended.

    ``w`` must be fully supported on T: both supports inside T and every
    T-label carrying at least one of the two components.
    """
    t = frozenset(t)
    xs, zs = w.x_support(), w.z_support()
    if not xs <= t or not zs <= t:
        raise InvalidInputError("target support must lie inside T")
    if not (t - zs) <= xs:
        raise InvalidInputError("target must cover all of T")
    return _z_refs(t - zs) + _x_refs(xs)


def _lift_from_x(t: frozenset[int], w: PauliVector) -> list[GenRef]:
    # mirror image of support_lift_prefix, lifting from x^T instead of z^T
    xs, zs = w.x_support(), w.z_support()
    return _x_refs(t - xs) + _z_refs(zs)


def _generator_shortcut(
    p: ParitySet, target: PauliVector
) -> Optional[list[GenRef]]:
    gs = build_generating_set(p)
    for idx, vec in enumerate(gs.parity):
        if vec == target:
            return [GenRef("parity", idx + 1)]
    for j in range(1, p.n + 1):
        if PauliVector.x(p.n, j) == target:
            return [GenRef("x", j)]
        if PauliVector.z(p.n, j) == target:
            return [GenRef("z", j)]
    return None


def chain_compile(p: ParitySet, target: PauliVector, angle: float = 0.0) -> CompiledRotation:
    """Compile ``target`` over a chain-condition parity set.

    Walks the blocks left to right, maintaining a sequence for the Z-string
    on the covered part of the target support and one for that string
    extended by the next shared label; each step merges the next block's
    contribution through the shared label. A single-qubit lift finishes the
    job.
    """
    result = check_chain_condition(p)
    if not result.ok:
        raise InvalidInputError(
            f"parity set fails the chain condition: {list(result.violations)}"
        )
    if target.n != p.n:
        raise InvalidInputError(f"target has {target.n} qubits, parity set {p.n}")
    if target.is_zero:
        raise InvalidInputError("cannot compile the zero vector")

    shortcut = _generator_shortcut(p, target)
    if shortcut is not None:
        seq = AdjointSequence(p.n, tuple(shortcut), p)
        return CompiledRotation(target, angle, seq, seq.parity_uses)

    t_full = target.support()
    shared = [
        next(iter(p.sets[i] & p.sets[i + 1])) for i in range(p.k - 1)
    ]

    u: Optional[list[GenRef]] = None
    w: Optional[list[GenRef]] = None
    covered: frozenset[int] = frozenset()
    for j, s_j in enumerate(p.sets, start=1):
        b_ref = GenRef("parity", j)
        t_j = t_full & s_j
        if u is None:
            if t_j:
                body = _merge_body(t_j, s_j, frozenset(), b_ref)
                u = body + [b_ref]
                if j < p.k:
                    a_w = t_j | {shared[j - 1]}
                    w = _merge_body(a_w, s_j, frozenset(), b_ref) + [b_ref]
        else:
            c = covered | {shared[j - 2]}
            bc = s_j & c
            new_u = u
            if t_j:
                body = _merge_body(t_j, s_j, c, b_ref)
                new_u = body + [b_ref] + _x_refs(bc) + w
            new_w = None
            if j < p.k:
                a_w = t_j | {shared[j - 1]}
                body = _merge_body(a_w, s_j, c, b_ref)
                new_w = body + [b_ref] + _x_refs(bc) + w
            u, w = new_u, new_w
        covered |= t_j

    if u is None:
        raise InternalError("target support was never covered")
    refs = support_lift_prefix(t_full, target) + u
    seq = AdjointSequence(p.n, tuple(refs), p)
    if seq.evaluate() != target:
        raise InternalError("compiled sequence does not evaluate to the target")
    return CompiledRotation(target, angle, seq, seq.parity_uses)


def minimal_compile(n: int, target: PauliVector, angle: float = 0.0) -> CompiledRotation:
    """Constant parity-count compilation over the minimal parity set.

    Even n uses the explicit full-Z sandwich sequences (at most 3 parity
    occurrences); odd n runs the two-block chain construction and asserts
    the 6-occurrence bound.
    """
    if n < 2:
        raise InvalidInputError(f"need at least 2 qubits, got {n}")
    if target.n != n:
        raise InvalidInputError(f"target has {target.n} qubits, expected {n}")
    if target.is_zero:
        raise InvalidInputError("cannot compile the zero vector")
    p = minimal_parity(n)

    if n % 2 == 1:
        compiled = chain_compile(p, target, angle)
        if compiled.parity_uses > 6:
            raise InternalError(
                f"odd-n parity bound exceeded: {compiled.parity_uses} > 6"
            )
        return compiled

    shortcut = _generator_shortcut(p, target)
    if shortcut is not None:
        seq = AdjointSequence(n, tuple(shortcut), p)
        return CompiledRotation(target, angle, seq, seq.parity_uses)

    t_full = target.support()
    z_ref = GenRef("parity", 1)
    if len(t_full) % 2 == 1:
        core = [z_ref] + _x_refs(t_full) + [z_ref]
        core_value = PauliVector.x_set(n, t_full)
        lift = _lift_from_x(t_full, target)
    else:
        j1 = min(t_full)
        rest = sorted(set(range(1, n + 1)) - t_full)
        core = (
            [GenRef("x", j1), z_ref]
            + _x_refs(rest)
            + _z_refs(rest)
            + [z_ref, GenRef("x", j1)]
            + _x_refs(rest)
            + [z_ref]
        )
        core_value = PauliVector.z_set(n, t_full)
        lift = support_lift_prefix(t_full, target)

    seq = AdjointSequence(n, tuple(lift + core), p)
    probe = AdjointSequence(n, tuple(core), p)
    if probe.evaluate() != core_value:
        raise InternalError("core sequence produced an unexpected pattern")
    if seq.evaluate() != target:
        raise InternalError("compiled sequence does not evaluate to the target")
    if seq.parity_uses > 3:
        raise InternalError(f"even-n parity bound exceeded: {seq.parity_uses} > 3")
    return CompiledRotation(target, angle, seq, seq.parity_uses)


def seq_depth(compiled: CompiledRotation) -> int:
    """Parity-generator occurrences: the attained upper bound on seq-depth."""
    return compiled.sequence.parity_uses


def exact_seq_depth(p: ParitySet, target: PauliVector) -> int:
    """True minimum parity-generator count over all sequences (small n only).

    0/1-weighted breadth-first search over the reachable set, charging one
    unit per parity-generator application.
    """
    if p.n > 4:
        raise InvalidInputError("exact seq-depth search is capped at 4 qubits")
    if target.is_zero or target.n != p.n:
        raise InvalidInputError("target must be a non-zero vector on p.n qubits")
    gens = build_generating_set(p).all
    costs = [0] * (2 * p.n) + [1] * p.k
    packed = [g.packed for g in gens]
    n = p.n
    mask = (1 << n) - 1
    size = 1 << (2 * n)
    dist = [-1] * size
    queue: deque[int] = deque()
    for g, cost in sorted(zip(packed, costs), key=lambda t: t[1]):
        if dist[g] == -1 or cost < dist[g]:
            dist[g] = cost
            if cost == 0:
                queue.appendleft(g)
            else:
                queue.append(g)
    while queue:
        v = queue.popleft()
        vx, vz = v & mask, v >> n
        for g, cost in zip(packed, costs):
            gx, gz = g & mask, g >> n
            if ((gx & vz).bit_count() + (gz & vx).bit_count()) & 1:
                w = v ^ g
                if w and (dist[w] == -1 or dist[v] + cost < dist[w]):
                    dist[w] = dist[v] + cost
                    if cost == 0:
                        queue.appendleft(w)
                    else:
                        queue.append(w)
    if dist[target.packed] == -1:
        raise NotFoundError("target is not reachable over this parity set")
    return dist[target.packed]


def _phase_exponent(vectors: Sequence[PauliVector]) -> int:
    """i-exponent of i^{r-1} P_1 P_2 ... P_r in X-then-Z normal form."""
    q = (len(vectors) - 1) % 4
    acc_x = acc_z = 0
    for v in vectors:
        y = (v.x_bits & v.z_bits).bit_count()
        q = (q + y + 2 * (acc_z & v.x_bits).bit_count()) % 4
        acc_x ^= v.x_bits
        acc_z ^= v.z_bits
    return q


def _render(ref: GenRef, p: ParitySet, angle: float) -> Gate:
    if ref.kind == "x":
        return RX(ref.index, angle)
    if ref.kind == "z":
        return RZ(ref.index, angle)
    return ParityPhase(tuple(sorted(p.sets[ref.index - 1])), angle)


def emit_circuit(compiled: CompiledRotation) -> Circuit:
    """Render the conjugation sandwich as an executable gate list.

    The sequence elements become quarter-turn layers around a single central
    rotation, ``2r - 1`` gates in total. The central angle carries the sign
    of the nested commutator (tracked exactly through the Pauli algebra), so
    the circuit implements ``exp(i * angle * P_target)`` on the nose.
    """
    seq = compiled.sequence
    p = seq.parity_set
    vectors = seq.vectors()
    target = compiled.target

    q = _phase_exponent(vectors)
    y_t = (target.x_bits & target.z_bits).bit_count()
    delta = (q - y_t) % 4
    if delta == 0:
        sign = 1.0
    elif delta == 2:
        sign = -1.0
    else:
        raise InternalError("nested commutator is not proportional to the target")

    central = -sign * compiled.angle
    gates: list[Gate] = []
    for ref in seq.elements[:-1]:
        gates.append(_render(ref, p, _PI_4))
    gates.append(_render(seq.elements[-1], p, central))
    for ref in reversed(seq.elements[:-1]):
        gates.append(_render(ref, p, -_PI_4))
    return Circuit(seq.n, gates)


def entangling_gate_count(circuit: Circuit) -> int:
    """Number of multi-qubit parity-phase gates in an emitted circuit."""
    return sum(1 for gate in circuit.gates if isinstance(gate, ParityPhase))
