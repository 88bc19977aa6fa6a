"""Brute-force commutator closure over the binary symplectic space.

This is the oracle side of the toolkit: it decides universality of a
generating set by exhaustive breadth-first search, extracts witness
sequences for any reachable vector, and runs the impossibility scan over
all single-vector extensions of the single-qubit set.

The inner loops live in a compiled extension when available; a pure-Python
kernel with the same API is the fallback. ``BACKEND`` names the one in use.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import InvalidInputError, NotFoundError, ResourceLimitError
from .pauli import PauliVector
from .parity_sets import ParitySet, build_generating_set

from . import _closure_py

if os.environ.get("PARITY_FORGE_PURE"):
    _kernel = _closure_py
else:
    try:
        from . import _closure_core as _kernel
    except ImportError:  # pragma: no cover - depends on build environment
        _kernel = _closure_py

BACKEND = _kernel.BACKEND

MAX_CLOSURE_QUBITS = 10
MAX_SCAN_QUBITS = 7


@dataclass(frozen=True)
class ClosureResult:
    """Reachable set of a closure search plus parent links for witnesses.

    ``universal`` is equivalent to the reachable count being exactly
    4^n - 1. Parent chains terminate at input generators.
    """

    n: int
    gens: tuple[PauliVector, ...]
    size: int
    universal: bool
    _order: Sequence[int]
    _parent_gen: Sequence[int]
    _parent_prev: Sequence[int]

    def __contains__(self, v: PauliVector) -> bool:
        if v.n != self.n or v.is_zero:
            return False
        return self._parent_gen[v.packed] != -2

    def vectors(self) -> Iterator[PauliVector]:
        """Reachable vectors in discovery order."""
        for code in self._order:
            yield PauliVector.from_packed(self.n, code)

    @property
    def reachable(self) -> frozenset[PauliVector]:
        return frozenset(self.vectors())

    def witness_indices(self, target: PauliVector) -> list[int]:
        """Generator indices whose adjoint fold produces ``target``."""
        if target not in self:
            raise NotFoundError(f"target {target!r} is not reachable")
        chain: list[int] = []
        code = target.packed
        while True:
            gi = self._parent_gen[code]
            if gi == -1:
                chain.append(self._parent_prev[code])
                break
            chain.append(gi)
            code ^= self.gens[gi].packed
        return chain


def closure(gens: Sequence[PauliVector]) -> ClosureResult:
    """Breadth-first fixed point of the adjoint map over ``gens``.

    Starting from the non-zero generators, repeatedly adds ``adjoint(g, v)``
    for every generator g and reachable v. Parent assignment is
    deterministic: vectors are processed in discovery order and generators
    in their given order.
    """
    if not gens:
        raise InvalidInputError("need at least one generator")
    n = gens[0].n
    for g in gens:
        if g.n != n:
            raise InvalidInputError("generators mix qubit counts")
    if n > MAX_CLOSURE_QUBITS:
        raise ResourceLimitError(
            f"closure capped at {MAX_CLOSURE_QUBITS} qubits, got {n}"
        )
    order, parent_gen, parent_prev = _kernel.closure_reach(
        n, [g.packed for g in gens]
    )
    size = len(order)
    return ClosureResult(
        n=n,
        gens=tuple(gens),
        size=size,
        universal=size == (1 << (2 * n)) - 1,
        _order=order,
        _parent_gen=parent_gen,
        _parent_prev=parent_prev,
    )


def is_universal(p: ParitySet) -> bool:
    """Whether the parity generating set of ``p`` reaches all of F_2^{2n}\\{0}."""
    return closure(build_generating_set(p).all).universal


def witness_sequence(result: ClosureResult, target: PauliVector) -> list[PauliVector]:
    """An adjoint sequence over the input generators that evaluates to ``target``.

    The last element seeds the fold (same convention as
    :func:`parity_forge.pauli.evaluate_sequence`).
    """
    return [result.gens[i] for i in result.witness_indices(target)]


def single_extension_scan(n: int) -> dict:
    """Try every single Pauli vector as the sole extension of the 1-qubit set.

    For odd n the scan confirms that no choice reaches universality:
    ``all_fail`` stays True and ``max_closure`` reports the largest closure
    encountered.
    """
    if n % 2 == 0:
        raise InvalidInputError(f"scan applies to odd qubit counts, got {n}")
    if not 3 <= n <= MAX_SCAN_QUBITS:
        raise ResourceLimitError(f"scan capped at 3..{MAX_SCAN_QUBITS} qubits, got {n}")
    all_fail, max_count = _kernel.scan_single_extensions(n)
    return {"all_fail": bool(all_fail), "max_closure": int(max_count)}


def closure_count(gens: Sequence[PauliVector], stop_at: int = 0) -> int:
    """Reachable-set size without parent bookkeeping (cheaper)."""
    if not gens:
        raise InvalidInputError("need at least one generator")
    n = gens[0].n
    if n > MAX_CLOSURE_QUBITS:
        raise ResourceLimitError(
            f"closure capped at {MAX_CLOSURE_QUBITS} qubits, got {n}"
        )
    return _kernel.closure_count(n, [g.packed for g in gens], stop_at)


def pure_python_kernel():
    """The fallback kernel module (used by the backend-comparison benchmark)."""
    return _closure_py
