"""Parity sets and the generating sets they induce.

A parity set is an ordered list of subsets of the base-qubit labels; each
subset names one parity qubit and contributes one multi-qubit Z generator.
``check_chain_condition`` tests the sufficient condition for universality:
all subsets of even size, jointly covering every label, consecutive subsets
overlapping in exactly one label (all overlaps distinct) and non-consecutive
subsets disjoint.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

from .errors import InvalidInputError
from .pauli import PauliVector


@dataclass(frozen=True)
class ParitySet:
    """An ordered list of non-empty subsets of {1..n}."""

    n: int
    sets: tuple[frozenset[int], ...]

    def __init__(self, n: int, sets: Sequence) -> None:
        if n < 1:
            raise InvalidInputError(f"qubit count must be positive, got {n}")
        normalized = []
        for idx, s in enumerate(sets):
            s = frozenset(int(j) for j in s)
            if not s:
                raise InvalidInputError(f"parity set #{idx + 1} is empty")
            bad = [j for j in s if not 1 <= j <= n]
            if bad:
                raise InvalidInputError(
                    f"parity set #{idx + 1} has labels out of range 1..{n}: {sorted(bad)}"
                )
            normalized.append(s)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "sets", tuple(normalized))

    @property
    def k(self) -> int:
        return len(self.sets)

    def to_json(self) -> dict:
        return {"n": self.n, "sets": [sorted(s) for s in self.sets]}

    @staticmethod
    def from_json(data: dict) -> "ParitySet":
        try:
            n = int(data["n"])
            sets = list(data["sets"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInputError(f"malformed parity-set JSON: {exc}") from exc
        return ParitySet(n, sets)

    @staticmethod
    def load(path: str) -> "ParitySet":
        with open(path) as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise InvalidInputError(f"{path}: not valid JSON: {exc}") from exc
        return ParitySet.from_json(data)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of the chain-condition check with one entry per failed clause."""

    ok: bool
    violations: tuple[dict, ...]


@dataclass(frozen=True)
class GeneratingSet:
    """Single-qubit X/Z generators plus one Z-type generator per parity set."""

    n: int
    single_qubit: tuple[PauliVector, ...]
    parity: tuple[PauliVector, ...]
    parity_set: ParitySet = field(compare=False)

    @property
    def all(self) -> tuple[PauliVector, ...]:
        """Generators in canonical order: x_1..x_n, z_1..z_n, parity vectors."""
        return self.single_qubit + self.parity


def check_chain_condition(p: ParitySet) -> CheckResult:
    """Check the sufficient condition for a parity set to be universal.

    Returns every failed clause, not only the first, so layouts can be
    debugged in one pass. ``ok`` is True exactly when no clause failed.
    """
    violations: list[dict] = []
    k = p.k

    for idx, s in enumerate(p.sets):
        if len(s) % 2 != 0:
            violations.append(
                {"condition": "even-size", "index": idx + 1, "size": len(s)}
            )

    union = frozenset().union(*p.sets) if p.sets else frozenset()
    missing = sorted(set(range(1, p.n + 1)) - union)
    if missing:
        violations.append({"condition": "cover", "missing": missing})

    for (i, a), (j, b) in combinations(enumerate(p.sets), 2):
        if a == b:
            violations.append(
                {"condition": "duplicate", "indices": [i + 1, j + 1]}
            )

    if k >= 2:
        overlaps: list[Optional[int]] = []
        for i in range(k - 1):
            inter = p.sets[i] & p.sets[i + 1]
            if len(inter) != 1:
                violations.append(
                    {
                        "condition": "adjacent-overlap",
                        "indices": [i + 1, i + 2],
                        "intersection": sorted(inter),
                    }
                )
                overlaps.append(None)
            else:
                overlaps.append(next(iter(inter)))
        for (i, a), (j, b) in combinations(enumerate(p.sets), 2):
            if j - i >= 2 and a & b:
                violations.append(
                    {
                        "condition": "distant-disjoint",
                        "indices": [i + 1, j + 1],
                        "intersection": sorted(a & b),
                    }
                )
        seen: dict[int, int] = {}
        for i, s in enumerate(overlaps):
            if s is None:
                continue
            if s in seen:
                violations.append(
                    {
                        "condition": "shared-labels-distinct",
                        "indices": [seen[s] + 1, i + 1],
                        "label": s,
                    }
                )
            else:
                seen[s] = i

    return CheckResult(ok=not violations, violations=tuple(violations))


def minimal_parity(n: int, split: Optional[int] = None) -> ParitySet:
    """The smallest universal parity set: one subset for even n, two for odd.

    For odd n the two subsets are {1..j} and {j..n} for an even split point
    ``j``; the default is ``j = n - 1``.
    """
    if n < 2:
        raise InvalidInputError(f"need at least 2 qubits, got {n}")
    if n % 2 == 0:
        if split is not None:
            raise InvalidInputError("split point only applies to odd qubit counts")
        return ParitySet(n, [range(1, n + 1)])
    j = n - 1 if split is None else split
    if j % 2 != 0 or not 2 <= j <= n - 1:
        raise InvalidInputError(
            f"split point must be even and within 2..{n - 1}, got {j}"
        )
    return ParitySet(n, [range(1, j + 1), range(j, n + 1)])


def pairs_parity(n: int) -> ParitySet:
    """All two-element subsets {i, j} with i < j, in lexicographic order."""
    if n < 2:
        raise InvalidInputError(f"need at least 2 qubits, got {n}")
    return ParitySet(n, [{i, j} for i, j in combinations(range(1, n + 1), 2)])


def chain_subset(p: ParitySet) -> Optional[ParitySet]:
    """Heuristic witness finder: a sub-list of ``p.sets`` passing the check.

    Tries the identity sub-list and the nearest-neighbour chain
    {1,2}, {2,3}, ..., {n-1,n} drawn from ``p.sets``; returns None when
    neither candidate passes. This is not a complete search.
    """
    if check_chain_condition(p).ok:
        return p
    chain = [frozenset({i, i + 1}) for i in range(1, p.n)]
    members = set(p.sets)
    if all(link in members for link in chain):
        candidate = ParitySet(p.n, chain)
        if check_chain_condition(candidate).ok:
            return candidate
    return None


def build_generating_set(p: ParitySet) -> GeneratingSet:
    """All single-qubit X/Z vectors plus one Z-only vector per parity set."""
    single = tuple(
        [PauliVector.x(p.n, j) for j in range(1, p.n + 1)]
        + [PauliVector.z(p.n, j) for j in range(1, p.n + 1)]
    )
    parity = tuple(PauliVector.z_set(p.n, s) for s in p.sets)
    return GeneratingSet(n=p.n, single_qubit=single, parity=parity, parity_set=p)
