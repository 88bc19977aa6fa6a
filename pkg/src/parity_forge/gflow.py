"""Measurement-based resource graphs and gflow verification.

The resource family wires n horizontal cluster chains of length 2l to one
column of parity vertices per layer (one vertex for even n, two for odd n,
the odd case splitting the chains into two overlapping halves). Parity
vertices are measured in the YZ plane, chain vertices in the XY plane; the
input column is the first column of chain vertices and the output column
the last.

``verify_gflow`` is a generic checker for the five correction conditions on
arbitrary open graphs, which the tests also point at deliberately broken
instances.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import InternalError, InvalidInputError

PLANES = ("XY", "XZ", "YZ")


@dataclass(frozen=True)
class OpenGraph:
    """A graph with input/output vertex sets and measurement-plane labels.

    Vertices are 1..num_vertices; the adjacency is symmetric and
    irreflexive; planes are defined exactly on the measured (non-output)
    vertices.
    """

    num_vertices: int
    adjacency: Mapping[int, frozenset[int]]
    inputs: frozenset[int]
    outputs: frozenset[int]
    planes: Mapping[int, str]

    def __init__(self, num_vertices, adjacency, inputs, outputs, planes) -> None:
        if num_vertices < 1:
            raise InvalidInputError("graph needs at least one vertex")
        vertices = range(1, num_vertices + 1)
        adj = {v: frozenset(adjacency.get(v, ())) for v in vertices}
        for v, nbrs in adj.items():
            if v in nbrs:
                raise InvalidInputError(f"vertex {v} is its own neighbour")
            for w in nbrs:
                if not 1 <= w <= num_vertices:
                    raise InvalidInputError(f"neighbour {w} of {v} out of range")
                if v not in adj[w]:
                    raise InvalidInputError(f"adjacency not symmetric at ({v}, {w})")
        inputs = frozenset(inputs)
        outputs = frozenset(outputs)
        for v in inputs | outputs:
            if not 1 <= v <= num_vertices:
                raise InvalidInputError(f"input/output vertex {v} out of range")
        planes = dict(planes)
        measured = set(vertices) - outputs
        if set(planes) != measured:
            raise InvalidInputError(
                "planes must be defined exactly on the non-output vertices"
            )
        for v, plane in planes.items():
            if plane not in PLANES:
                raise InvalidInputError(f"unknown plane {plane!r} at vertex {v}")
        object.__setattr__(self, "num_vertices", num_vertices)
        object.__setattr__(self, "adjacency", adj)
        object.__setattr__(self, "inputs", inputs)
        object.__setattr__(self, "outputs", outputs)
        object.__setattr__(self, "planes", planes)

    @property
    def vertices(self) -> range:
        return range(1, self.num_vertices + 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def edges(self) -> list[tuple[int, int]]:
        return [(v, w) for v in self.vertices for w in self.adjacency[v] if v < w]

    def without_edge(self, u: int, v: int) -> "OpenGraph":
        """Copy with one edge removed (negative-control helper)."""
        if v not in self.adjacency[u]:
            raise InvalidInputError(f"no edge between {u} and {v}")
        adj = dict(self.adjacency)
        adj[u] = adj[u] - {v}
        adj[v] = adj[v] - {u}
        return OpenGraph(self.num_vertices, adj, self.inputs, self.outputs, self.planes)

    def with_plane(self, v: int, plane: str) -> "OpenGraph":
        """Copy with one measurement plane replaced (negative-control helper)."""
        planes = dict(self.planes)
        if v not in planes:
            raise InvalidInputError(f"vertex {v} is not measured")
        planes[v] = plane
        return OpenGraph(self.num_vertices, self.adjacency, self.inputs, self.outputs, planes)


@dataclass(frozen=True)
class GFlow:
    """Correction map plus the total vertex order used for the conditions."""

    g: Mapping[int, frozenset[int]]
    order: tuple[int, ...]

    def __init__(self, g, order) -> None:
        object.__setattr__(
            self, "g", {int(v): frozenset(s) for v, s in dict(g).items()}
        )
        object.__setattr__(self, "order", tuple(order))


@dataclass(frozen=True)
class GFlowCheck:
    ok: bool
    violations: tuple[tuple[int, int], ...]  # (vertex, condition 1..5)


def odd_neighborhood(graph: OpenGraph, k: Iterable[int]) -> frozenset[int]:
    """Vertices with an odd number of neighbours inside K."""
    k = frozenset(k)
    return frozenset(
        v for v in graph.vertices if len(graph.adjacency[v] & k) % 2 == 1
    )


def verify_gflow(graph: OpenGraph, flow: GFlow) -> GFlowCheck:
    """Check the five gflow conditions for every measured vertex.

    Violations are reported exhaustively, sorted by vertex then condition:
    (1) corrections not earlier than the vertex, (2) odd neighbourhood of
    the corrections not earlier, (3)-(5) the plane-specific membership
    constraints on g(v) and Odd(g(v)).
    """
    measured = sorted(set(graph.vertices) - graph.outputs)
    position = {v: i for i, v in enumerate(flow.order)}
    if set(position) != set(graph.vertices):
        raise InvalidInputError("flow order must list every vertex exactly once")
    allowed = set(graph.vertices) - graph.inputs
    violations: list[tuple[int, int]] = []
    for v in measured:
        if v not in flow.g:
            raise InvalidInputError(f"correction map undefined at vertex {v}")
        gv = flow.g[v]
        if not gv <= allowed:
            raise InvalidInputError(
                f"correction set of {v} touches input vertices {sorted(gv - allowed)}"
            )
        odd = odd_neighborhood(graph, gv)
        if any(position[w] <= position[v] for w in gv if w != v):
            violations.append((v, 1))
        if any(position[w] <= position[v] for w in odd if w != v):
            violations.append((v, 2))
        plane = graph.planes[v]
        if plane == "XY":
            if v in gv or v not in odd:
                violations.append((v, 3))
        elif plane == "XZ":
            if v not in gv or v not in odd:
                violations.append((v, 4))
        else:  # YZ
            if v not in gv or v in odd:
                violations.append((v, 5))
    violations.sort()
    return GFlowCheck(ok=not violations, violations=tuple(violations))


def _check_family_args(n: int, l: int) -> None:
    if n < 2:
        raise InvalidInputError(f"need at least 2 chains, got n = {n}")
    if l < 1:
        raise InvalidInputError(f"need at least one layer, got l = {l}")


def build_resource_graph(n: int, l: int) -> OpenGraph:
    """The layered resource graph on l(2n+1) (even n) or l(2n+2) (odd n) vertices."""
    _check_family_args(n, l)
    if n % 2 == 0:
        return _build_even(n, l)
    return _build_odd(n, l)


def _build_even(n: int, l: int) -> OpenGraph:
    period = 2 * n + 1
    total = l * period
    adj: dict[int, set[int]] = {v: set() for v in range(1, total + 1)}
    for j in range(l):
        base = j * period
        for v in range(base + 2, base + n + 2):
            # red hub of the column and the forward chain edge
            adj[v].add(base + 1)
            adj[base + 1].add(v)
            adj[v].add(v + n)
            adj[v + n].add(v)
            if j >= 1:
                adj[v].add(v - n - 1)
                adj[v - n - 1].add(v)
    planes = {}
    outputs = frozenset(range((l - 1) * period + n + 2, total + 1))
    for v in range(1, total + 1):
        if v in outputs:
            continue
        planes[v] = "YZ" if (v - 1) % period == 0 else "XY"
    graph = OpenGraph(
        total, adj, frozenset(range(2, n + 2)), outputs, planes
    )
    _assert_family_tables_even(graph, n, l)
    return graph


def _assert_family_tables_even(graph: OpenGraph, n: int, l: int) -> None:
    period = 2 * n + 1
    for j in range(l):
        base = j * period
        expect: dict[int, set[int]] = {}
        expect[base + 1] = set(range(base + 2, base + n + 2))
        for i in range(2, n + 2):
            v = base + i
            expect[v] = {1, v + n} if j == 0 else {v - n - 1, base + 1, v + n}
        for i in range(n + 2, 2 * n + 2):
            v = base + i
            expect[v] = {v - n} if j == l - 1 else {v - n, v + n + 1}
        for v, nbrs in expect.items():
            if graph.adjacency[v] != frozenset(nbrs):
                raise InternalError(f"even-family table mismatch at vertex {v}")


def _build_odd(n: int, l: int) -> OpenGraph:
    period = 2 * n + 2
    half = (n + 1) // 2
    total = l * period
    adj: dict[int, set[int]] = {v: set() for v in range(1, total + 1)}
    for j in range(l):
        base = j * period
        red_a, red_b = base + 1, base + 2
        for b in range(1, n + 1):
            v = base + 2 + b  # chain vertex of base qubit b in this column
            if b <= half:
                adj[v].add(red_a)
                adj[red_a].add(v)
            if b >= half:
                adj[v].add(red_b)
                adj[red_b].add(v)
            adj[v].add(v + n)
            adj[v + n].add(v)
            if j >= 1:
                adj[v].add(v - n - 2)
                adj[v - n - 2].add(v)
    planes = {}
    outputs = frozenset(range((l - 1) * period + n + 3, total + 1))
    for v in range(1, total + 1):
        if v in outputs:
            continue
        planes[v] = "YZ" if (v - 1) % period in (0, 1) else "XY"
    graph = OpenGraph(
        total, adj, frozenset(range(3, n + 3)), outputs, planes
    )
    _assert_family_tables_odd(graph, n, l)
    return graph


def _assert_family_tables_odd(graph: OpenGraph, n: int, l: int) -> None:
    """Re-derive the per-vertex neighbour table and compare.

    The two parity rows are stated so that the second one includes the
    shared chain (making the table symmetric with the chain-vertex rows).
    """
    period = 2 * n + 2
    half = (n + 1) // 2
    for j in range(l):
        base = j * period
        expect: dict[int, set[int]] = {}
        expect[base + 1] = set(range(base + 3, base + 2 + half + 1))
        expect[base + 2] = set(range(base + 2 + half, base + 2 + n + 1))
        for i in range(3, n + 3):
            v = base + i
            nbrs = {v + n}
            if i <= 1 + half:
                nbrs.add(base + 1)
            if i >= 2 + half:
                nbrs.add(base + 2)
            if i == 2 + half:
                nbrs.add(base + 1)
            if j >= 1:
                nbrs.add(v - n - 2)
            expect[v] = nbrs
        for i in range(n + 3, 2 * n + 3):
            v = base + i
            expect[v] = {v - n} if j == l - 1 else {v - n, v + n + 2}
        for v, nbrs in expect.items():
            if graph.adjacency[v] != frozenset(nbrs):
                raise InternalError(f"odd-family table mismatch at vertex {v}")


def canonical_gflow(n: int, l: int) -> GFlow:
    """The family's correction map: parity vertices correct themselves and
    each chain vertex defers to its right-hand neighbour; numeric order."""
    _check_family_args(n, l)
    g: dict[int, frozenset[int]] = {}
    if n % 2 == 0:
        period = 2 * n + 1
        reds = {1}
        chain_hi = n + 1
        forward_far = n + 1
    else:
        period = 2 * n + 2
        reds = {1, 2}
        chain_hi = n + 2
        forward_far = n + 2
    total = l * period
    outputs = set(range((l - 1) * period + chain_hi + 1, total + 1))
    for v in range(1, total + 1):
        if v in outputs:
            continue
        i = (v - 1) % period + 1
        if i in reds:
            g[v] = frozenset({v})
        elif i <= chain_hi:
            g[v] = frozenset({v + n})
        else:
            g[v] = frozenset({v + forward_far})
    return GFlow(g, tuple(range(1, total + 1)))


def graph_to_json(graph: OpenGraph, n: int | None = None, l: int | None = None) -> dict:
    data: dict = {}
    if n is not None:
        data["n"] = n
    if l is not None:
        data["l"] = l
    data["adjacency"] = {str(v): sorted(graph.adjacency[v]) for v in graph.vertices}
    data["inputs"] = sorted(graph.inputs)
    data["outputs"] = sorted(graph.outputs)
    data["planes"] = {str(v): graph.planes[v] for v in sorted(graph.planes)}
    return data


def graph_from_json(data: dict) -> OpenGraph:
    try:
        adjacency = {int(v): [int(w) for w in ws] for v, ws in data["adjacency"].items()}
        inputs = [int(v) for v in data["inputs"]]
        outputs = [int(v) for v in data["outputs"]]
        planes = {int(v): str(p) for v, p in data["planes"].items()}
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInputError(f"malformed open-graph JSON: {exc}") from exc
    num = max(adjacency) if adjacency else 0
    return OpenGraph(num, adjacency, inputs, outputs, planes)
