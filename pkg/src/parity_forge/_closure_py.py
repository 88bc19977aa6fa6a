"""Pure-Python closure kernel.

Vectors are packed 2n-bit integers ``x | z << n``. This module mirrors the
API of the compiled extension ``_closure_core`` and is selected at import
time when that extension is unavailable.
"""

from __future__ import annotations

from array import array

BACKEND = "python"


def closure_reach(n: int, gens: list[int]):
    """Breadth-first commutator closure of ``gens``.

    Returns ``(order, parent_gen, parent_prev)`` where ``order`` lists the
    reachable non-zero vectors in discovery order (seeded generators first),
    ``parent_gen[v]`` is the index of the generator whose adjoint produced
    ``v`` (-1 for a seed) and ``parent_prev[v]`` the vector it acted on.
    Parents are deterministic: queue in discovery order, generators in the
    fixed input order.
    """
    size = 1 << (2 * n)
    mask = (1 << n) - 1
    parent_gen = array("i", [-2]) * size
    parent_prev = array("q", [0]) * size
    order = array("q")

    for gi, g in enumerate(gens):
        if g and parent_gen[g] == -2:
            parent_gen[g] = -1
            parent_prev[g] = gi
            order.append(g)

    gx = [g & mask for g in gens]
    gz = [g >> n for g in gens]
    ngens = len(gens)

    head = 0
    while head < len(order):
        v = order[head]
        head += 1
        vx = v & mask
        vz = v >> n
        for gi in range(ngens):
            if ((gx[gi] & vz).bit_count() + (gz[gi] & vx).bit_count()) & 1:
                w = v ^ gens[gi]
                if w and parent_gen[w] == -2:
                    parent_gen[w] = gi
                    parent_prev[w] = v
                    order.append(w)
    return order, parent_gen, parent_prev


def closure_count(n: int, gens: list[int], stop_at: int = 0) -> int:
    """Size of the closure without parent bookkeeping.

    When ``stop_at`` is positive the search shortcuts as soon as that many
    vectors have been reached.
    """
    size = 1 << (2 * n)
    mask = (1 << n) - 1
    seen = bytearray(size)
    order = array("q")
    for g in gens:
        if g and not seen[g]:
            seen[g] = 1
            order.append(g)
    gx = [g & mask for g in gens]
    gz = [g >> n for g in gens]
    ngens = len(gens)

    head = 0
    while head < len(order):
        if stop_at and len(order) >= stop_at:
            return len(order)
        v = order[head]
        head += 1
        vx = v & mask
        vz = v >> n
        for gi in range(ngens):
            if ((gx[gi] & vz).bit_count() + (gz[gi] & vx).bit_count()) & 1:
                w = v ^ gens[gi]
                if w and not seen[w]:
                    seen[w] = 1
                    order.append(w)
    return len(order)


def scan_single_extensions(n: int):
    """Closure sizes of the single-qubit set extended by each non-zero vector.

    Returns ``(all_fail, max_count)`` over every candidate in F_2^{2n}\\{0}:
    ``all_fail`` is True when no candidate reaches the full 4^n - 1 count.
    A visited-stamp array is reused across candidates; each inner search
    shortcuts as soon as it would disprove (it never does for odd n).
    """
    size = 1 << (2 * n)
    mask = (1 << n) - 1
    full = size - 1
    sq = [1 << i for i in range(n)] + [1 << (n + i) for i in range(n)]

    stamp = array("q", [0]) * size
    queue = array("q", [0]) * size
    all_fail = True
    max_count = 0

    for cand in range(1, size):
        gens = sq + [cand]
        gx = [g & mask for g in gens]
        gz = [g >> n for g in gens]
        ngens = len(gens)
        count = 0
        for g in gens:
            if stamp[g] != cand:
                stamp[g] = cand
                queue[count] = g
                count += 1
        head = 0
        while head < count and count < full:
            v = queue[head]
            head += 1
            vx = v & mask
            vz = v >> n
            for gi in range(ngens):
                if ((gx[gi] & vz).bit_count() + (gz[gi] & vx).bit_count()) & 1:
                    w = v ^ gens[gi]
                    if w and stamp[w] != cand:
                        stamp[w] = cand
                        queue[count] = w
                        count += 1
        if count >= full:
            all_fail = False
        if count > max_count:
            max_count = count
    return all_fail, max_count
