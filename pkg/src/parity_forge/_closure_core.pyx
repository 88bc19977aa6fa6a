# cython: language_level=3
"""Compiled closure kernel; same API as ``_closure_py``.

Vectors are packed 2n-bit integers ``x | z << n``. The scan over all
single-vector extensions of the single-qubit set is the hot loop of the
toolkit (4^n - 1 inner closures), hence the compiled variant.
"""

from array import array

from libc.stdlib cimport free, malloc

cdef extern from *:
    int __builtin_popcountll(unsigned long long x)

BACKEND = "cython"


def closure_reach(int n, list gens):
    """Breadth-first commutator closure with parent bookkeeping.

    Mirrors ``_closure_py.closure_reach``: returns ``(order, parent_gen,
    parent_prev)`` with deterministic parents (queue in discovery order,
    generators in fixed input order).
    """
    cdef long long size = 1LL << (2 * n)
    cdef unsigned long long mask = (1ULL << n) - 1
    cdef int ngens = len(gens)
    cdef int gi
    cdef long long head, tail, v, w
    cdef unsigned long long vx, vz

    parent_gen = array("i", bytes(4 * size))
    parent_prev = array("q", bytes(8 * size))
    order = array("q", bytes(8 * size))
    cdef int[::1] pg = parent_gen
    cdef long long[::1] pp = parent_prev
    cdef long long[::1] q = order

    cdef unsigned long long *cgen = <unsigned long long *> malloc(ngens * sizeof(unsigned long long))
    cdef unsigned long long *cgx = <unsigned long long *> malloc(ngens * sizeof(unsigned long long))
    cdef unsigned long long *cgz = <unsigned long long *> malloc(ngens * sizeof(unsigned long long))
    if cgen == NULL or cgx == NULL or cgz == NULL:
        free(cgen); free(cgx); free(cgz)
        raise MemoryError()

    try:
        for gi in range(size):
            pg[gi] = -2
        for gi in range(ngens):
            cgen[gi] = <unsigned long long> gens[gi]
            cgx[gi] = cgen[gi] & mask
            cgz[gi] = cgen[gi] >> n

        tail = 0
        for gi in range(ngens):
            v = <long long> cgen[gi]
            if v != 0 and pg[v] == -2:
                pg[v] = -1
                pp[v] = gi
                q[tail] = v
                tail += 1

        head = 0
        while head < tail:
            v = q[head]
            head += 1
            vx = (<unsigned long long> v) & mask
            vz = (<unsigned long long> v) >> n
            for gi in range(ngens):
                if (__builtin_popcountll(cgx[gi] & vz)
                        + __builtin_popcountll(cgz[gi] & vx)) & 1:
                    w = v ^ <long long> cgen[gi]
                    if w != 0 and pg[w] == -2:
                        pg[w] = gi
                        pp[w] = v
                        q[tail] = w
                        tail += 1
    finally:
        free(cgen); free(cgx); free(cgz)

    return order[:tail], parent_gen, parent_prev


def closure_count(int n, list gens, long long stop_at=0):
    """Size of the closure; shortcuts at ``stop_at`` vectors when positive."""
    cdef long long size = 1LL << (2 * n)
    cdef unsigned long long mask = (1ULL << n) - 1
    cdef int ngens = len(gens)
    cdef int gi
    cdef long long head, tail, v, w
    cdef unsigned long long vx, vz

    seen_buf = bytearray(size)
    queue_buf = array("q", bytes(8 * size))
    cdef unsigned char[::1] seen = seen_buf
    cdef long long[::1] q = queue_buf

    cdef unsigned long long *cgen = <unsigned long long *> malloc(ngens * sizeof(unsigned long long))
    cdef unsigned long long *cgx = <unsigned long long *> malloc(ngens * sizeof(unsigned long long))
    cdef unsigned long long *cgz = <unsigned long long *> malloc(ngens * sizeof(unsigned long long))
    if cgen == NULL or cgx == NULL or cgz == NULL:
        free(cgen); free(cgx); free(cgz)
        raise MemoryError()

    try:
        for gi in range(ngens):
            cgen[gi] = <unsigned long long> gens[gi]
            cgx[gi] = cgen[gi] & mask
            cgz[gi] = cgen[gi] >> n
        tail = 0
        for gi in range(ngens):
            v = <long long> cgen[gi]
            if v != 0 and not seen[v]:
                seen[v] = 1
                q[tail] = v
                tail += 1
        head = 0
        while head < tail:
            if stop_at > 0 and tail >= stop_at:
                return tail
            v = q[head]
            head += 1
            vx = (<unsigned long long> v) & mask
            vz = (<unsigned long long> v) >> n
            for gi in range(ngens):
                if (__builtin_popcountll(cgx[gi] & vz)
                        + __builtin_popcountll(cgz[gi] & vx)) & 1:
                    w = v ^ <long long> cgen[gi]
                    if w != 0 and not seen[w]:
                        seen[w] = 1
                        q[tail] = w
                        tail += 1
    finally:
        free(cgen); free(cgx); free(cgz)
    return tail


def scan_single_extensions(int n):
    """Closure size of sq + {candidate} for every non-zero candidate.

    Returns ``(all_fail, max_count)``; the per-candidate search shortcuts as
    soon as it reaches the full 4^n - 1 count.
    """
    cdef long long size = 1LL << (2 * n)
    cdef unsigned long long mask = (1ULL << n) - 1
    cdef long long full = size - 1
    cdef int ngens = 2 * n + 1
    cdef int gi
    cdef long long cand, head, count, v, w, max_count = 0
    cdef unsigned long long vx, vz
    cdef bint all_fail = True

    stamp_buf = array("q", bytes(8 * size))
    queue_buf = array("q", bytes(8 * size))
    cdef long long[::1] stamp = stamp_buf
    cdef long long[::1] q = queue_buf

    cdef unsigned long long *cgen = <unsigned long long *> malloc(ngens * sizeof(unsigned long long))
    cdef unsigned long long *cgx = <unsigned long long *> malloc(ngens * sizeof(unsigned long long))
    cdef unsigned long long *cgz = <unsigned long long *> malloc(ngens * sizeof(unsigned long long))
    if cgen == NULL or cgx == NULL or cgz == NULL:
        free(cgen); free(cgx); free(cgz)
        raise MemoryError()

    try:
        for gi in range(size):
            stamp[gi] = 0
        for gi in range(2 * n):
            cgen[gi] = 1ULL << gi

        for cand in range(1, size):
            cgen[2 * n] = <unsigned long long> cand
            for gi in range(ngens):
                cgx[gi] = cgen[gi] & mask
                cgz[gi] = cgen[gi] >> n
            count = 0
            for gi in range(ngens):
                v = <long long> cgen[gi]
                if stamp[v] != cand:
                    stamp[v] = cand
                    q[count] = v
                    count += 1
            head = 0
            while head < count and count < full:
                v = q[head]
                head += 1
                vx = (<unsigned long long> v) & mask
                vz = (<unsigned long long> v) >> n
                for gi in range(ngens):
                    if (__builtin_popcountll(cgx[gi] & vz)
                            + __builtin_popcountll(cgz[gi] & vx)) & 1:
                        w = v ^ <long long> cgen[gi]
                        if w != 0 and stamp[w] != cand:
                            stamp[w] = cand
                            q[count] = w
                            count += 1
            if count >= full:
                all_fail = False
            if count > max_count:
                max_count = count
    finally:
        free(cgen); free(cgx); free(cgz)

    return bool(all_fail), max_count
