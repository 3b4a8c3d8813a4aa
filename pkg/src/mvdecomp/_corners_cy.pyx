# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled corner-search kernel.

Same functions and semantics as mvdecomp._corners_py, operating on
C-contiguous int64 arrays. The search recursion runs without the GIL; rows
are deduplicated in a small open-addressing hash set keyed by FNV-1a.
"""

from libc.stdint cimport int64_t, uint64_t, uint8_t
from libc.stdlib cimport malloc, realloc, free
from libc.string cimport memcpy, memcmp


cdef struct CandSet:
    int64_t* arena
    Py_ssize_t count
    Py_ssize_t arena_cap
    Py_ssize_t* slots
    Py_ssize_t nslots
    int n


cdef inline uint64_t _hash_row(const int64_t* row, int n) nogil:
    cdef uint64_t h = <uint64_t>0xcbf29ce484222325
    cdef int c
    for c in range(n):
        h ^= <uint64_t>row[c]
        h *= <uint64_t>0x100000001b3
    return h


cdef int _candset_init(CandSet* s, int n) nogil:
    cdef Py_ssize_t i
    s.n = n
    s.count = 0
    s.arena_cap = 256
    s.nslots = 1024
    s.arena = <int64_t*>malloc(s.arena_cap * n * sizeof(int64_t))
    s.slots = <Py_ssize_t*>malloc(s.nslots * sizeof(Py_ssize_t))
    if s.arena == NULL or s.slots == NULL:
        return -1
    for i in range(s.nslots):
        s.slots[i] = -1
    return 0


cdef void _candset_free(CandSet* s) nogil:
    free(s.arena)
    free(s.slots)


cdef int _candset_grow_slots(CandSet* s) nogil:
    cdef Py_ssize_t newn = s.nslots * 2
    cdef Py_ssize_t* fresh = <Py_ssize_t*>malloc(newn * sizeof(Py_ssize_t))
    cdef Py_ssize_t i, idx
    if fresh == NULL:
        return -1
    for i in range(newn):
        fresh[i] = -1
    for i in range(s.count):
        idx = <Py_ssize_t>(_hash_row(s.arena + i * s.n, s.n) & <uint64_t>(newn - 1))
        while fresh[idx] != -1:
            idx = (idx + 1) & (newn - 1)
        fresh[idx] = i
    free(s.slots)
    s.slots = fresh
    s.nslots = newn
    return 0


cdef int _candset_insert(CandSet* s, const int64_t* row) nogil:
    cdef Py_ssize_t idx
    cdef int64_t* grown
    # keep the load factor under 0.7 before probing
    if (s.count + 1) * 10 >= s.nslots * 7:
        if _candset_grow_slots(s) < 0:
            return -1
    idx = <Py_ssize_t>(_hash_row(row, s.n) & <uint64_t>(s.nslots - 1))
    while s.slots[idx] != -1:
        if memcmp(s.arena + s.slots[idx] * s.n, row, s.n * sizeof(int64_t)) == 0:
            return 0
        idx = (idx + 1) & (s.nslots - 1)
    if s.count == s.arena_cap:
        grown = <int64_t*>realloc(s.arena, s.arena_cap * 2 * s.n * sizeof(int64_t))
        if grown == NULL:
            return -1
        s.arena = grown
        s.arena_cap *= 2
    memcpy(s.arena + s.count * s.n, row, s.n * sizeof(int64_t))
    s.slots[idx] = s.count
    s.count += 1
    return 0


cdef inline int _lex_less(const int64_t* a, const int64_t* b, int n) nogil:
    cdef int c
    for c in range(n):
        if a[c] != b[c]:
            return a[c] < b[c]
    return 0


cdef inline int _divides(const int64_t* a, const int64_t* b, int n) nogil:
    cdef int c
    for c in range(n):
        if a[c] > b[c]:
            return 0
    return 1


cdef Py_ssize_t _sort_minimalize(int64_t* buf, Py_ssize_t count, int n,
                                 int64_t* tmp) nogil:
    """Insertion-sort rows ascending, drop rows divisible by an earlier kept
    row, reverse to descending. Returns the surviving row count."""
    cdef Py_ssize_t i, j, m, a, b
    cdef int c
    cdef int dominated
    for i in range(1, count):
        memcpy(tmp, buf + i * n, n * sizeof(int64_t))
        j = i - 1
        while j >= 0 and _lex_less(tmp, buf + j * n, n):
            memcpy(buf + (j + 1) * n, buf + j * n, n * sizeof(int64_t))
            j -= 1
        memcpy(buf + (j + 1) * n, tmp, n * sizeof(int64_t))
    m = 0
    for i in range(count):
        dominated = 0
        for j in range(m):
            if _divides(buf + j * n, buf + i * n, n):
                dominated = 1
                break
        if not dominated:
            if m != i:
                memcpy(buf + m * n, buf + i * n, n * sizeof(int64_t))
            m += 1
    a = 0
    b = m - 1
    while a < b:
        memcpy(tmp, buf + a * n, n * sizeof(int64_t))
        memcpy(buf + a * n, buf + b * n, n * sizeof(int64_t))
        memcpy(buf + b * n, tmp, n * sizeof(int64_t))
        a += 1
        b -= 1
    return m


cdef int _search(const int64_t* rows, Py_ssize_t count, int dim, int n,
                 int target, bint lex_first, bint prune, bint eliminate,
                 CandSet* out) nogil:
    cdef uint64_t mask, full
    cdef Py_ssize_t r, idx, m, pidx
    cdef int c, active, status
    cdef int64_t lo, hi, v
    cdef int64_t* left
    cdef int64_t* tmp
    cdef const int64_t* pivot
    cdef const int64_t* rest

    if count == 0:
        return 0
    if prune:
        full = ((<uint64_t>1) << n) - 1
        mask = 0
        for r in range(count):
            for c in range(n):
                if rows[r * n + c] != 0:
                    mask |= (<uint64_t>1) << c
        if mask != full:
            return 0
        if count < n - dim:
            return 0
    if dim >= target:
        if dim == target:
            for r in range(count):
                if _candset_insert(out, rows + r * n) < 0:
                    return -1
        return 0
    if count == 1:
        return 0
    if eliminate:
        active = 0
        for c in range(n):
            lo = rows[c]
            hi = rows[c]
            for r in range(1, count):
                v = rows[r * n + c]
                if v < lo:
                    lo = v
                elif v > hi:
                    hi = v
            if lo != hi:
                active += 1
        if active <= 2:
            # two effective variables: target-dimension generators are
            # exactly the lcms of consecutive stored generators
            if dim + 1 == target:
                tmp = <int64_t*>malloc(n * sizeof(int64_t))
                if tmp == NULL:
                    return -1
                for r in range(count - 1):
                    for c in range(n):
                        lo = rows[r * n + c]
                        v = rows[(r + 1) * n + c]
                        tmp[c] = lo if lo > v else v
                    if _candset_insert(out, tmp) < 0:
                        free(tmp)
                        return -1
                free(tmp)
            return 0
    pidx = 0 if lex_first else count - 1
    pivot = rows + pidx * n
    left = <int64_t*>malloc(((count - 1) * n + n) * sizeof(int64_t))
    if left == NULL:
        return -1
    tmp = left + (count - 1) * n
    idx = 0
    for r in range(count):
        if r == pidx:
            continue
        for c in range(n):
            v = rows[r * n + c]
            left[idx * n + c] = v if v > pivot[c] else pivot[c]
        idx += 1
    m = _sort_minimalize(left, count - 1, n, tmp)
    status = _search(left, m, dim + 1, n, target, lex_first, prune, eliminate, out)
    free(left)
    if status < 0:
        return -1
    rest = rows + n if lex_first else rows
    return _search(rest, count - 1, dim, n, target, lex_first, prune, eliminate, out)


def collect_candidates(const int64_t[:, ::1] rows, int start_dim,
                       bint lex_first, bint prune, bint eliminate):
    """Exponent rows appearing as generators of splitting-tree nodes of
    dimension n-1, as a list of tuples."""
    cdef Py_ssize_t count = rows.shape[0]
    cdef int n = <int>rows.shape[1]
    cdef CandSet out
    cdef int status
    cdef Py_ssize_t i
    cdef int c
    if n >= 64:
        raise ValueError("compiled kernel supports at most 63 variables")
    if count == 0:
        return []
    if _candset_init(&out, n) < 0:
        raise MemoryError()
    with nogil:
        status = _search(&rows[0, 0], count, start_dim, n, n - 1,
                         lex_first, prune, eliminate, &out)
    if status < 0:
        _candset_free(&out)
        raise MemoryError()
    result = [
        tuple([out.arena[i * n + c] for c in range(n)]) for i in range(out.count)
    ]
    _candset_free(&out)
    return result


def filter_corners(const int64_t[:, ::1] cands, const int64_t[:, ::1] gens):
    """Candidates that are maximal corners of the ideal given by gens."""
    cdef Py_ssize_t k = cands.shape[0]
    cdef Py_ssize_t r = gens.shape[0]
    cdef int n = <int>cands.shape[1]
    cdef uint8_t* keep = <uint8_t*>malloc(k if k else 1)
    cdef Py_ssize_t i, g
    cdef int c, b, ok, inside, squarefree
    if keep == NULL:
        raise MemoryError()
    with nogil:
        for i in range(k):
            keep[i] = 0
            ok = 1
            squarefree = 1
            for c in range(n):
                if cands[i, c] == 0:
                    ok = 0
                    break
                if cands[i, c] != 1:
                    squarefree = 0
            if not ok:
                continue
            if squarefree:
                keep[i] = 1
                continue
            inside = 0
            for g in range(r):
                inside = 1
                for c in range(n):
                    if gens[g, c] > cands[i, c] - 1:
                        inside = 0
                        break
                if inside:
                    break
            if inside:
                continue
            ok = 1
            for b in range(n):
                inside = 0
                for g in range(r):
                    inside = 1
                    for c in range(n):
                        if gens[g, c] > cands[i, c] - 1 + (1 if c == b else 0):
                            inside = 0
                            break
                    if inside:
                        break
                if not inside:
                    ok = 0
                    break
            keep[i] = ok
    result = [
        tuple([cands[i, c] for c in range(n)]) for i in range(k) if keep[i]
    ]
    free(keep)
    return result


def dominated_mask(const int64_t[:, ::1] rows):
    """mask[i] is True when another row generates a smaller-or-equal
    irreducible ideal; exact duplicates keep only their first copy."""
    cdef Py_ssize_t k = rows.shape[0]
    cdef int n = <int>rows.shape[1]
    cdef uint8_t* mask = <uint8_t*>malloc(k if k else 1)
    cdef Py_ssize_t i, j
    cdef int c, dominated, equal
    if mask == NULL:
        raise MemoryError()
    with nogil:
        for i in range(k):
            mask[i] = 0
            for j in range(k):
                if i == j:
                    continue
                dominated = 1
                equal = 1
                for c in range(n):
                    if rows[i, c] != rows[j, c]:
                        equal = 0
                    if rows[j, c] > 0 and not (0 < rows[i, c] <= rows[j, c]):
                        dominated = 0
                        break
                if dominated and (not equal or j < i):
                    mask[i] = 1
                    break
    result = [bool(mask[i]) for i in range(k)]
    free(mask)
    return result


def batch_contains(const int64_t[:, ::1] points, const int64_t[:, ::1] gens):
    """Ideal membership for each point."""
    cdef Py_ssize_t m = points.shape[0]
    cdef Py_ssize_t r = gens.shape[0]
    cdef int n = <int>points.shape[1]
    cdef uint8_t* hit = <uint8_t*>malloc(m if m else 1)
    cdef Py_ssize_t i, g
    cdef int c, inside
    if hit == NULL:
        raise MemoryError()
    with nogil:
        for i in range(m):
            hit[i] = 0
            for g in range(r):
                inside = 1
                for c in range(n):
                    if gens[g, c] > points[i, c]:
                        inside = 0
                        break
                if inside:
                    hit[i] = 1
                    break
    result = [bool(hit[i]) for i in range(m)]
    free(hit)
    return result


def points_in_intersection(const int64_t[:, ::1] points,
                           const int64_t[:, ::1] comps):
    """For each point: membership in every irreducible ideal of comps."""
    cdef Py_ssize_t m = points.shape[0]
    cdef Py_ssize_t k = comps.shape[0]
    cdef int n = <int>points.shape[1]
    cdef uint8_t* hit = <uint8_t*>malloc(m if m else 1)
    cdef Py_ssize_t i, j
    cdef int c, covered
    if hit == NULL:
        raise MemoryError()
    with nogil:
        for i in range(m):
            hit[i] = 1
            for j in range(k):
                covered = 0
                for c in range(n):
                    if comps[j, c] > 0 and points[i, c] >= comps[j, c]:
                        covered = 1
                        break
                if not covered:
                    hit[i] = 0
                    break
    result = [bool(hit[i]) for i in range(m)]
    free(hit)
    return result
