# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled kernel: left-weighted normal form and crossing counts.

Behaviourally identical to _garside_py; see that module for the algorithm
notes and the internal conventions.  _kernel.py prefers this lane whenever
the extension imports.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memmove


cdef inline bint _is_identity(int* f, int n) nogil:
    cdef int x
    for x in range(n):
        if f[x] != x:
            return False
    return True


cdef inline bint _is_half_twist(int* f, int n) nogil:
    cdef int x
    for x in range(n):
        if f[x] != n - 1 - x:
            return False
    return True


cdef bint _left_weight_pair(int* u, int* v, int* pos, int n) nogil:
    cdef int x, i, j, tmp
    cdef bint changed = False
    for x in range(n):
        pos[u[x]] = x
    while True:
        j = -1
        for i in range(n - 1):
            if v[i] > v[i + 1] and pos[i] < pos[i + 1]:
                j = i
                break
        if j < 0:
            return changed
        u[pos[j]] = j + 1
        u[pos[j + 1]] = j
        tmp = pos[j]; pos[j] = pos[j + 1]; pos[j + 1] = tmp
        tmp = v[j]; v[j] = v[j + 1]; v[j + 1] = tmp
        changed = True


def left_normal_form(int n, letters):
    """Return (inf, factors): same contract as the pure lane."""
    lets = list(letters)
    cdef Py_ssize_t count = len(lets)
    if n == 1 or count == 0:
        return 0, []

    cdef int* fac = <int*> malloc(count * n * sizeof(int))
    cdef int* pos = <int*> malloc(n * sizeof(int))
    cdef int* buf = <int*> malloc(n * sizeof(int))
    if fac == NULL or pos == NULL or buf == NULL:
        free(fac); free(pos); free(buf)
        raise MemoryError()

    cdef int total_neg = 0
    cdef Py_ssize_t t, keep
    cdef int k, i, x, y
    for t in range(count):
        if <int> lets[t] < 0:
            total_neg += 1
    cdef int p = -total_neg
    cdef int neg_after = total_neg
    cdef int* f
    for t in range(count):
        k = lets[t]
        i = (k if k > 0 else -k) - 1
        f = fac + t * n
        if k < 0:
            neg_after -= 1
            for x in range(n):
                y = n - 1 - x
                if y == i:
                    y = i + 1
                elif y == i + 1:
                    y = i
                f[x] = y
        else:
            for x in range(n):
                f[x] = x
            f[i] = i + 1
            f[i + 1] = i
        if neg_after & 1:
            for x in range(n):
                buf[x] = n - 1 - f[n - 1 - x]
            for x in range(n):
                f[x] = buf[x]

    cdef Py_ssize_t m = count
    cdef bint changed = True
    while changed:
        changed = False
        with nogil:
            for t in range(m - 1):
                if _left_weight_pair(fac + t * n, fac + (t + 1) * n, pos, n):
                    changed = True
        keep = 0
        for t in range(m):
            if not _is_identity(fac + t * n, n):
                if keep != t:
                    memmove(fac + keep * n, fac + t * n, n * sizeof(int))
                keep += 1
        m = keep

    cdef Py_ssize_t lead = 0
    while lead < m and _is_half_twist(fac + lead * n, n):
        lead += 1

    result = []
    for t in range(lead, m):
        f = fac + t * n
        result.append(tuple([f[x] for x in range(n)]))
    free(fac); free(pos); free(buf)
    return p + lead, result


def crossing_counts(int n, letters):
    """n x n list-of-lists of signed crossing counts between labelled strands."""
    lets = list(letters)
    cdef Py_ssize_t count = len(lets)
    cdef int* at = <int*> malloc(n * sizeof(int))
    cdef long* m = <long*> malloc(n * n * sizeof(long))
    if at == NULL or m == NULL:
        free(at); free(m)
        raise MemoryError()
    cdef Py_ssize_t t
    cdef int k, i, s, a, b, x
    for x in range(n):
        at[x] = x
    for x in range(n * n):
        m[x] = 0
    for t in range(count):
        k = lets[t]
        if k > 0:
            i = k - 1
            s = 1
        else:
            i = -k - 1
            s = -1
        a = at[i]
        b = at[i + 1]
        m[a * n + b] += s
        m[b * n + a] += s
        at[i] = b
        at[i + 1] = a
    result = [[m[a * n + b] for b in range(n)] for a in range(n)]
    free(at); free(m)
    return result
