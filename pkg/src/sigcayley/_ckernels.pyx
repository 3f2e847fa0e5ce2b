# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels.  Mirrors ``_kernels_py`` exactly, including output order."""

from cpython.array cimport array
from libc.stdlib cimport free, malloc


cdef int[:] _ints(object seq):
    if isinstance(seq, array) and seq.typecode == "i":
        return seq
    return array("i", seq)


def simple_cycles(indptr, indices):
    cdef int[:] ptr = _ints(indptr)
    cdef int[:] idx = _ints(indices)
    cdef Py_ssize_t n = ptr.shape[0] - 1
    cdef int *path = <int *> malloc((n + 1) * sizeof(int))
    cdef int *cur = <int *> malloc((n + 1) * sizeof(int))
    cdef char *on = <char *> malloc((n + 1) * sizeof(char))
    cdef int r, x, y, c, depth, i
    out = []
    try:
        for i in range(n):
            on[i] = 0
        for r in range(n):
            path[0] = r
            cur[0] = ptr[r]
            on[r] = 1
            depth = 1
            while depth > 0:
                x = path[depth - 1]
                c = cur[depth - 1]
                if c < ptr[x + 1]:
                    cur[depth - 1] = c + 1
                    y = idx[c]
                    if y == r:
                        if depth >= 3 and path[1] < x:
                            out.append(tuple([path[i] for i in range(depth)]))
                    elif y > r and not on[y]:
                        path[depth] = y
                        cur[depth] = ptr[y]
                        on[y] = 1
                        depth += 1
                else:
                    on[x] = 0
                    depth -= 1
    finally:
        free(path)
        free(cur)
        free(on)
    return out


def negative_histogram(indptr, indices, neg):
    cdef int[:] ptr = _ints(indptr)
    cdef int[:] idx = _ints(indices)
    cdef int[:] ng = _ints(neg)
    cdef Py_ssize_t n = ptr.shape[0] - 1
    cdef int *path = <int *> malloc((n + 1) * sizeof(int))
    cdef int *cur = <int *> malloc((n + 1) * sizeof(int))
    cdef int *negs = <int *> malloc((n + 1) * sizeof(int))
    cdef long long *hist = <long long *> malloc((n + 1) * sizeof(long long))
    cdef char *on = <char *> malloc((n + 1) * sizeof(char))
    cdef int r, x, y, c, depth, i
    try:
        for i in range(n + 1):
            hist[i] = 0
            on[i] = 0
        for r in range(n):
            path[0] = r
            cur[0] = ptr[r]
            negs[0] = 0
            on[r] = 1
            depth = 1
            while depth > 0:
                x = path[depth - 1]
                c = cur[depth - 1]
                if c < ptr[x + 1]:
                    cur[depth - 1] = c + 1
                    y = idx[c]
                    if y == r:
                        if depth >= 3 and path[1] < x:
                            hist[negs[depth - 1] + ng[c]] += 1
                    elif y > r and not on[y]:
                        path[depth] = y
                        cur[depth] = ptr[y]
                        negs[depth] = negs[depth - 1] + ng[c]
                        on[y] = 1
                        depth += 1
                else:
                    on[x] = 0
                    depth -= 1
        return [hist[i] for i in range(n + 1)]
    finally:
        free(path)
        free(cur)
        free(negs)
        free(hist)
        free(on)


def first_valid_marking(int n, ea, eb, eneg):
    cdef int[:] a = _ints(ea)
    cdef int[:] b = _ints(eb)
    cdef int[:] s = _ints(eneg)
    cdef Py_ssize_t m = a.shape[0], j
    cdef unsigned long long mask, top
    cdef bint ok
    if n > 62:
        raise ValueError("first_valid_marking supports at most 62 vertices")
    top = (<unsigned long long> 1) << n
    mask = 0
    while mask < top:
        ok = True
        for j in range(m):
            if (((mask >> a[j]) & (mask >> b[j]) & 1) != <unsigned long long> s[j]):
                ok = False
                break
        if ok:
            return mask
        mask += 1
    return -1
