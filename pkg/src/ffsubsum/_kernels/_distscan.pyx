# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled backend for the distance-scan kernels; see pure.py for semantics."""

__all__ = ["min_distance", "min_distance_batch", "coset_min_distances"]


def min_distance(const unsigned char[::1] word, const unsigned char[::1] table, Py_ssize_t n):
    """Minimum Hamming distance from one word to every row of the table."""
    return min_distance_batch(word, table, n)[0]


def min_distance_batch(const unsigned char[::1] words, const unsigned char[::1] table, Py_ssize_t n):
    """Minimum distances of each packed word to the table, one byte each."""
    cdef Py_ssize_t nw = words.shape[0] // n
    cdef Py_ssize_t nt = table.shape[0] // n
    out = bytearray(nw)
    cdef unsigned char[::1] mv = out
    cdef Py_ssize_t wi, ti, i, base
    cdef int best, d
    for wi in range(nw):
        base = wi * n
        best = <int> n
        for ti in range(nt):
            d = 0
            for i in range(n):
                if words[base + i] != table[ti * n + i]:
                    d += 1
                    if d >= best:
                        break
            if d < best:
                best = d
                if best == 0:
                    break
        mv[wi] = <unsigned char> best
    return out


def coset_min_distances(int q, int n, int m,
                        const unsigned char[::1] add,
                        const unsigned char[::1] basis,
                        const unsigned char[::1] table):
    """Distances to the table for every word sum_j c_j * basis_j.

    Same contract as the pure backend: coefficients enumerated in
    odometer order (digit 0 fastest), result indexed accordingly.
    """
    cdef Py_ssize_t total = 1
    cdef int j
    for j in range(m):
        total *= q
    out = bytearray(total)
    cdef unsigned char[::1] mv = out
    suffix_buf = bytearray((m + 1) * n)
    cdef unsigned char[::1] suffix = suffix_buf
    digits_buf = bytearray(m)
    cdef unsigned char[::1] digits = digits_buf
    cdef Py_ssize_t idx, nt = table.shape[0] // n
    cdef Py_ssize_t ti, i
    cdef int best, d, t, tt, off
    for idx in range(total):
        best = n
        for ti in range(nt):
            d = 0
            for i in range(n):
                if suffix[i] != table[ti * n + i]:
                    d += 1
                    if d >= best:
                        break
            if d < best:
                best = d
                if best == 0:
                    break
        mv[idx] = <unsigned char> best
        t = 0
        while t < m and digits[t] == q - 1:
            digits[t] = 0
            t += 1
        if t == m:
            break
        digits[t] += 1
        for tt in range(t, -1, -1):
            off = (tt * q + digits[tt]) * n
            for i in range(n):
                suffix[tt * n + i] = add[suffix[(tt + 1) * n + i] * q + basis[off + i]]
    return out
