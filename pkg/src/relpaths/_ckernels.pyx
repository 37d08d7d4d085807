# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Word-parallel bit-matrix kernels.

Universes with n <= 8 fit one 64-bit word and run in C; larger universes
defer to the pure-Python kernels.
"""

from libc.stdint cimport uint64_t

from relpaths import _pykernels

DEF WORD_N = 8


cdef inline uint64_t _compose(uint64_t a, uint64_t b, int n) nogil:
    cdef uint64_t rm = (<uint64_t>1 << n) - 1
    cdef uint64_t rows_b[WORD_N]
    cdef uint64_t out = 0, acc, row
    cdef int i, k
    for k in range(n):
        rows_b[k] = (b >> (k * n)) & rm
    for i in range(n):
        row = (a >> (i * n)) & rm
        acc = 0
        k = 0
        while row:
            if row & 1:
                acc |= rows_b[k]
            row >>= 1
            k += 1
        out |= acc << (i * n)
    return out


cdef inline uint64_t _converse(uint64_t a, int n) nogil:
    cdef uint64_t out = 0
    cdef int i, j
    for i in range(n):
        for j in range(n):
            if (a >> (i * n + j)) & 1:
                out |= <uint64_t>1 << (j * n + i)
    return out


cdef inline uint64_t _star(uint64_t a, int n) nogil:
    cdef uint64_t rm = (<uint64_t>1 << n) - 1
    cdef uint64_t rows[WORD_N]
    cdef uint64_t out = 0, rk, bit
    cdef int i, k
    for i in range(n):
        rows[i] = ((a >> (i * n)) & rm) | (<uint64_t>1 << i)
    for k in range(n):
        rk = rows[k]
        bit = <uint64_t>1 << k
        for i in range(n):
            if rows[i] & bit:
                rows[i] |= rk
    for i in range(n):
        out |= rows[i] << (i * n)
    return out


cdef inline uint64_t _row_fill(uint64_t a, int n) nogil:
    cdef uint64_t rm = (<uint64_t>1 << n) - 1
    cdef uint64_t out = 0
    cdef int i
    for i in range(n):
        if (a >> (i * n)) & rm:
            out |= rm << (i * n)
    return out


def compose(a, b, int n):
    if n > WORD_N:
        return _pykernels.compose(a, b, n)
    return _compose(a, b, n)


def converse(a, int n):
    if n > WORD_N:
        return _pykernels.converse(a, n)
    return _converse(a, n)


def star(a, int n):
    if n > WORD_N:
        return _pykernels.star(a, n)
    return _star(a, n)


def row_fill(a, int n):
    if n > WORD_N:
        return _pykernels.row_fill(a, n)
    return _row_fill(a, n)


def fill_compose_table(unsigned short[:, ::1] out, int n):
    """Fill ``out[a, b] = a ; b`` for every pair of relations with n*n <= 16."""
    if n * n > 16:
        raise ValueError(f"compose table needs n <= 4, got n={n}")
    cdef Py_ssize_t size = 1 << (n * n)
    cdef Py_ssize_t i, j
    if out.shape[0] != size or out.shape[1] != size:
        raise ValueError("table shape does not match universe")
    with nogil:
        for i in range(size):
            for j in range(size):
                out[i, j] = <unsigned short>_compose(<uint64_t>i, <uint64_t>j, n)
