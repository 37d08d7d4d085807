"""Pure-Python bit-matrix kernels.

A relation on ``n`` vertices is a non-negative int of ``n*n`` bits in
row-major order: cell ``(a, b)`` is bit ``a*n + b``.  These functions are the
reference implementations; ``_ckernels`` provides the same signatures.
"""

from __future__ import annotations


def rows_of(bits: int, n: int) -> list[int]:
    rm = (1 << n) - 1
    return [(bits >> (i * n)) & rm for i in range(n)]


def from_rows(rows: list[int], n: int) -> int:
    out = 0
    for i, row in enumerate(rows):
        out |= row << (i * n)
    return out


def compose(a: int, b: int, n: int) -> int:
    rm = (1 << n) - 1
    rows_b = [(b >> (k * n)) & rm for k in range(n)]
    out = 0
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


def converse(a: int, n: int) -> int:
    rm = (1 << n) - 1
    out = 0
    for i in range(n):
        row = (a >> (i * n)) & rm
        j = 0
        while row:
            if row & 1:
                out |= 1 << (j * n + i)
            row >>= 1
            j += 1
    return out


def star(a: int, n: int) -> int:
    # Warshall over rows, diagonal seeded up front
    rm = (1 << n) - 1
    rows = [((a >> (i * n)) & rm) | (1 << i) for i in range(n)]
    for k in range(n):
        rk = rows[k]
        bit = 1 << k
        for i in range(n):
            if rows[i] & bit:
                rows[i] |= rk
    out = 0
    for i in range(n):
        out |= rows[i] << (i * n)
    return out


def row_fill(a: int, n: int) -> int:
    """``a ; L``: every non-empty row becomes a full row."""
    rm = (1 << n) - 1
    out = 0
    for i in range(n):
        if (a >> (i * n)) & rm:
            out |= rm << (i * n)
    return out


def fill_compose_table(out, n: int) -> None:
    """Fill ``out[a, b] = a ; b`` for every pair of relations with n*n <= 16."""
    if n * n > 16:
        raise ValueError(f"compose table needs n <= 4, got n={n}")
    size = 1 << (n * n)
    if out.shape != (size, size):
        raise ValueError("table shape does not match universe")
    for i in range(size):
        out[i, :] = [compose(i, j, n) for j in range(size)]
