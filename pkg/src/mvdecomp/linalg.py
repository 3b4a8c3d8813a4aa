"""Exact rank of integer matrices by fraction-free elimination."""

from __future__ import annotations


def integer_rank(matrix: list[list[int]]) -> int:
    """Rank over the rationals, computed in integer arithmetic (Bareiss).

    Each elimination step divides by the previous pivot; the division is
    exact because intermediate entries are minors of the original matrix.
    """
    m = [row[:] for row in matrix]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot_row = next((i for i in range(rank, nrows) if m[i][col] != 0), None)
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        piv = m[rank][col]
        top = m[rank]
        for i in range(rank + 1, nrows):
            row = m[i]
            mic = row[col]
            for j in range(col + 1, ncols):
                row[j] = (row[j] * piv - mic * top[j]) // prev
            row[col] = 0
        prev = piv
        rank += 1
        if rank == nrows:
            break
    return rank
