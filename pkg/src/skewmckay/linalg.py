"""Exact integer matrix rank by fraction-free (Bareiss) elimination."""

from __future__ import annotations


def integer_rank(matrix: list[list[int]]) -> int:
    """Rank of an integer matrix, computed without ever leaving the integers."""
    a = [row[:] for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    rank = 0
    prev = 1
    r = 0
    for c in range(cols):
        pivot = None
        for i in range(r, rows):
            if a[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != r:
            a[r], a[pivot] = a[pivot], a[r]
        for i in range(r + 1, rows):
            if not any(a[i][c:]):
                continue
            head = a[i][c]
            arc = a[r][c]
            row_i = a[i]
            row_r = a[r]
            for j in range(c, cols):
                row_i[j] = (arc * row_i[j] - head * row_r[j]) // prev
        prev = a[r][c]
        r += 1
        rank += 1
        if r == rows:
            break
    return rank


def mat_mul_int(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    rows, inner = len(a), len(b)
    cols = len(b[0]) if inner else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for k in range(inner):
            f = ai[k]
            if f:
                bk = b[k]
                for j in range(cols):
                    oi[j] += f * bk[j]
    return out


def is_zero_matrix(a: list[list[int]]) -> bool:
    return all(not x for row in a for x in row)
