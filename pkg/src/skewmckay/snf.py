"""Integer Smith normal form with unimodular transforms.

Everything is exact arithmetic on Python ints.  The matrices involved are
tiny (generators-plus-relations of a finite abelian group), so plain
row/column reduction with a restart whenever the divisibility chain breaks
is plenty.
"""

from __future__ import annotations


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
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


def smith_normal_form(
    matrix: list[list[int]],
    with_u: bool = True,
) -> tuple[list[list[int]], list[list[int]] | None, list[list[int]], list[list[int]]]:
    """Return (D, U, V, V_inv) with U*A*V = D.

    D is diagonal with d[0] | d[1] | ... and nonnegative entries; U and V are
    unimodular, and V_inv is the integer inverse of V (maintained during the
    column operations so no matrix inversion is ever needed).  Pass
    ``with_u=False`` to skip tracking U, which matters when the matrix has
    many rows (U is None in the result).
    """
    a = [row[:] for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    u = identity(m) if with_u else None
    v = identity(n)
    v_inv = identity(n)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        if u is not None:
            u[i], u[j] = u[j], u[i]

    def add_row(i, j, q):
        # row i += q * row j
        for c in range(n):
            a[i][c] += q * a[j][c]
        if u is not None:
            for c in range(m):
                u[i][c] += q * u[j][c]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        if u is not None:
            u[i] = [-x for x in u[i]]

    def swap_cols(i, j):
        for r in range(m):
            a[r][i], a[r][j] = a[r][j], a[r][i]
        for r in range(n):
            v[r][i], v[r][j] = v[r][j], v[r][i]
        v_inv[i], v_inv[j] = v_inv[j], v_inv[i]

    def add_col(i, j, q):
        # col i += q * col j, so V_inv row j -= q * V_inv row i
        for r in range(m):
            a[r][i] += q * a[r][j]
        for r in range(n):
            v[r][i] += q * v[r][j]
        for c in range(n):
            v_inv[j][c] -= q * v_inv[i][c]

    def find_pivot(t):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        return best

    t = 0
    while True:
        pivot = find_pivot(t)
        if pivot is None:
            break
        i, j = pivot
        if i != t:
            swap_rows(t, i)
        if j != t:
            swap_cols(t, j)
        if a[t][t] < 0:
            negate_row(t)
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
                    if a[i][t]:
                        # remainder is a smaller positive pivot
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
                    if a[t][j]:
                        swap_cols(t, j)
                        dirty = True
            if not dirty:
                # force d[t] to divide the rest of the block, so the
                # invariant-factor chain comes out of the loop directly
                for i in range(t + 1, m):
                    row = a[i]
                    if any(row[j] % a[t][t] for j in range(t + 1, n)):
                        add_row(t, i, 1)
                        dirty = True
                        break
        t += 1

    return a, u, v, v_inv
