"""Exact Gaussian elimination over the supported fields.

The generic routines take a field object exposing ``zero``, ``one``,
``add``, ``mul`` and ``inv``; matrices are lists of rows. Pivoting is
deterministic: columns are scanned left to right and the lowest-index row
holding a nonzero entry becomes the pivot.
"""

from __future__ import annotations

from .errors import DimensionMismatch, SingularMatrix


def solve_gf2(columns: list[int], rhs: int) -> int | None:
    """Find x with XOR of ``columns[j]`` over set bits j of x equal to ``rhs``.

    Returns one solution as a bitmask, or None if ``rhs`` is outside the span.
    """
    pivots: dict[int, tuple[int, int]] = {}
    for j, col in enumerate(columns):
        combo = 1 << j
        while col:
            top = col.bit_length() - 1
            if top not in pivots:
                pivots[top] = (col, combo)
                break
            pcol, pcombo = pivots[top]
            col ^= pcol
            combo ^= pcombo
    x = 0
    while rhs:
        top = rhs.bit_length() - 1
        if top not in pivots:
            return None
        pcol, pcombo = pivots[top]
        rhs ^= pcol
        x ^= pcombo
    return x


def rref(F, rows):
    """Reduced row echelon form. Returns (rows, pivot_columns)."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    zero = F.zero
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != zero), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        s = F.inv(m[r][c])
        m[r] = [F.mul(s, v) for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != zero:
                f = m[i][c]
                m[i] = [F.add(a, F.mul(f, b)) for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(F, rows) -> int:
    return len(rref(F, rows)[1])


def solve(F, A, b):
    """Solve A x = b; free coordinates are set to zero. None if inconsistent."""
    if len(A) != len(b):
        raise DimensionMismatch("right-hand side length differs from row count")
    if not A:
        return []
    ncols = len(A[0])
    red, pivots = rref(F, [list(row) + [bi] for row, bi in zip(A, b)])
    if ncols in pivots:
        return None
    x = [F.zero] * ncols
    for i, c in enumerate(pivots):
        x[c] = red[i][ncols]
    return x


def nullspace(F, A, ncols: int | None = None):
    """Basis of {x : A x = 0}, one vector per free column, in column order."""
    if ncols is None:
        ncols = len(A[0])
    if not A:
        return [[F.one if i == j else F.zero for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(F, A)
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        v = [F.zero] * ncols
        v[free] = F.one
        for i, c in enumerate(pivots):
            v[c] = red[i][free]  # char 2: -x == x
        basis.append(v)
    return basis


def inverse(F, A):
    n = len(A)
    aug = [list(row) + [F.one if i == j else F.zero for j in range(n)] for i, row in enumerate(A)]
    red, pivots = rref(F, aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is not invertible")
    return [row[n:] for row in red]


def is_invertible(F, A) -> bool:
    return len(A) == 0 or rank(F, A) == len(A)


def identity(F, n: int):
    return [[F.one if i == j else F.zero for j in range(n)] for i in range(n)]


def transpose(A):
    return [list(col) for col in zip(*A)]


def matmul(F, A, B):
    Bt = transpose(B)
    return [[dot(F, row, col) for col in Bt] for row in A]


def matvec(F, A, x):
    return [dot(F, row, x) for row in A]


def dot(F, x, y):
    s = F.zero
    for a, b in zip(x, y):
        s = F.add(s, F.mul(a, b))
    return s


def column(A, j: int):
    return [row[j] for row in A]
