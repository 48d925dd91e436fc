"""Small exact linear algebra over any field-like elements.

Works for Fractions as well as RatFuns: all that is needed is +, -, *, /,
equality with 0 via truthiness, and a multiplicative identity derived from
division.
"""

from __future__ import annotations

from .errors import DesingError


def rref(rows):
    """Reduced row-echelon form; returns (rows_without_zeros, pivot_cols)."""
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return [tuple(row) for row in rows[:r]], pivots


def rank(rows):
    return len(rref(rows)[0])


def nullity(rows, ncols):
    if not rows:
        return ncols
    return ncols - rank(rows)


def solve(matrix, rhs):
    """Solve M x = rhs for square-or-tall M; None if singular/inconsistent."""
    n = len(matrix)
    if n == 0:
        return []
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    reduced, pivots = rref(aug)
    ncols = len(matrix[0])
    if ncols in pivots:
        return None  # inconsistent
    if len(pivots) < ncols:
        return None  # underdetermined; callers treat as singular
    sol = [None] * ncols
    for row, c in zip(reduced, pivots):
        sol[c] = row[-1]
    return sol


def row_space_equal(rows_a, rows_b, ncols):
    """Whether two row sets span the same space (exact)."""
    ra, _ = rref([list(r) for r in rows_a]) if rows_a else ([], [])
    rb, _ = rref([list(r) for r in rows_b]) if rows_b else ([], [])
    return ra == rb


def assert_matrix(rows):
    widths = {len(r) for r in rows}
    if len(widths) > 1:
        raise DesingError("ragged matrix")
