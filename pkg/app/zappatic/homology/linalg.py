"""Exact integer linear algebra.

Ranks are computed by fraction-free (Bareiss) elimination: every
intermediate entry is a minor of the input, each update divides exactly
by the previous pivot, and no rational arithmetic or rounding is needed.
"""

from collections.abc import Sequence

Matrix = Sequence[Sequence[int]]


def integer_rank(matrix: Matrix) -> int:
    """Rank over Q of an integer matrix.

    Args:
        matrix: Row-major integer matrix; may be empty or have empty rows.

    Returns:
        The rank, i.e. the number of pivots of an echelon form.
    """
    rows = [list(row) for row in matrix]
    if not rows or not rows[0]:
        return 0
    n_rows, n_cols = len(rows), len(rows[0])

    rank = 0
    previous_pivot = 1
    for col in range(n_cols):
        pivot_row = next((i for i in range(rank, n_rows) if rows[i][col] != 0), None)
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        pivot = rows[rank][col]
        for i in range(rank + 1, n_rows):
            factor = rows[i][col]
            row = rows[i]
            for j in range(col + 1, n_cols):
                # Exact: both sides are minors (Sylvester's identity).
                row[j] = (pivot * row[j] - factor * rows[rank][j]) // previous_pivot
            row[col] = 0
        previous_pivot = pivot
        rank += 1
        if rank == n_rows:
            break
    return rank


def matmul(left: Matrix, right: Matrix) -> list[list[int]]:
    """Integer matrix product ``left @ right``."""
    if not left:
        return []
    inner = len(right)
    width = len(right[0]) if right else 0
    return [
        [sum(row[k] * right[k][j] for k in range(inner)) for j in range(width)]
        for row in left
    ]
