"""Exact Gaussian elimination over any field with exact equality (Fractions, CycScalar)."""
from fractions import Fraction


class InconsistentSystem(ValueError):
    pass


def row_reduce(rows, ncols):
    """Reduced row echelon form in place.  Returns the list of pivot columns."""
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = Fraction(1) / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return pivots


def solve(matrix, rhs):
    """Solve matrix @ x = rhs for square or overdetermined consistent systems.

    Raises InconsistentSystem when no solution exists and ValueError when the
    solution is not unique.
    """
    n = len(matrix[0]) if matrix else 0
    rows = [list(row) + [b] for row, b in zip(matrix, rhs)]
    pivots = row_reduce(rows, n)
    for row in rows[len(pivots):]:
        if row[n] != 0:
            raise InconsistentSystem("linear system has no solution")
    if len(pivots) < n:
        raise ValueError("linear system is underdetermined")
    x = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        x[col] = rows[i][n]
    return x
