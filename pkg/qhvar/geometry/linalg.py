"""
Exact linear algebra over a finite field
+++++++++++++++++++++++++++++++++++++++++

Matrices are lists of rows of canonical integer encodings.

.. autosummary::

   ~determinant
   ~nullspace
   ~rank
   ~row_echelon
"""

import logging

logger = logging.getLogger(__name__)


def _clone(matrix):
    return [[int(x) for x in row] for row in matrix]


def row_echelon(matrix, field):
    """
    Reduced row echelon form by Gaussian elimination.

    RETURNS

    ``(rows, pivots, sign)``: the reduced rows, pivot columns, and the
    number of row swaps performed.
    """
    rows = _clone(matrix)
    if not rows:
        return rows, [], 0
    ncols = len(rows[0])
    pivots = []
    swaps = 0
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        if pivot != r:
            rows[r], rows[pivot] = rows[pivot], rows[r]
            swaps += 1
        factor = field.inv(rows[r][c])
        rows[r] = [field.mul(factor, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots, swaps


def rank(matrix, field):
    return len(row_echelon(matrix, field)[1])


def determinant(matrix, field):
    """Determinant of a square matrix by forward elimination."""
    rows = _clone(matrix)
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError("determinant needs a square matrix")
    det = 1
    for c in range(n):
        pivot = next((i for i in range(c, n) if rows[i][c]), None)
        if pivot is None:
            return 0
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            det = field.neg(det)
        det = field.mul(det, rows[c][c])
        inverse = field.inv(rows[c][c])
        for i in range(c + 1, n):
            if rows[i][c]:
                f = field.mul(rows[i][c], inverse)
                rows[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(rows[i], rows[c])]
    return det


def nullspace(matrix, field):
    """Basis (list of vectors) of ``{v : matrix @ v == 0}``."""
    rows, pivots, _ = row_echelon(matrix, field)
    ncols = len(matrix[0])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, c in zip(rows, pivots):
            v[c] = field.neg(row[f])
        basis.append(v)
    logger.debug("nullspace of a %dx%d matrix has dimension %d", len(matrix), ncols, len(basis))
    return basis


# -----------------------------------------------------------------------------
# :copyright: (c) 2024-2026, qhvar developers
#
# Distributed under the terms of the license in the file LICENSE.txt,
# distributed with this software.
# -----------------------------------------------------------------------------
