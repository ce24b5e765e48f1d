"""
Quadrics over GF(q)
+++++++++++++++++++

A quadratic form is stored by its upper-triangular coefficients
``Q(x) = sum_{i <= j} c_ij x_i x_j``, which is valid in every
characteristic.  Its Gram array has ``c_ij`` off the diagonal and ``2 c_ii``
on it (so in characteristic 2 the diagonal vanishes); the alternating
companion has a zero diagonal and ``b_ji = -b_ij = -c_ij``.

.. autosummary::

   ~QuadricMatrix
   ~Classification
   ~base_det_closed_form
   ~base_matrix
   ~bprime_coefficients
   ~classify_quadric
   ~count_quadric_points
   ~quadric_point_counts
   ~singular_points
   ~DegenerateQuadric
"""

import dataclasses
import itertools
import logging
from collections import namedtuple

import numpy as np

from ..utils.memory import check_available_memory
from .linalg import determinant
from .linalg import nullspace
from .projective import count_points
from .projective import normalize
from .projective import points_array

logger = logging.getLogger(__name__)

BASE_COORDINATES = (0, 1, 2, 3, 4, 6)

Classification = namedtuple("Classification", "kind points det cross_check")


class DegenerateQuadric(ArithmeticError):
    """
    Quadric has singular points.

    .. index:: qhvar Exception; DegenerateQuadric
    """


@dataclasses.dataclass(frozen=True)
class QuadricMatrix:
    """
    Quadratic form on ``len(coordinates)`` variables over ``field``.

    ``coefficients`` maps ``(i, j)``, ``i <= j``, to ``c_ij``; indices refer
    to positions in ``coordinates`` (the names of the variables).
    """

    field: object
    coefficients: tuple
    coordinates: tuple

    @property
    def size(self):
        return len(self.coordinates)

    def coefficient(self, i, j):
        if i > j:
            i, j = j, i
        return dict(self.coefficients).get((i, j), 0)

    @property
    def gram(self):
        """The symmetric array with ``2 c_ii`` on the diagonal."""
        f = self.field
        n = self.size
        rows = [[self.coefficient(i, j) for j in range(n)] for i in range(n)]
        for i in range(n):
            rows[i][i] = f.add(rows[i][i], rows[i][i])
        return rows

    @property
    def companion(self):
        """Alternating array: zero diagonal, ``b_ij = c_ij`` and ``b_ji = -c_ij`` for ``i < j``."""
        f = self.field
        n = self.size
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                c = self.coefficient(i, j)
                rows[i][j] = c
                rows[j][i] = f.neg(c)
        return rows

    @property
    def det(self):
        return determinant(self.gram, self.field)

    def evaluate(self, points):
        """``Q`` at each row of ``points``."""
        f = self.field
        points = np.asarray(points, dtype=np.int64)
        terms = [
            f.vmul(c, f.vmul(points[:, i], points[:, j])) for (i, j), c in self.coefficients if c
        ]
        if not terms:
            return np.zeros(len(points), dtype=np.int64)
        return f.vsum(terms)

    def value(self, vector):
        return int(self.evaluate(np.array([list(vector)]))[0])

    def restrict(self, keep):
        """The form on the variables at positions ``keep`` (others set to zero)."""
        index = {old: new for new, old in enumerate(keep)}
        coefficients = tuple(
            ((index[i], index[j]), c) for (i, j), c in self.coefficients if i in index and j in index
        )
        return QuadricMatrix(self.field, coefficients, tuple(self.coordinates[k] for k in keep))

    def as_record(self):
        return dict(coordinates=list(self.coordinates), gram=self.gram, det=self.det)


def quadric_from_dict(field, coefficients, coordinates):
    """Build a :class:`QuadricMatrix` from ``{(i, j): c}``, dropping zeros."""
    items = []
    for (i, j), c in sorted(coefficients.items()):
        if i > j:
            i, j = j, i
        if c:
            items.append(((i, j), c))
    return QuadricMatrix(field, tuple(items), tuple(coordinates))


def bprime_coefficients(ext, a, b):
    """
    Coefficients of the quadratic cone on ``x0..x6`` representing the
    affine points of ``z + a(x^2+y^2) - b(x^(q+1)+y^(q+1))`` in GF(q).

    q odd::

        x0 x6 + 2a0 (x1 x2 + x3 x4) + a1 (x1^2 + x3^2 + d (x2^2 + x4^2))
              - b1 (x1^2 - d x2^2 + x3^2 - d x4^2)

    q even::

        x0 x6 + a0 (x2^2 + x4^2) + a1 (x1^2 + x2^2 + d x2^2 + x3^2 + x4^2 + d x4^2)
              + b1 (x1^2 + d x2^2 + x1 x2 + x3^2 + d x4^2 + x3 x4)

    ``a = 0`` gives the cone of the Hermitian variety tangent to ``J = 0``.
    """
    f = ext.base
    d = ext.delta
    a0, a1 = ext.split(a)
    _b0, b1 = ext.split(b)
    if ext.odd:
        square_odd = f.sub(a1, b1)
        square_even = f.mul(d, f.add(a1, b1))
        cross = f.add(a0, a0)
    else:
        square_odd = f.add(a1, b1)
        square_even = f.sum([a0, a1, f.mul(d, a1), f.mul(d, b1)])
        cross = b1
    coefficients = {(0, 6): 1}
    for first in (1, 3):
        coefficients[(first, first)] = square_odd
        coefficients[(first + 1, first + 1)] = square_even
        coefficients[(first, first + 1)] = cross
    return quadric_from_dict(f, coefficients, tuple(f"x{i}" for i in range(7)))


def base_matrix(params):
    """
    Base of the cone ``B'`` in PG(5,q), coordinates ``[x0, x1, x2, x3, x4, x6]``.

    The Gram array is the block matrix with corner entries 1 and the two
    equal 2x2 blocks (``[[2(a1-b1), 2a0], [2a0, 2d(a1+b1)]]`` for q odd).
    """
    return bprime_coefficients(params.ext, params.a, params.b).restrict(BASE_COORDINATES)


def base_det_closed_form(params):
    """``-16 (d a1^2 - d b1^2 - a0^2)^2`` for q odd, ``b1^4`` for q even."""
    ext = params.ext
    f = ext.base
    a0, a1, _b0, b1 = params.components
    if not ext.odd:
        return f.power(b1, 4)
    d = ext.delta
    inner = f.sub(f.sub(f.mul(d, f.mul(a1, a1)), f.mul(d, f.mul(b1, b1))), f.mul(a0, a0))
    return f.neg(f.mul(16 % f.p, f.mul(inner, inner)))


def quadric_point_counts(N, q):
    """
    Point numbers of the non-degenerate quadrics of PG(N,q).

    N even: ``{"parabolic": (q^N - 1)/(q - 1)}``; N = 2n-1 odd:
    ``{"hyperbolic": (q^(n-1)+1)(q^n-1)/(q-1), "elliptic": (q^(n-1)-1)(q^n+1)/(q-1)}``.
    """
    if N % 2 == 0:
        return {"parabolic": (q**N - 1) // (q - 1)}
    n = (N + 1) // 2
    return {
        "hyperbolic": (q ** (n - 1) + 1) * (q**n - 1) // (q - 1),
        "elliptic": (q ** (n - 1) - 1) * (q**n + 1) // (q - 1),
    }


def count_quadric_points(M, chunk=1 << 18):
    """Number of points of PG(N,q) where the form vanishes."""
    q = M.field.order
    N = M.size - 1
    total = count_points(N, q)
    check_available_memory(min(total, chunk) * M.size * 8 * 4, f"PG({N},{q}) scan")
    found = 0
    for first in range(0, total, chunk):
        points = points_array(N, q, first, first + chunk)
        found += int((M.evaluate(points) == 0).sum())
    return found


def singular_points(M):
    """
    Singular points: vectors of the radical of the polar form where Q vanishes.

    The polar form is the Gram array (the alternating companion in
    characteristic 2, which then coincides with it).
    """
    f = M.field
    polar = M.gram if f.p != 2 else M.companion
    basis = nullspace(polar, f)
    found = set()
    for combination in itertools.product(f.elements(), repeat=len(basis)):
        if not any(combination):
            continue
        vector = [f.sum(f.mul(c, v[k]) for c, v in zip(combination, basis)) for k in range(M.size)]
        if M.value(vector) == 0:
            found.add(normalize(vector, f))
    return sorted(found, key=lambda p: p.key(f.order))


def classify_quadric(M, strict=False):
    """
    Classify a quadric of PG(N,q) by its point count.

    For q odd and N odd the count is cross-checked against the squareness
    of ``(-1)^((N+1)/2) det``: a square means hyperbolic.

    RETURNS

    :class:`Classification` with ``kind`` one of ``hyperbolic``,
    ``elliptic``, ``parabolic``, ``degenerate``.

    RAISES

    DegenerateQuadric
        when ``strict`` and the quadric is degenerate.
    """
    f = M.field
    N = M.size - 1
    q = f.order
    det = M.det
    points = count_quadric_points(M)
    singular = singular_points(M)
    kind = "degenerate"
    if not singular:
        for name, expected in quadric_point_counts(N, q).items():
            if points == expected:
                kind = name
    cross_check = None
    if f.p != 2 and N % 2 == 1 and kind != "degenerate":
        discriminant = det if ((N + 1) // 2) % 2 == 0 else f.neg(det)
        predicted = "hyperbolic" if f.is_square(discriminant) else "elliptic"
        cross_check = predicted == kind
        if not cross_check:
            logger.warning("quadric count says %s, discriminant says %s", kind, predicted)
    logger.debug("quadric in PG(%d,%d): %d points, det %d, %s", N, q, points, det, kind)
    if kind == "degenerate" and strict:
        raise DegenerateQuadric(f"{len(singular)} singular points, {points} points")
    return Classification(kind, points, det, cross_check)


# -----------------------------------------------------------------------------
# :copyright: (c) 2024-2026, qhvar developers
#
# Distributed under the terms of the license in the file LICENSE.txt,
# distributed with this software.
# -----------------------------------------------------------------------------
