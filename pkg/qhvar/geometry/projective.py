"""
Projective spaces PG(n,q)
+++++++++++++++++++++++++++++++++++++++

Points are normalized so the first non-zero coordinate is 1.  The
enumeration order is plain lexicographic on the normalized vectors under
the canonical element ordering, which is also the order of the integer
key ``sum(x_i * q**(n-i))``.  Point ``i`` of the stream is computed in
closed form, so any index range can be produced on its own.

.. autosummary::

   ~ProjPoint
   ~Hyperplane
   ~count_points
   ~enum_hyperplanes
   ~enum_points
   ~incident
   ~line_through
   ~normalize
   ~point_keys
   ~points_array
   ~points_at
   ~vnormalize
   ~DimensionMismatch
   ~EqualPoints
   ~ZeroVector
"""

import dataclasses
import logging

import numpy as np

logger = logging.getLogger(__name__)


class ZeroVector(ValueError):
    """
    The all-zero vector has no projective point.

    .. index:: qhvar Exception; ZeroVector
    """


class DimensionMismatch(ValueError):
    """
    Point and hyperplane live in spaces of different dimension.

    .. index:: qhvar Exception; DimensionMismatch
    """


class EqualPoints(ValueError):
    """
    A line needs two distinct points.

    .. index:: qhvar Exception; EqualPoints
    """


@dataclasses.dataclass(frozen=True, order=True)
class ProjPoint:
    """Normalized homogeneous coordinates (canonical integer encodings)."""

    coords: tuple

    @property
    def dimension(self):
        return len(self.coords) - 1

    @property
    def is_affine(self):
        return self.coords[0] != 0

    def key(self, q):
        """Position-preserving integer key (lexicographic order)."""
        value = 0
        for c in self.coords:
            value = value * q + c
        return value

    def serialize(self):
        return ":".join(str(c) for c in self.coords)

    @classmethod
    def parse(cls, text):
        return cls(tuple(int(c) for c in text.split(":")))

    def __str__(self):
        return self.serialize()


@dataclasses.dataclass(frozen=True, order=True)
class Hyperplane(ProjPoint):
    """A hyperplane, stored as its normalized dual vector."""

    @property
    def dual(self):
        return self.coords


def count_points(n, q):
    """Number of points of PG(n,q)."""
    return (q ** (n + 1) - 1) // (q - 1)


def normalize(raw, field):
    """
    Scale ``raw`` so its first non-zero coordinate is 1.

    RAISES

    ZeroVector
        when all coordinates are zero.
    """
    raw = [int(c) for c in raw]
    for c in raw:
        if c:
            inverse = field.inv(c)
            return ProjPoint(tuple(field.mul(inverse, x) for x in raw))
    raise ZeroVector(f"cannot normalize {raw}")


def vnormalize(array, field):
    """Row-wise :func:`normalize` of a 2-D integer array."""
    array = np.asarray(array, dtype=np.int64)
    nonzero = array != 0
    if not nonzero.any(axis=1).all():
        raise ZeroVector("zero row in array")
    lead = np.argmax(nonzero, axis=1)
    leading = array[np.arange(len(array)), lead]
    inverse = field.vpow(leading, field.order - 2)
    return field.vmul(array, inverse[:, None])


def points_array(n, q, start=0, stop=None):
    """
    Points ``start .. stop-1`` of PG(n,q) as an integer array of shape (m, n+1).
    """
    total = count_points(n, q)
    stop = total if stop is None else min(stop, total)
    return points_at(n, q, np.arange(start, stop, dtype=np.int64))


def points_at(n, q, index):
    """Points of PG(n,q) at arbitrary stream positions ``index`` (1-D integer array)."""
    index = np.asarray(index, dtype=np.int64)
    result = np.zeros((len(index), n + 1), dtype=np.int64)
    for lead in range(n, -1, -1):
        free = n - lead
        block_start = (q**free - 1) // (q - 1)
        in_block = (index >= block_start) & (index < block_start + q**free)
        local = index[in_block] - block_start
        rows = result[in_block]
        rows[:, lead] = 1
        for position in range(n, lead, -1):
            local, rows[:, position] = np.divmod(local, q)
        result[in_block] = rows
    return result


def point_keys(array, q):
    """Integer keys (see :meth:`ProjPoint.key`) of a point array."""
    array = np.asarray(array, dtype=np.int64)
    keys = np.zeros(len(array), dtype=np.int64)
    for column in array.T:
        keys = keys * q + column
    return keys


def enum_points(n, field, start=0, stop=None, chunk=4096):
    """Stream the points of PG(n,q), restartable at any index."""
    total = count_points(n, field.order)
    stop = total if stop is None else min(stop, total)
    for first in range(start, stop, chunk):
        for row in points_array(n, field.order, first, min(first + chunk, stop)):
            yield ProjPoint(tuple(int(c) for c in row))


def enum_hyperplanes(n, field, start=0, stop=None, chunk=4096):
    """The point stream read as dual vectors."""
    for point in enum_points(n, field, start, stop, chunk):
        yield Hyperplane(point.coords)


def incident(P, H, field):
    """
    True iff ``sum(P_i * H_i) == 0``.

    RAISES

    DimensionMismatch
        when ``P`` and ``H`` have different lengths.
    """
    if len(P.coords) != len(H.coords):
        raise DimensionMismatch(f"PG({P.dimension}) point vs PG({H.dimension}) hyperplane")
    return field.sum(field.mul(x, h) for x, h in zip(P.coords, H.coords)) == 0


def line_through(P, Q, field):
    """
    All q+1 points ``lambda*P + mu*Q``.

    RAISES

    EqualPoints
        when ``P == Q``.
    """
    if P == Q:
        raise EqualPoints(f"{P} twice")
    points = {Q}
    for mu in field.elements():
        raw = [field.add(x, field.mul(mu, y)) for x, y in zip(P.coords, Q.coords)]
        points.add(normalize(raw, field))
    return points


# -----------------------------------------------------------------------------
# :copyright: (c) 2024-2026, qhvar developers
#
# Distributed under the terms of the license in the file LICENSE.txt,
# distributed with this software.
# -----------------------------------------------------------------------------
