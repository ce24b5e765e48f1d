"""
Barlotti-Cofman model of PG(3,q^2) in PG(6,q)
+++++++++++++++++++++++++++++++++++++++++++++

Affine points ``(1, x, y, z)`` of PG(3,q^2) map to affine points of
PG(6,q) by splitting each coordinate on the basis ``(1, eps)``.  A point
``P`` at infinity maps to the spread line ``r_P`` of the hyperplane
``x0 = 0``: the points ``(0, lambda*P)`` (split) for ``lambda`` in GF(q^2)*.

Labels of spread lines are infinity points in one of three forms:
``(0, 1, k, h)`` (kind ``a``), ``(0, 0, 1, h)`` (kind ``b``) and
``P_inf = (0, 0, 0, 1)`` (kind ``c``).

.. autosummary::

   ~SpreadLine
   ~enum_spread
   ~incidence_oracle
   ~label_kind
   ~model_consistency
   ~psi
   ~psi_inverse
   ~spread_equations
   ~spread_line
   ~spread_points_array
   ~vpsi
   ~DegenerateLine
   ~NotAtInfinity
   ~PointAtInfinity
"""

import dataclasses
import logging

import numpy as np

from .linalg import nullspace
from .linalg import rank
from .projective import ProjPoint
from .projective import count_points
from .projective import normalize
from .projective import point_keys
from .projective import points_array
from .projective import vnormalize

logger = logging.getLogger(__name__)

P_INF = ProjPoint((0, 0, 0, 1))
VERTEX = ProjPoint((0, 0, 0, 0, 0, 1, 0))


class PointAtInfinity(ValueError):
    """
    psi is defined on affine points only.

    .. index:: qhvar Exception; PointAtInfinity
    """


class NotAtInfinity(ValueError):
    """
    Spread lines belong to points with ``J = 0``.

    .. index:: qhvar Exception; NotAtInfinity
    """


class DegenerateLine(ValueError):
    """
    An affine line needs an affine point and a direction at infinity.

    .. index:: qhvar Exception; DegenerateLine
    """


def _as_point(point, ext):
    coords = point.coords if isinstance(point, ProjPoint) else tuple(point)
    return normalize(coords, ext)


def psi(point, ext):
    """
    ``(1, x1+eps x2, x3+eps x4, x5+eps x6) -> (1, x1, ..., x6)``.

    RAISES

    PointAtInfinity
        when ``J = 0``.
    """
    point = _as_point(point, ext)
    if point.coords[0] == 0:
        raise PointAtInfinity(f"{point} has J = 0")
    coords = [1]
    for c in point.coords[1:]:
        coords.extend(ext.split(c))
    return ProjPoint(tuple(coords))


def psi_inverse(point, ext):
    """
    Inverse of :func:`psi` on affine points of PG(6,q).

    RAISES

    PointAtInfinity
        when ``x0 = 0``.
    """
    point = _as_point(point, ext.base)
    c = point.coords
    if c[0] == 0:
        raise PointAtInfinity(f"{point} lies in x0 = 0")
    return ProjPoint((1, ext.join(c[1], c[2]), ext.join(c[3], c[4]), ext.join(c[5], c[6])))


def vpsi(points, ext):
    """Row-wise split of PG(3,q^2) rows into 7 coordinates (no normalization)."""
    points = np.asarray(points, dtype=np.int64)
    c0, c1 = ext.vsplit(points[:, 1:])
    result = np.empty((len(points), 7), dtype=np.int64)
    result[:, 0] = points[:, 0]
    result[:, 1::2] = c0
    result[:, 2::2] = c1
    return result


def label_kind(label):
    """``'a'``, ``'b'`` or ``'c'`` from the leading non-zero coordinate of a normalized label."""
    _, X, Y, _ = label.coords
    if X:
        return "a"
    if Y:
        return "b"
    return "c"


def _scaled_rows(c, ext):
    """
    Rows of ``u -> split(c*u)`` acting on ``(u0, u1)``.

    Odd: ``[[c0, delta c1], [c1, c0]]``; even: ``[[c0, delta c1], [c1, c0 + c1]]``.
    """
    f = ext.base
    c0, c1 = ext.split(c)
    second = c0 if ext.odd else f.add(c0, c1)
    return (c0, f.mul(ext.delta, c1)), (c1, second)


def spread_equations(label, ext):
    """
    The five linear equations of ``r_P`` as rows of coefficients on ``x0..x6``.

    Kind ``a``, ``(0,1,k,h)``: ``x0 = 0``, ``(x3,x4) = k*(x1,x2)``,
    ``(x5,x6) = h*(x1,x2)``.  Kind ``b``, ``(0,0,1,h)``: ``x0 = x1 = x2 = 0``,
    ``(x5,x6) = h*(x3,x4)``.  Kind ``c``: ``x0 = x1 = x2 = x3 = x4 = 0``.
    """
    f = ext.base
    label = _as_point(label, ext)
    if label.coords[0] != 0:
        raise NotAtInfinity(f"{label} has J != 0")

    def unit(i):
        row = [0] * 7
        row[i] = 1
        return row

    def linked(target, source, c):
        rows = []
        for offset, (m0, m1) in enumerate(_scaled_rows(c, ext)):
            row = [0] * 7
            row[target + offset] = 1
            row[source] = f.neg(m0)
            row[source + 1] = f.neg(m1)
            rows.append(row)
        return rows

    _, X, Y, Z = label.coords
    kind = label_kind(label)
    if kind == "a":
        return [unit(0)] + linked(3, 1, Y) + linked(5, 1, Z)
    if kind == "b":
        return [unit(0), unit(1), unit(2)] + linked(5, 3, Z)
    return [unit(i) for i in range(5)]


@dataclasses.dataclass(frozen=True)
class SpreadLine:
    """Spread line ``r_P``: its label and its q+1 points, sorted."""

    label: ProjPoint
    points: tuple

    @property
    def kind(self):
        return label_kind(self.label)

    def spanning(self):
        """Two points spanning the line."""
        return self.points[0], self.points[-1]

    def as_record(self):
        return {self.label.serialize(): [p.serialize() for p in self.spanning()]}


def spread_line(label, ext):
    """
    The spread line of an infinity point, cut out by :func:`spread_equations`.

    RAISES

    NotAtInfinity
        when ``J != 0``.
    """
    label = _as_point(label, ext)
    f = ext.base
    basis = nullspace(spread_equations(label, ext), f)
    u, v = basis
    points = {normalize(v, f)}
    for c in f.elements():
        points.add(normalize([f.add(x, f.mul(c, y)) for x, y in zip(u, v)], f))
    return SpreadLine(label, tuple(sorted(points, key=lambda p: p.key(f.order))))


def _multipliers(ext):
    """Representatives ``1 + c*eps`` and ``eps`` of GF(q^2)* / GF(q)*."""
    c = np.arange(ext.q, dtype=np.int64)
    return np.concatenate([ext.vjoin(np.ones_like(c), c), [ext.epsilon]])


def spread_points_array(labels, ext):
    """
    Points of the spread lines of many labels, shape ``(n, q+1, 7)``.

    Built from the multiples ``lambda * P``; rows are normalized.
    """
    labels = np.asarray(labels, dtype=np.int64)
    lambdas = _multipliers(ext)
    scaled = ext.vmul(labels[:, None, :], lambdas[None, :, None])
    flat = vpsi(scaled.reshape(-1, 4), ext)
    return vnormalize(flat, ext.base).reshape(len(labels), len(lambdas), 7)


def infinity_labels(ext):
    """All points with ``J = 0`` as an array, in enumeration order."""
    total = count_points(2, ext.order)
    plane = points_array(2, ext.order, 0, total)
    return np.column_stack([np.zeros(total, dtype=np.int64), plane])


def enum_spread(ext, chunk=4096):
    """
    Stream the q^4+q^2+1 spread lines in label order.

    The even/odd construction is chosen by ``ext``.
    """
    labels = infinity_labels(ext)
    order = ext.base.order
    for first in range(0, len(labels), chunk):
        block = labels[first : first + chunk]
        lines = spread_points_array(block, ext)
        for label, rows in zip(block, lines):
            rows = rows[np.argsort(point_keys(rows, order))]
            yield SpreadLine(
                ProjPoint(tuple(int(c) for c in label)),
                tuple(ProjPoint(tuple(int(c) for c in row)) for row in rows),
            )


def incidence_oracle(affine_point, direction, ext):
    """
    True iff the psi-images of the q^2 affine points ``A + t*P`` together
    with ``r_P`` fill a plane of PG(6,q) meeting ``x0 = 0`` in ``r_P``.

    RAISES

    DegenerateLine
        when ``A`` is not affine or ``P`` is not at infinity.
    """
    A = _as_point(affine_point, ext)
    P = _as_point(direction, ext)
    if A.coords[0] == 0 or P.coords[0] != 0:
        raise DegenerateLine(f"line through {A} with direction {P}")
    f = ext.base
    images = set()
    for t in ext.elements():
        raw = [ext.add(a, ext.mul(t, p)) for a, p in zip(A.coords, P.coords)]
        images.add(psi(raw, ext))
    line = spread_line(P, ext)
    at_infinity = set(line.points)
    everything = images | at_infinity
    q = ext.q
    if len(images) != q * q or len(everything) != q * q + q + 1:
        return False
    if any(p.coords[0] == 0 for p in images):
        return False
    return rank([p.coords for p in everything], f) == 3


def model_consistency(ext, n, seed=0):
    """
    Run :func:`incidence_oracle` on ``n`` seeded random affine lines.

    RETURNS

    ``(checked, failures)`` where ``failures`` lists ``(A, P)`` pairs.
    """
    rng = np.random.default_rng(seed)
    labels = infinity_labels(ext)
    failures = []
    for _ in range(n):
        A = ProjPoint((1,) + tuple(int(c) for c in rng.integers(0, ext.order, 3)))
        P = ProjPoint(tuple(int(c) for c in labels[rng.integers(0, len(labels))]))
        if not incidence_oracle(A, P, ext):
            failures.append((A, P))
    logger.debug("model consistency over GF(%d^2): %d lines, %d failures", ext.q, n, len(failures))
    return n, failures


def spread_is_partition(ext):
    """
    Disjointness and covering of ``x0 = 0`` by the spread.

    RETURNS

    ``(lines, covered, ok)``
    """
    order = ext.base.order
    labels = infinity_labels(ext)
    rows = spread_points_array(labels, ext).reshape(-1, 7)
    keys = point_keys(rows, order)
    unique = np.unique(keys)
    expected = count_points(5, order)
    in_hyperplane = bool((rows[:, 0] == 0).all())
    ok = in_hyperplane and len(unique) == len(keys) == expected
    return len(labels), len(unique), ok


def sample_spread_lines(ext, n, seed=0):
    """Seeded sample of ``n`` labels with their spread lines built from the equations."""
    rng = np.random.default_rng(seed)
    labels = infinity_labels(ext)
    picks = rng.choice(len(labels), size=min(n, len(labels)), replace=False)
    return [spread_line(tuple(int(c) for c in labels[i]), ext) for i in sorted(picks)]


def pairwise_disjoint(lines):
    """True iff no point lies on two of ``lines``."""
    seen = set()
    for line in lines:
        for point in line.points:
            if point in seen:
                return False
            seen.add(point)
    return True


# -----------------------------------------------------------------------------
# :copyright: (c) 2024-2026, qhvar developers
#
# Distributed under the terms of the license in the file LICENSE.txt,
# distributed with this software.
# -----------------------------------------------------------------------------
