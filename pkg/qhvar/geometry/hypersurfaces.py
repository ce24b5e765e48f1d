"""
Hypersurfaces of PG(6,q)
++++++++++++++++++++++++

The images in PG(6,q) of the BM and BT varieties, the quadric ``Q`` and
the set ``F-bar`` at infinity, and the tangent Hermitian cone.  ``V`` is
the vertex ``(0,0,0,0,0,1,0)``.

.. autosummary::

   ~Hypersurface6
   ~HypersurfaceTag
   ~LinesUnion
   ~bprime
   ~bprime_member
   ~c3eps
   ~c3eps_member
   ~fbar
   ~fbar_member
   ~hermitian_cone
   ~infinity_quadric
   ~union_of_lines_check
   ~vertex_closed
"""

import dataclasses
import logging
from collections import namedtuple
from enum import Enum

import numpy as np

from ..fields import EvenCharacteristic
from ..utils.memory import check_available_memory
from .projective import ProjPoint
from .projective import count_points
from .projective import point_keys
from .projective import points_array
from .projective import vnormalize
from .quadrics import bprime_coefficients
from .quadrics import quadric_from_dict
from .varieties import InvalidParams
from .varieties import bm_validate

logger = logging.getLogger(__name__)

VERTEX = (0, 0, 0, 0, 0, 1, 0)
SCAN_CHUNK = 1 << 18

LinesUnion = namedtuple("LinesUnion", "ok size base_size union_size")


class HypersurfaceTag(Enum):
    BprimeOdd = "BprimeOdd"
    BprimeEven = "BprimeEven"
    C3eps = "C3eps"
    Fbar = "Fbar"
    InfinityQuadric = "InfinityQuadric"
    HermitianCone = "HermitianCone"


@dataclasses.dataclass(frozen=True)
class Hypersurface6:
    """
    A tagged point set of PG(6,q).

    ``form`` is the :class:`~qhvar.geometry.quadrics.QuadricMatrix` of the
    quadratic tags; ``params`` holds the BM or BT parameters.
    """

    tag: HypersurfaceTag
    ext: object
    params: object = None
    form: object = None

    @property
    def field(self):
        return self.ext.base

    @property
    def quadratic(self):
        return self.form is not None

    def contains_array(self, points):
        points = np.asarray(points, dtype=np.int64)
        if self.tag == HypersurfaceTag.C3eps:
            return _c3eps_mask(self.params, points)
        zero = self.form.evaluate(points) == 0
        if self.tag in (HypersurfaceTag.Fbar, HypersurfaceTag.InfinityQuadric):
            return zero & (points[:, 0] == 0)
        return zero

    def contains(self, point):
        coords = point.coords if isinstance(point, ProjPoint) else tuple(point)
        return bool(self.contains_array(np.array([coords]))[0])

    def points(self):
        """All points of PG(6,q) on the hypersurface, in enumeration order."""
        q = self.field.order
        total = count_points(6, q)
        check_available_memory(min(total, SCAN_CHUNK) * 7 * 8 * 4, f"PG(6,{q}) scan")
        found = []
        for first in range(0, total, SCAN_CHUNK):
            rows = points_array(6, q, first, first + SCAN_CHUNK)
            found.append(rows[self.contains_array(rows)])
        result = np.vstack(found)
        logger.debug("%s over GF(%d): %d points", self.tag.value, q, len(result))
        return result

    def at_infinity(self):
        """Points with ``x0 = 0`` (the first block of the enumeration)."""
        q = self.field.order
        rows = points_array(6, q, 0, count_points(5, q))
        return rows[self.contains_array(rows)]

    def describe(self):
        info = dict(hypersurface=self.tag.value, q=self.field.order, delta=self.ext.delta)
        if self.params is not None and hasattr(self.params, "as_dict"):
            info.update(self.params.as_dict())
        return info


def bprime(params):
    """
    The quadratic cone ``B'`` representing the affine points of B_{a,b}.

    RAISES

    InvalidParams
        for parameters rejected by :func:`~qhvar.geometry.varieties.bm_validate`.
    """
    if not bm_validate(params):
        raise InvalidParams(f"(a, b) = ({params.a}, {params.b}) is not valid over GF({params.q}^2)")
    ext = params.ext
    tag = HypersurfaceTag.BprimeOdd if ext.odd else HypersurfaceTag.BprimeEven
    return Hypersurface6(tag, ext, params, bprime_coefficients(ext, params.a, params.b))


def bprime_member(params, point):
    return bprime(params).contains(point)


def infinity_quadric(params):
    """
    ``B' ∩ {x0 = 0}``: the cone with vertex line ``r_P_inf`` over the quadric
    ``(a1-b1)(x1^2+x3^2) + d(a1+b1)(x2^2+x4^2) + 2a0(x1x2+x3x4)`` (q odd).
    """
    cone = bprime(params)
    return Hypersurface6(HypersurfaceTag.InfinityQuadric, params.ext, params, cone.form)


def hermitian_cone(b, ext):
    """
    Cone representing the Hermitian variety ``z^q - z = (b^q - b)(x^(q+1) + y^(q+1))``.

    RAISES

    InvalidParams
        when ``b`` lies in GF(q).
    """
    if ext.in_base(b):
        raise InvalidParams(f"b={b} lies in GF({ext.q})")
    return Hypersurface6(HypersurfaceTag.HermitianCone, ext, None, bprime_coefficients(ext, 0, b))


def fbar(ext):
    """
    ``x0 = 0`` and ``x1^2 - d x2^2 + x3^2 - d x4^2 = 0``.

    RAISES

    EvenCharacteristic
        for q even; there the set is the union of the spread lines of F.
    """
    if not ext.odd:
        raise EvenCharacteristic("F-bar is defined by a quadric for q odd only")
    f = ext.base
    minus_delta = f.neg(ext.delta)
    form = quadric_from_dict(
        f,
        {(1, 1): 1, (2, 2): minus_delta, (3, 3): 1, (4, 4): minus_delta},
        tuple(f"x{i}" for i in range(7)),
    )
    return Hypersurface6(HypersurfaceTag.Fbar, ext, None, form)


def fbar_member(point, ext):
    return fbar(ext).contains(point)


def _c3eps_mask(bt, points):
    """``x0^(s+1) x6 = x1^(s+2) + x0^s x1 x2 + x0^2 x2^s + x3^(s+2) + x0^s x3 x4 + x0^2 x4^s``."""
    f = bt.ext.base
    s = bt.sigma
    x = [points[:, i] for i in range(7)]
    x0s = f.vpow(x[0], s)
    x0sq = f.vpow(x[0], 2)
    lhs = f.vmul(f.vpow(x[0], s + 1), x[6])
    rhs = f.vsum(
        [
            f.vpow(x[1], s + 2),
            f.vmul(x0s, f.vmul(x[1], x[2])),
            f.vmul(x0sq, f.vpow(x[2], s)),
            f.vpow(x[3], s + 2),
            f.vmul(x0s, f.vmul(x[3], x[4])),
            f.vmul(x0sq, f.vpow(x[4], s)),
        ]
    )
    return lhs == rhs


def c3eps(bt):
    return Hypersurface6(HypersurfaceTag.C3eps, bt.ext, bt)


def c3eps_member(bt, point):
    return c3eps(bt).contains(point)


def vertex_closed(hypersurface, points=None):
    """
    True iff ``P + lambda V`` lies on the hypersurface for every point ``P``
    of it and every ``lambda`` in GF(q).
    """
    f = hypersurface.field
    if points is None:
        points = hypersurface.points()
    vertex = np.array(VERTEX, dtype=np.int64)
    for lam in f.elements():
        moved = f.vadd(points, f.vmul(lam, vertex)[None, :])
        nonzero = moved.any(axis=1)
        moved = vnormalize(moved[nonzero], f)
        if not hypersurface.contains_array(moved).all():
            return False
    return True


def union_of_lines_check(bt):
    """
    Compare ``C`` with the union of the lines joining ``V`` to
    ``C' = C ∩ {x5 = 0}``.

    RETURNS

    :class:`LinesUnion` with ``ok`` true iff the sets are equal,
    ``|C| = q |C'| + 1`` and ``|C'| = q^4 + q^3 + q^2 + q + 1``.
    """
    f = bt.ext.base
    q = f.order
    surface = c3eps(bt)
    points = surface.points()
    base = points[points[:, 5] == 0]
    joined = [np.array([VERTEX], dtype=np.int64)]
    for lam in f.elements():
        rows = base.copy()
        rows[:, 5] = lam
        joined.append(vnormalize(rows, f))
    union = np.unique(point_keys(np.vstack(joined), q))
    keys = point_keys(points, q)
    size, base_size = len(points), len(base)
    ok = (
        size == q * base_size + 1
        and base_size == sum(q**k for k in range(5))
        and len(union) == size
        and bool(np.array_equal(union, np.sort(keys)))
    )
    logger.info("C3eps over GF(%d): |C|=%d, |C'|=%d, union=%d", q, size, base_size, len(union))
    return LinesUnion(ok, size, base_size, len(union))


# -----------------------------------------------------------------------------
# :copyright: (c) 2024-2026, qhvar developers
#
# Distributed under the terms of the license in the file LICENSE.txt,
# distributed with this software.
# -----------------------------------------------------------------------------
