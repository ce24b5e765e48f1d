"""
Spread-line claims
+++++++++++++++++++++++++++++++++++++++

Counting the spread lines contained in a hypersurface of PG(6,q), the
section at infinity of the varieties of PG(3,q^2) read as spread labels,
the partition of ``F-bar`` and the audit of the three conditions under
which a cone of PG(6,q) represents a Hermitian variety:

* Q1: the singular locus (vertex) meets ``r_P_inf``;
* Q2: the base quadric is non-degenerate hyperbolic;
* Q3: the section at infinity is a union of spread lines.

Labels are integer arrays of shape ``(n, 4)`` sorted by key.

.. autosummary::

   ~Audit
   ~ContainmentSplit
   ~InfinitySection
   ~PartitionResult
   ~containment_split
   ~count_spread_lines_in
   ~gcd_check
   ~infinity_section
   ~label_list
   ~lines_contained
   ~partition_check
   ~q1q2q3_audit
   ~section_labels
   ~EvenE
   ~UnsupportedVariety
"""

import logging
from collections import namedtuple

import numpy as np
from sympy import igcd

from ..geometry.barlotti_cofman import P_INF
from ..geometry.barlotti_cofman import VERTEX
from ..geometry.barlotti_cofman import infinity_labels
from ..geometry.barlotti_cofman import spread_line
from ..geometry.barlotti_cofman import spread_points_array
from ..geometry.hypersurfaces import vertex_closed
from ..geometry.projective import ProjPoint
from ..geometry.projective import point_keys
from ..geometry.quadrics import BASE_COORDINATES
from ..geometry.quadrics import classify_quadric
from ..geometry.quadrics import singular_points
from ..geometry.varieties import InvalidParams
from ..geometry.varieties import VarietyTag
from ..geometry.varieties import infinity_points

logger = logging.getLogger(__name__)

LABEL_CHUNK = 4096

InfinitySection = namedtuple("InfinitySection", "labels case cross_check")
ContainmentSplit = namedtuple("ContainmentSplit", "contained not_contained outside cross_check")
PartitionResult = namedtuple("PartitionResult", "ok lines points target_size disjoint contained covers")
Audit = namedtuple("Audit", "q1 q2 q3")


class UnsupportedVariety(ValueError):
    """
    The variety has no spread-label description of its section at infinity.

    .. index:: qhvar Exception; UnsupportedVariety
    """


class EvenE(ValueError):
    """
    BT varieties need ``q = 2**e`` with ``e`` odd.

    .. index:: qhvar Exception; EvenE
    """


def label_list(labels):
    """Labels array as a list of :class:`~qhvar.geometry.projective.ProjPoint`."""
    return [ProjPoint(tuple(int(c) for c in row)) for row in np.asarray(labels)]


def lines_contained(hypersurface, labels, chunk=LABEL_CHUNK):
    """Boolean mask: is every point of ``r_P`` on ``hypersurface``, for each label ``P``."""
    ext = hypersurface.ext
    labels = np.asarray(labels, dtype=np.int64).reshape(-1, 4)
    mask = np.zeros(len(labels), dtype=bool)
    for first in range(0, len(labels), chunk):
        block = labels[first : first + chunk]
        rows = spread_points_array(block, ext)
        inside = hypersurface.contains_array(rows.reshape(-1, 7)).reshape(rows.shape[:2])
        mask[first : first + len(block)] = inside.all(axis=1)
    return mask


def count_spread_lines_in(hypersurface):
    """
    Spread lines of ``x0 = 0`` lying entirely on ``hypersurface``.

    RETURNS

    ``(count, labels)`` with ``labels`` a list of ProjPoint.
    """
    labels = infinity_labels(hypersurface.ext)
    inside = labels[lines_contained(hypersurface, labels)]
    logger.debug("%s: %d spread line(s) contained", hypersurface.tag.value, len(inside))
    return len(inside), label_list(inside)


def section_labels(ext, slopes):
    """``P_inf`` and the rows ``(0, 1, y, t)`` for every slope ``y`` and t in GF(q^2)."""
    order = ext.order
    t = np.arange(order, dtype=np.int64)
    rows = [np.array([P_INF.coords], dtype=np.int64)]
    for y in slopes:
        block = np.zeros((order, 4), dtype=np.int64)
        block[:, 1] = 1
        block[:, 2] = y
        block[:, 3] = t
        rows.append(block)
    labels = np.vstack(rows)
    return labels[np.argsort(point_keys(labels, order))]


def infinity_section(variety, cross_check=True):
    """
    Section ``J = 0`` of ``variety`` as spread labels.

    * B_{a,b}, q odd: the two lines ``Y = +-mu X`` with ``mu^2 = -1``
      (``2q^2 + 1`` labels);
    * B_{a,b}, q even: the line ``Y = X`` (``q^2 + 1``);
    * M_{a,b} and H_eps: the cone F, ``Y^(q+1) = -1`` (``q^3 + q^2 + 1``);
    * V_eps: the lines ``Y = cX`` with ``c^m = 1``, ``m = 2^((e-1)/2) + 1``:
      one line for e = 1 mod 4, three for e = 3 mod 4.

    With ``cross_check`` the labels are compared with the ``J = 0``
    points accepted by the membership predicate.

    RAISES

    UnsupportedVariety
        for the cone F alone and Hermitian varieties.
    """
    ext = variety.ext
    tag = variety.tag
    minus_one = ext.neg(1)
    if tag == VarietyTag.bab:
        slopes = [y for y in ext.elements() if ext.mul(y, y) == minus_one]
        case = "two lines Y = +-mu X" if ext.odd else "line Y = X"
    elif tag in (VarietyTag.mab, VarietyTag.heps):
        slopes = [y for y in ext.elements() if ext.norm(y) == ext.base.neg(1)]
        case = "cone F"
    elif tag == VarietyTag.veps:
        m = variety.params.root_order
        slopes = [y for y in ext.elements() if y and ext.power(y, m) == 1]
        case = f"e = {variety.params.e % 4} mod 4, {len(slopes)} line(s)"
    else:
        raise UnsupportedVariety(f"no infinity section for {tag.value}")
    labels = section_labels(ext, slopes)
    check = None
    if cross_check:
        infinite = infinity_points(ext)
        brute = infinite[variety.mask(infinite)]
        check = bool(np.array_equal(point_keys(brute, ext.order), point_keys(labels, ext.order)))
        if not check:
            logger.warning("%s: case analysis gives %d labels, predicate %d", tag.value, len(labels), len(brute))
    logger.debug("%s over GF(%d^2): %s, %d labels", tag.value, ext.q, case, len(labels))
    return InfinitySection(labels, case, check)


def containment_split(variety, hypersurface, section=None, global_check=True):
    """
    Split the infinity labels of ``variety`` by containment in ``hypersurface``.

    With ``global_check`` every spread line of the hypersurface is counted
    too: ``outside`` is the number of contained lines that are not
    infinity labels of the variety, ``cross_check`` compares both counts.

    RETURNS

    :class:`ContainmentSplit` (label arrays, ``outside``, ``cross_check``)
    """
    if section is None:
        section = infinity_section(variety)
    labels = section.labels
    inside = lines_contained(hypersurface, labels)
    contained, not_contained = labels[inside], labels[~inside]
    outside = check = None
    if global_check:
        order = variety.ext.order
        _, everything = count_spread_lines_in(hypersurface)
        all_keys = {p.key(order) for p in everything}
        section_keys = set(point_keys(labels, order).tolist())
        outside = len(all_keys - section_keys)
        check = set(point_keys(contained, order).tolist()) == all_keys & section_keys
    logger.info(
        "%s in %s: %d of %d infinity lines contained",
        variety.tag.value,
        hypersurface.tag.value,
        len(contained),
        len(labels),
    )
    return ContainmentSplit(contained, not_contained, outside, check)


def partition_check(labels, target):
    """
    Do the spread lines of ``labels`` partition the point set of ``target``?

    True iff the lines are pairwise disjoint, lie on ``target`` and cover it.
    """
    ext = target.ext
    q = ext.q
    labels = np.asarray(labels, dtype=np.int64).reshape(-1, 4)
    keys = point_keys(spread_points_array(labels, ext).reshape(-1, 7), q)
    unique = np.unique(keys)
    target_keys = np.unique(point_keys(target.points(), q))
    disjoint = len(unique) == len(keys)
    contained = bool(np.isin(unique, target_keys).all())
    covers = bool(np.array_equal(unique, target_keys))
    ok = disjoint and contained and covers and len(target_keys) == len(labels) * (q + 1)
    return PartitionResult(ok, len(labels), len(unique), len(target_keys), disjoint, contained, covers)


def q1q2q3_audit(hypersurface):
    """
    Check conditions Q1, Q2 and Q3 for a cone of PG(6,q).

    Quadratic cones use their singular points and the base quadric on
    ``x0, x1, x2, x3, x4, x6``.  For the non-quadratic C_eps, Q1 means
    that ``V`` is a vertex and Q2 is ``None``.
    """
    ext = hypersurface.ext
    q = ext.q
    axis = set(spread_line(P_INF, ext).points)
    if hypersurface.quadratic:
        q1 = any(p in axis for p in singular_points(hypersurface.form))
        q2 = classify_quadric(hypersurface.form.restrict(BASE_COORDINATES)).kind == "hyperbolic"
    else:
        q1 = VERTEX in axis and vertex_closed(hypersurface)
        q2 = None
    labels = infinity_labels(ext)
    inside = labels[lines_contained(hypersurface, labels)]
    union = np.unique(point_keys(spread_points_array(inside, ext).reshape(-1, 7), q))
    q3 = bool(np.array_equal(union, np.sort(point_keys(hypersurface.at_infinity(), q))))
    logger.debug("%s: Q1=%s Q2=%s Q3=%s", hypersurface.tag.value, q1, q2, q3)
    return Audit(q1, q2, q3)


def gcd_check(e):
    """
    ``gcd(2^((e+1)/2) + 2, 2^e - 1)``.

    RAISES

    EvenE
        for even ``e``.
    InvalidParams
        for ``e < 3``.
    """
    if e % 2 == 0:
        raise EvenE(f"e={e} is even")
    if e < 3:
        raise InvalidParams(f"e={e} must be greater than 1")
    return int(igcd(2 ** ((e + 1) // 2) + 2, 2**e - 1))


# -----------------------------------------------------------------------------
# :copyright: (c) 2024-2026, qhvar developers
#
# Distributed under the terms of the license in the file LICENSE.txt,
# distributed with this software.
# -----------------------------------------------------------------------------
