"""
Varieties of PG(3,q^2)
+++++++++++++++++++++++++++++++++++++++

Coordinates are ``(J, X, Y, Z)``; affine points have ``J = 1`` and are
written ``(1, x, y, z)``.  Points at infinity have ``J = 0``; ``P_inf`` is
``(0, 0, 0, 1)``.

Point sets are numpy arrays of normalized rows, sorted by
:func:`~qhvar.geometry.projective.point_keys` and duplicate-free.

.. autosummary::

   ~BMParams
   ~BTParams
   ~VarietySpec
   ~VarietyTag
   ~bab_member
   ~bm_validate
   ~bt_params
   ~delta_eps
   ~expected_histogram
   ~expected_intersection_sizes
   ~fcone_member
   ~gamma_eps
   ~heps_points
   ~hermitian_member
   ~least_valid_params
   ~mab_points
   ~tangent_hermitian_matrix
   ~veps_member
   ~InvalidParams
   ~NotHermitianMatrix
   ~SingularMatrix
   ~DomainError
"""

import dataclasses
import logging
from enum import Enum

import numpy as np

from ..fields import make_extension
from ..utils.memory import check_available_memory
from .linalg import determinant
from .projective import count_points
from .projective import point_keys
from .projective import points_array

logger = logging.getLogger(__name__)


class InvalidParams(ValueError):
    """
    Variety parameters violate their defining conditions.

    .. index:: qhvar Exception; InvalidParams
    """


class NotHermitianMatrix(ValueError):
    """
    Matrix is not equal to its conjugate transpose.

    .. index:: qhvar Exception; NotHermitianMatrix
    """


class SingularMatrix(ArithmeticError):
    """
    Matrix has determinant zero.

    .. index:: qhvar Exception; SingularMatrix
    """


class DomainError(ValueError):
    """
    Arguments outside the domain of a counting formula.

    .. index:: qhvar Exception; DomainError
    """


class VarietyTag(Enum):
    """Point sets of PG(3,q^2) known to :class:`VarietySpec`."""

    hermitian = "hermitian"
    bab = "bab"
    fcone = "fcone"
    mab = "mab"
    veps = "veps"
    heps = "heps"


@dataclasses.dataclass(frozen=True)
class BMParams:
    """Parameters ``a``, ``b`` (GF(q^2) encodings) of the BM surface B_{a,b}."""

    ext: object
    a: int
    b: int

    @property
    def q(self):
        return self.ext.q

    @property
    def odd(self):
        return self.ext.odd

    @property
    def components(self):
        """``(a0, a1, b0, b1)``."""
        return self.ext.split(self.a) + self.ext.split(self.b)

    def as_dict(self):
        a0, a1, b0, b1 = self.components
        return dict(q=self.q, delta=self.ext.delta, a=f"{a0},{a1}", b=f"{b0},{b1}")


@dataclasses.dataclass(frozen=True)
class BTParams:
    """
    Parameters of the BT variety: ``q = 2**e``, ``e`` odd and greater than 1.

    ``sigma`` is the integer exponent ``2**((e+1)/2)`` of the automorphism
    ``x -> x**sigma`` of GF(q).
    """

    ext: object
    e: int

    @property
    def q(self):
        return self.ext.q

    @property
    def sigma(self):
        return 2 ** ((self.e + 1) // 2)

    @property
    def root_order(self):
        """Order ``2**((e-1)/2) + 1`` of the roots of unity defining the infinity lines."""
        return 2 ** ((self.e - 1) // 2) + 1

    def as_dict(self):
        return dict(q=self.q, e=self.e, delta=self.ext.delta, sigma=self.sigma)


def bt_params(e, delta=None, modulus=None):
    """
    Build :class:`BTParams` for ``q = 2**e``.

    RAISES

    InvalidParams
        when ``e`` is even or ``e <= 1``.
    """
    if e <= 1 or e % 2 == 0:
        raise InvalidParams(f"BT varieties need e odd and e > 1, received e={e}")
    ext = make_extension(p=2, e=e, delta=delta, modulus=modulus)
    return BTParams(ext, e)


def sigma_squares_to_frobenius(bt):
    """True iff ``(x**sigma)**sigma == x**2`` for every x in GF(q)."""
    fq = bt.ext.base
    return all(fq.power(fq.power(x, bt.sigma), bt.sigma) == fq.power(x, 2) for x in fq.elements())


def expected_intersection_sizes(r, q):
    """
    Hyperplane intersection sizes of a quasi-Hermitian variety of PG(r,q^2).

    The first is ``|H(r-1,q^2)|``, the second adds ``(-1)**(r-1) * q**(r-1)``.
    """
    sign = (-1) ** (r - 1)
    first = (q**r + sign) * (q ** (r - 1) - sign) // (q * q - 1)
    return first, first + sign * q ** (r - 1)


def hermitian_size(r, q):
    """``|H(r,q^2)|``."""
    return expected_intersection_sizes(r + 1, q)[0]


def expected_histogram(r, q):
    """
    Hyperplane counts ``{size: count}`` forced by the double count.

    ``n1 + n2 = #hyperplanes`` and ``s1*n1 + s2*n2 = |V| * #hyperplanes through a point``.
    """
    s1, s2 = expected_intersection_sizes(r, q)
    total = count_points(r, q * q)
    through = count_points(r - 1, q * q)
    n2 = (hermitian_size(r, q) * through - s1 * total) // (s2 - s1)
    return {s1: total - n2, s2: n2}


# BM surfaces and the cone F


def bm_validate(params, r=3):
    """
    Parameter conditions for the BM variety of PG(r,q^2).

    ``a != 0`` and ``b`` outside GF(q) are required.  For r odd: q odd needs
    ``4a^(q+1) + (b^q - b)^2 != 0``; q even has no condition.  The r-even
    branches are kept for completeness; only r = 3 is used.
    """
    ext = params.ext
    if params.a == 0 or ext.in_base(params.b):
        return False
    frob_b = ext.frobenius(params.b)
    if ext.odd:
        value = ext.add(ext.mul(4 % ext.p, ext.norm(params.a)), ext.power(ext.sub(frob_b, params.b), 2))
        if r % 2:
            return value != 0
        return value != 0 and not ext.base.is_square(value)
    if r % 2:
        return True
    ratio = ext.div(ext.norm(params.a), ext.power(ext.add(frob_b, params.b), 2))
    return ext.base.absolute_trace(ratio) == 0


def _require_valid(params):
    if not bm_validate(params):
        raise InvalidParams(f"(a, b) = ({params.a}, {params.b}) is not valid over GF({params.q}^2)")


def least_valid_params(ext):
    """The least valid ``(a, b)`` in the canonical ordering (``a`` first)."""
    for a in ext.elements():
        for b in ext.elements():
            params = BMParams(ext, a, b)
            if bm_validate(params):
                return params
    raise InvalidParams(f"no valid parameters over GF({ext.q}^2)")  # unreachable


def _coords(points):
    points = np.asarray(points, dtype=np.int64)
    return points[:, 0], points[:, 1], points[:, 2], points[:, 3]


def _bab_affine_value(params, x, y, z):
    ext = params.ext
    squares = ext.vadd(ext.vmul(x, x), ext.vmul(y, y))
    norms = ext.vadd(ext.vnorm(x), ext.vnorm(y))
    w = ext.vadd(z, ext.vmul(params.a, squares))
    return ext.vsub(w, ext.vmul(params.b, norms))


def bab_form(params, points):
    """Homogeneous B_{a,b} form evaluated row-wise."""
    ext = params.ext
    q = ext.q
    J, X, Y, Z = _coords(points)
    a_q = ext.frobenius(params.a)
    b_diff = ext.sub(ext.frobenius(params.b), params.b)
    terms = [
        ext.vmul(ext.vpow(Z, q), ext.vpow(J, q)),
        ext.vneg(ext.vmul(Z, ext.vpow(J, 2 * q - 1))),
        ext.vmul(a_q, ext.vadd(ext.vpow(X, 2 * q), ext.vpow(Y, 2 * q))),
        ext.vneg(ext.vmul(params.a, ext.vmul(ext.vadd(ext.vpow(X, 2), ext.vpow(Y, 2)), ext.vpow(J, 2 * q - 2)))),
        ext.vneg(ext.vmul(b_diff, ext.vmul(ext.vadd(ext.vnorm(X), ext.vnorm(Y)), ext.vpow(J, q - 1)))),
    ]
    return ext.vsum(terms)


def bab_affine_mask(params, points):
    """Affine rows whose ``z + a(x^2+y^2) - b(x^(q+1)+y^(q+1))`` lies in GF(q)."""
    _, x, y, z = _coords(points)
    value = _bab_affine_value(params, x, y, z)
    return params.ext.vsplit(value)[1] == 0


def bab_mask(params, points):
    J = _coords(points)[0]
    return np.where(J != 0, bab_affine_mask(params, points), bab_form(params, points) == 0)


def fcone_mask(ext, points):
    J, X, Y, _ = _coords(points)
    return (J == 0) & (ext.vadd(ext.vnorm(X), ext.vnorm(Y)) == 0)


def mab_mask(params, points):
    J = _coords(points)[0]
    return np.where(J != 0, bab_affine_mask(params, points), fcone_mask(params.ext, points))


def _single(point):
    coords = point.coords if hasattr(point, "coords") else tuple(point)
    return np.array([coords], dtype=np.int64)


def bab_member(params, point):
    """
    Membership in B_{a,b}: the trace condition for affine points, the
    homogeneous equation at infinity.

    RAISES

    InvalidParams
        for parameters rejected by :func:`bm_validate`.
    """
    _require_valid(params)
    return bool(bab_mask(params, _single(point))[0])


def fcone_member(point, ext):
    """True iff ``J = 0`` and ``X^(q+1) + Y^(q+1) = 0``."""
    return bool(fcone_mask(ext, _single(point))[0])


def infinity_points(ext):
    """All points of PG(3,q^2) with ``J = 0`` (the first block of the enumeration)."""
    return points_array(3, ext.order, 0, count_points(2, ext.order))


def _affine_grid(ext):
    xy = np.arange(ext.order, dtype=np.int64)
    x, y = np.meshgrid(xy, xy, indexing="ij")
    return x.ravel(), y.ravel()


def _solve_cosets(ext, x, y, offset):
    """Rows ``(1, x, y, offset + c)`` for every c in GF(q)."""
    q = ext.q
    n = len(x)
    check_available_memory(n * q * 4 * 8, f"{n * q:,} affine points")
    c = np.arange(q, dtype=np.int64)
    z = ext.vadd(np.repeat(offset, q), np.tile(c, n))
    return np.column_stack([np.ones(n * q, dtype=np.int64), np.repeat(x, q), np.repeat(y, q), z])


def bab_affine_points(params):
    """The q^5 affine points of B_{a,b}."""
    ext = params.ext
    x, y = _affine_grid(ext)
    offset = _bab_affine_value(params, x, y, np.zeros_like(x))
    return _solve_cosets(ext, x, y, ext.vneg(offset))


def sort_points(points, order):
    """Sort rows by key and drop duplicates."""
    points = np.asarray(points, dtype=np.int64)
    keys = point_keys(points, order)
    _, index = np.unique(keys, return_index=True)
    return points[index]


def fcone_points(ext):
    infinite = infinity_points(ext)
    return infinite[fcone_mask(ext, infinite)]


def mab_points(params):
    """
    M_{a,b}: affine points of B_{a,b} together with the cone F.

    RAISES

    InvalidParams
        for parameters rejected by :func:`bm_validate`.
    """
    _require_valid(params)
    ext = params.ext
    points = np.vstack([fcone_points(ext), bab_affine_points(params)])
    logger.debug("M_{a,b} over GF(%d^2): %d points", ext.q, len(points))
    return sort_points(points, ext.order)


def bab_points(params):
    """B_{a,b}: affine points together with the section at infinity."""
    _require_valid(params)
    ext = params.ext
    infinite = infinity_points(ext)
    infinite = infinite[bab_form(params, infinite) == 0]
    return sort_points(np.vstack([infinite, bab_affine_points(params)]), ext.order)


# BT varieties


def vdelta_eps(x, bt):
    ext = bt.ext
    q, s = ext.q, bt.sigma
    eps = ext.epsilon
    coefficient = ext.add(ext.power(eps, s), ext.power(eps, s + 2))
    terms = [
        ext.vmul(eps, ext.vpow(x, q * (s + 2))),
        ext.vmul(coefficient, ext.vpow(x, q * s + 2)),
        ext.vpow(x, s),
        ext.vmul(ext.add(1, eps), ext.vpow(x, 2)),
    ]
    return ext.vsum(terms)


def vgamma_eps(x, bt):
    ext = bt.ext
    q, s = ext.q, bt.sigma
    eps = ext.epsilon
    x = np.asarray(x, dtype=np.int64)
    trace = ext.vadd(ext.vpow(x, q), x)
    terms = [
        ext.vpow(ext.vadd(x, ext.vmul(trace, eps)), s + 2),
        ext.vpow(trace, s),
        ext.vmul(ext.vadd(ext.vpow(x, 2 * q), ext.vpow(x, 2)), eps),
        ext.vpow(x, q + 1),
        ext.vpow(x, 2),
    ]
    return ext.vsum(terms)


def delta_eps(x, bt):
    """``eps x^(q(s+2)) + (eps^s + eps^(s+2)) x^(qs+2) + x^s + (1+eps) x^2``, ``s = sigma``."""
    return int(vdelta_eps(np.array([x]), bt)[0])


def gamma_eps(x, bt):
    """``[x + (x^q+x) eps]^(s+2) + (x^q+x)^s + (x^(2q)+x^2) eps + x^(q+1) + x^2``, ``s = sigma``."""
    return int(vgamma_eps(np.array([x]), bt)[0])


def veps_affine_mask(bt, points):
    ext = bt.ext
    _, x, y, z = _coords(points)
    lhs = ext.vadd(ext.vfrobenius(z), z)
    rhs = ext.vadd(vgamma_eps(x, bt), vgamma_eps(y, bt))
    return lhs == rhs


def veps_infinity_mask(bt, points):
    """
    Infinity section of V_eps: ``P_inf`` and the lines ``Y = cX``, ``J = 0``,
    for the roots of unity ``c^m = 1``, ``m = 2^((e-1)/2) + 1``.

    Only ``c = 1`` exists when e = 1 mod 4; e = 3 mod 4 adds two more lines.
    """
    ext = bt.ext
    J, X, Y, Z = _coords(points)
    on_lines = (X == 1) & (ext.vpow(Y, bt.root_order) == 1)
    vertex = (X == 0) & (Y == 0)
    return (J == 0) & (on_lines | vertex)


def veps_mask(bt, points):
    J = _coords(points)[0]
    return np.where(J != 0, veps_affine_mask(bt, points), veps_infinity_mask(bt, points))


def heps_mask(bt, points):
    J = _coords(points)[0]
    return np.where(J != 0, veps_affine_mask(bt, points), fcone_mask(bt.ext, points))


def veps_member(bt, point):
    """Membership in V_eps (affine equation, infinity lines)."""
    return bool(veps_mask(bt, _single(point))[0])


def veps_affine_points(bt):
    """
    The q^5 affine points: ``z^q + z = g`` with ``g`` in GF(q) has the
    solutions ``z = c + eps*g``, ``c`` in GF(q).
    """
    ext = bt.ext
    x, y = _affine_grid(ext)
    g = ext.vadd(vgamma_eps(x, bt), vgamma_eps(y, bt))
    return _solve_cosets(ext, x, y, ext.vjoin(np.zeros_like(g), g))


def heps_points(bt):
    """H_eps: affine points of V_eps together with the cone F."""
    ext = bt.ext
    return sort_points(np.vstack([fcone_points(ext), veps_affine_points(bt)]), ext.order)


def veps_points(bt):
    ext = bt.ext
    infinite = infinity_points(ext)
    infinite = infinite[veps_infinity_mask(bt, infinite)]
    return sort_points(np.vstack([infinite, veps_affine_points(bt)]), ext.order)


# Hermitian varieties


def validate_hermitian_matrix(matrix, ext):
    """
    RAISES

    NotHermitianMatrix
        unless ``H[j][i] == H[i][j]^q`` for all i, j
    SingularMatrix
        when ``det(H) == 0``
    """
    n = len(matrix)
    for i in range(n):
        for j in range(n):
            if matrix[j][i] != ext.frobenius(matrix[i][j]):
                raise NotHermitianMatrix(f"H[{j}][{i}] != H[{i}][{j}]^q")
    if determinant(matrix, ext) == 0:
        raise SingularMatrix("Hermitian matrix is singular")


def hermitian_mask(matrix, ext, points):
    points = np.asarray(points, dtype=np.int64)
    conjugate = ext.vfrobenius(points)
    terms = []
    for i, row in enumerate(matrix):
        for j, h in enumerate(row):
            if h:
                terms.append(ext.vmul(conjugate[:, i], ext.vmul(h, points[:, j])))
    if not terms:
        return np.ones(len(points), dtype=bool)
    return ext.vsum(terms) == 0


def hermitian_member(point, matrix, ext):
    """
    True iff ``X^(q)T H X = 0``.

    RAISES

    NotHermitianMatrix, SingularMatrix
        see :func:`validate_hermitian_matrix`
    """
    validate_hermitian_matrix(matrix, ext)
    return bool(hermitian_mask(matrix, ext, _single(point))[0])


def tangent_hermitian_matrix(b, ext):
    """
    Hermitian matrix of ``z^q - z = (b^q - b)(x^(q+1) + y^(q+1))``.

    The variety is tangent to ``J = 0`` at ``P_inf``; its affine part is
    that of B_{0,b} and its infinity section is the cone F.
    """
    if ext.in_base(b):
        raise InvalidParams(f"b={b} lies in GF({ext.q})")
    if ext.odd:
        eps = ext.epsilon
        c = ext.neg(ext.mul(eps, ext.sub(ext.frobenius(b), b)))
        corner, other = eps, ext.neg(eps)
    else:
        c = ext.add(ext.frobenius(b), b)
        corner, other = 1, 1
    return (
        (0, 0, 0, other),
        (0, c, 0, 0),
        (0, 0, c, 0),
        (corner, 0, 0, 0),
    )


def hermitian_points(matrix, ext):
    validate_hermitian_matrix(matrix, ext)
    total = count_points(3, ext.order)
    check_available_memory(total * 4 * 8 * 4, f"scan of {total:,} points")
    points = points_array(3, ext.order)
    return points[hermitian_mask(matrix, ext, points)]


@dataclasses.dataclass(frozen=True)
class VarietySpec:
    """
    A tagged point set of PG(3,q^2).

    ``params`` is :class:`BMParams` (bab, mab), :class:`BTParams`
    (veps, heps), a Hermitian matrix (hermitian), or ``None`` (fcone).
    """

    tag: VarietyTag
    ext: object
    params: object = None

    def __post_init__(self):
        if self.tag in (VarietyTag.bab, VarietyTag.mab):
            _require_valid(self.params)
        elif self.tag == VarietyTag.hermitian:
            validate_hermitian_matrix(self.params, self.ext)

    def mask(self, points):
        tag = self.tag
        if tag == VarietyTag.bab:
            return bab_mask(self.params, points)
        if tag == VarietyTag.mab:
            return mab_mask(self.params, points)
        if tag == VarietyTag.fcone:
            return fcone_mask(self.ext, points)
        if tag == VarietyTag.veps:
            return veps_mask(self.params, points)
        if tag == VarietyTag.heps:
            return heps_mask(self.params, points)
        return hermitian_mask(self.params, self.ext, points)

    def contains(self, point):
        return bool(self.mask(_single(point))[0])

    def points(self):
        tag = self.tag
        if tag == VarietyTag.bab:
            return bab_points(self.params)
        if tag == VarietyTag.mab:
            return mab_points(self.params)
        if tag == VarietyTag.fcone:
            return fcone_points(self.ext)
        if tag == VarietyTag.veps:
            return veps_points(self.params)
        if tag == VarietyTag.heps:
            return heps_points(self.params)
        return hermitian_points(self.params, self.ext)

    def describe(self):
        info = dict(variety=self.tag.value, q=self.ext.q, delta=self.ext.delta)
        if isinstance(self.params, (BMParams, BTParams)):
            info.update(self.params.as_dict())
        return info

# -----------------------------------------------------------------------------
# :copyright: (c) 2024-2026, qhvar developers
#
# Distributed under the terms of the license in the file LICENSE.txt,
# distributed with this software.
# -----------------------------------------------------------------------------
