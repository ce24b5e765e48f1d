import numpy as np
import pytest

from ...fields import make_extension
from ..projective import ProjPoint
from ..projective import point_keys
from ..projective import points_array
from ..varieties import BMParams
from ..varieties import InvalidParams
from ..varieties import NotHermitianMatrix
from ..varieties import SingularMatrix
from ..varieties import VarietySpec
from ..varieties import VarietyTag
from ..varieties import bab_affine_points
from ..varieties import bab_member
from ..varieties import bab_points
from ..varieties import bm_validate
from ..varieties import bt_params
from ..varieties import delta_eps
from ..varieties import expected_histogram
from ..varieties import expected_intersection_sizes
from ..varieties import fcone_member
from ..varieties import gamma_eps
from ..varieties import heps_points
from ..varieties import hermitian_member
from ..varieties import least_valid_params
from ..varieties import mab_points
from ..varieties import sigma_squares_to_frobenius
from ..varieties import tangent_hermitian_matrix
from ..varieties import veps_member
from ..varieties import veps_points


@pytest.fixture(scope="function")
def gf9():
    return make_extension(3)


@pytest.fixture(scope="function")
def bt8():
    return bt_params(3)


def keys(points, order):
    return set(point_keys(points, order).tolist())


@pytest.mark.parametrize(
    "q, sizes",
    [
        [3, (28, 37)],
        [4, (65, 81)],
        [5, (126, 151)],
        [8, (513, 577)],
    ],
)
def test_expected_intersection_sizes(q, sizes):
    assert expected_intersection_sizes(3, q) == sizes


def test_expected_intersection_sizes_plane():
    # unitals of PG(2,q^2): lines meet in 1 or q+1 points
    assert expected_intersection_sizes(2, 3) == (4, 1)


@pytest.mark.parametrize(
    "q, histogram",
    [
        [3, {28: 540, 37: 280}],
        [4, {65: 3264, 81: 1105}],
    ],
)
def test_expected_histogram(q, histogram):
    assert expected_histogram(3, q) == histogram


def test_bm_validate_exhaustive_q3(gf9):
    f = gf9.base
    d = gf9.delta
    for a in gf9.elements():
        for b in gf9.elements():
            a0, a1 = gf9.split(a)
            b0, b1 = gf9.split(b)
            inner = f.sub(f.sub(f.mul(d, f.mul(a1, a1)), f.mul(d, f.mul(b1, b1))), f.mul(a0, a0))
            expected = a != 0 and b1 != 0 and inner != 0
            assert bm_validate(BMParams(gf9, a, b)) == expected, (a, b)


def test_bm_validate_even():
    gf16 = make_extension(4)
    assert bm_validate(BMParams(gf16, 1, 4))
    assert not bm_validate(BMParams(gf16, 0, 4))
    assert not bm_validate(BMParams(gf16, 1, 3))


@pytest.mark.parametrize(
    "q, a, b",
    [
        [3, (1, 1), (0, 1)],
        [4, (1, 0), (0, 1)],
        [5, (1, 0), (0, 1)],
        [7, (1, 0), (0, 1)],
        [8, (1, 0), (0, 1)],
    ],
)
def test_least_valid_params(q, a, b):
    ext = make_extension(q)
    params = least_valid_params(ext)
    assert (params.a, params.b) == (ext.join(*a), ext.join(*b))


@pytest.mark.parametrize("q", [3, 4])
def test_mab_size(q):
    params = least_valid_params(make_extension(q))
    points = mab_points(params)
    assert len(points) == (q * q + 1) * (q**3 + 1)
    assert (np.diff(point_keys(points, q * q)) > 0).all()


def test_mab_rejects_invalid(gf9):
    with pytest.raises(InvalidParams) as exinfo:
        mab_points(BMParams(gf9, 1, 3))
    assert "not valid" in str(exinfo.value)


def test_bab_and_mab_share_affine_points(gf9):
    params = least_valid_params(gf9)
    bab = bab_points(params)
    mab = mab_points(params)
    assert keys(bab[bab[:, 0] == 1], 9) == keys(mab[mab[:, 0] == 1], 9)
    assert len(bab) == 3**5 + 2 * 9 + 1


def test_bab_infinity_even():
    ext = make_extension(4)
    bab = bab_points(least_valid_params(ext))
    infinite = bab[bab[:, 0] == 0]
    assert len(infinite) == 16 + 1
    assert ((infinite[:, 1] == infinite[:, 2])).all()


def test_membership_matches_materialization(gf9):
    params = least_valid_params(gf9)
    everything = points_array(3, 9)
    for tag, points in ((VarietyTag.mab, mab_points(params)), (VarietyTag.bab, bab_points(params))):
        spec = VarietySpec(tag, gf9, params)
        assert keys(everything[spec.mask(everything)], 9) == keys(points, 9)
        assert (spec.points() == points).all()


@pytest.mark.parametrize(
    "point, expected",
    [
        [(1, 0, 0, 0), True],
        [(0, 0, 0, 1), True],
        [(0, 1, 0, 0), False],
    ],
)
def test_bab_member(point, expected, gf9):
    assert bab_member(least_valid_params(gf9), ProjPoint(point)) == expected


def test_bab_member_invalid(gf9):
    with pytest.raises(InvalidParams):
        bab_member(BMParams(gf9, 0, 3), (1, 0, 0, 0))


@pytest.mark.parametrize(
    "point, expected",
    [
        [(0, 0, 0, 1), True],
        [(0, 1, 0, 0), False],
        [(1, 0, 0, 0), False],
    ],
)
def test_fcone_member(point, expected, gf9):
    assert fcone_member(ProjPoint(point), gf9) == expected


def test_fcone_size(gf9):
    spec = VarietySpec(VarietyTag.fcone, gf9)
    assert len(spec.points()) == 9 * 4 + 1


def test_sigma(bt8):
    assert bt8.sigma == 4
    assert bt8.root_order == 3
    assert sigma_squares_to_frobenius(bt8)


@pytest.mark.parametrize("e", [0, 1, 2, 4])
def test_bt_params_rejects(e):
    with pytest.raises(InvalidParams):
        bt_params(e)


def test_gamma_eps(bt8):
    ext = bt8.ext
    f = ext.base
    assert gamma_eps(0, bt8) == 0
    for x in ext.elements():
        x1, x2 = ext.split(x)
        expected = f.sum([f.power(x1, 6), f.mul(x1, x2), f.power(x2, 4)])
        assert gamma_eps(x, bt8) == expected
    for x in f.elements():
        assert gamma_eps(x, bt8) == f.power(x, 6)


def test_delta_eps(bt8):
    ext = bt8.ext
    eps = ext.epsilon
    assert delta_eps(0, bt8) == 0
    assert delta_eps(1, bt8) == ext.add(ext.power(eps, 4), ext.power(eps, 6))


def test_heps_size(bt8):
    points = heps_points(bt8)
    assert len(points) == 65 * 513


def test_veps_infinity(bt8):
    points = veps_points(bt8)
    infinite = points[points[:, 0] == 0]
    assert len(infinite) == 3 * 64 + 1
    assert len(points) == 8**5 + 3 * 64 + 1


@pytest.mark.parametrize(
    "point, expected",
    [
        [(1, 0, 0, 0), True],
        [(0, 0, 0, 1), True],
        [(0, 1, 1, 5), True],
        [(0, 1, 0, 0), False],
    ],
)
def test_veps_member(point, expected, bt8):
    assert veps_member(bt8, ProjPoint(point)) == expected


def test_hermitian_member(gf9):
    identity = [[int(i == j) for j in range(4)] for i in range(4)]
    assert not hermitian_member(ProjPoint((1, 0, 0, 0)), identity, gf9)
    assert hermitian_member(ProjPoint((1, gf9.epsilon, 1, 0)), identity, gf9)


def test_hermitian_member_errors(gf9):
    eps = gf9.epsilon
    bad = [[eps, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    with pytest.raises(NotHermitianMatrix):
        hermitian_member(ProjPoint((1, 0, 0, 0)), bad, gf9)
    with pytest.raises(SingularMatrix):
        hermitian_member(ProjPoint((1, 0, 0, 0)), [[0] * 4 for _ in range(4)], gf9)


@pytest.mark.parametrize("q", [3, 4])
def test_tangent_hermitian_variety(q):
    ext = make_extension(q)
    b = ext.epsilon
    spec = VarietySpec(VarietyTag.hermitian, ext, tangent_hermitian_matrix(b, ext))
    points = spec.points()
    assert len(points) == (q * q + 1) * (q**3 + 1)
    affine = bab_affine_points(BMParams(ext, 0, b))
    assert keys(points[points[:, 0] == 1], q * q) == keys(affine, q * q)
    cone = VarietySpec(VarietyTag.fcone, ext).points()
    assert keys(points[points[:, 0] == 0], q * q) == keys(cone, q * q)


def test_describe(gf9):
    spec = VarietySpec(VarietyTag.mab, gf9, least_valid_params(gf9))
    info = spec.describe()
    assert info["variety"] == "mab"
    assert info["a"] == "1,1"
    assert info["b"] == "0,1"
