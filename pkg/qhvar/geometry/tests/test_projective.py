import itertools

import numpy as np
import pytest

from ...fields import field_make
from ...fields import make_extension
from ..projective import DimensionMismatch
from ..projective import EqualPoints
from ..projective import Hyperplane
from ..projective import ProjPoint
from ..projective import ZeroVector
from ..projective import count_points
from ..projective import enum_hyperplanes
from ..projective import enum_points
from ..projective import incident
from ..projective import line_through
from ..projective import normalize
from ..projective import point_keys
from ..projective import points_array
from ..projective import points_at
from ..projective import vnormalize


@pytest.fixture(scope="function")
def gf5():
    return field_make(5)


@pytest.mark.parametrize(
    "raw, expected",
    [
        [(2, 4, 0), (1, 2, 0)],
        [(0, 0, 3), (0, 0, 1)],
        [(1, 3, 4, 2), (1, 3, 4, 2)],
    ],
)
def test_normalize(raw, expected, gf5):
    assert normalize(raw, gf5) == ProjPoint(expected)


def test_normalize_zero(gf5):
    with pytest.raises(ZeroVector):
        normalize((0, 0, 0), gf5)
    with pytest.raises(ZeroVector):
        vnormalize([[1, 2], [0, 0]], gf5)


def test_normalize_orbits_pg23():
    gf3 = field_make(3)
    found = set()
    for raw in itertools.product(range(3), repeat=3):
        if not any(raw):
            continue
        point = normalize(raw, gf3)
        assert normalize(point.coords, gf3) == point
        for scalar in (1, 2):
            assert normalize([gf3.mul(scalar, c) for c in raw], gf3) == point
        found.add(point)
    assert found == set(enum_points(2, gf3))
    assert len(found) == 13


@pytest.mark.parametrize(
    "n, q, total",
    [
        [1, 2, 3],
        [3, 9, 820],
        [6, 3, 1093],
        [5, 3, 364],
        [3, 64, 266305],
    ],
)
def test_count_points(n, q, total):
    assert count_points(n, q) == total


@pytest.mark.parametrize("n, q", [[1, 2], [2, 3], [3, 4], [6, 3]])
def test_points_array_order(n, q):
    points = points_array(n, q)
    assert len(points) == count_points(n, q)
    keys = point_keys(points, q)
    assert (np.diff(keys) > 0).all()
    lead = np.argmax(points != 0, axis=1)
    assert (points[np.arange(len(points)), lead] == 1).all()


def test_points_at():
    everything = points_array(3, 4)
    index = np.array([84, 0, 21, 5, 83])
    assert (points_at(3, 4, index) == everything[index]).all()
    assert points_at(3, 4, []).shape == (0, 4)


def test_pg12_stream():
    gf2 = field_make(2)
    assert [p.coords for p in enum_points(1, gf2)] == [(0, 1), (1, 0), (1, 1)]


def test_restartable_stream():
    gf3 = field_make(3)
    everything = list(enum_points(3, gf3))
    assert list(enum_points(3, gf3, start=17, stop=33)) == everything[17:33]
    assert [h.coords for h in enum_hyperplanes(3, gf3, start=5, stop=8)] == [p.coords for p in everything[5:8]]
    assert (points_array(3, 3, 30, 40) == points_array(3, 3)[30:40]).all()


@pytest.mark.parametrize(
    "point, hyperplane, expected",
    [
        [(1, 0, 0, 0), (0, 0, 0, 1), True],
        [(1, 1, 0, 0), (1, 4, 0, 0), True],
        [(1, 0, 0, 0), (1, 0, 0, 0), False],
    ],
)
def test_incident(point, hyperplane, expected, gf5):
    assert incident(ProjPoint(point), Hyperplane(hyperplane), gf5) == expected


def test_incident_dimension(gf5):
    with pytest.raises(DimensionMismatch):
        incident(ProjPoint((1, 0, 0)), Hyperplane((1, 0, 0, 0)), gf5)


def test_hyperplanes_per_point_pg39():
    gf9 = make_extension(3)
    hyperplanes = points_array(3, 9)
    for point in ((1, 0, 0, 0), (0, 0, 0, 1), (1, 4, 7, 2)):
        products = [gf9.vmul(hyperplanes[:, i], c) for i, c in enumerate(point)]
        values = gf9.vsum(products)
        assert int((values == 0).sum()) == 91


def test_line_through():
    gf2 = field_make(2)
    line = line_through(ProjPoint((1, 0, 0)), ProjPoint((0, 1, 0)), gf2)
    assert line == {ProjPoint((1, 0, 0)), ProjPoint((0, 1, 0)), ProjPoint((1, 1, 0))}

    gf3 = field_make(3)
    vertex = ProjPoint((0, 0, 0, 0, 0, 1, 0))
    line = line_through(vertex, ProjPoint((1, 0, 0, 0, 0, 0, 0)), gf3)
    assert len(line) == 4
    assert line == {vertex} | {ProjPoint((1, 0, 0, 0, 0, c, 0)) for c in range(3)}

    with pytest.raises(EqualPoints):
        line_through(vertex, vertex, gf3)


def test_serialize():
    point = ProjPoint((0, 1, 2, 0))
    assert point.serialize() == "0:1:2:0"
    assert ProjPoint.parse("0:1:2:0") == point
    assert point.key(3) == 0 * 27 + 1 * 9 + 2 * 3 + 0
