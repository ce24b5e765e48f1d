import json

import numpy as np
import pytest

from ...fields import make_extension
from ...geometry.projective import points_array
from ...geometry.varieties import BMParams
from ...geometry.varieties import VarietySpec
from ...geometry.varieties import VarietyTag
from ...geometry.varieties import bm_validate
from ...geometry.varieties import bt_params
from ...geometry.varieties import least_valid_params
from ...geometry.varieties import tangent_hermitian_matrix
from ..two_character import CheckpointMismatch
from ..two_character import intersection_sizes
from ..two_character import shard_ranges
from ..two_character import two_character_report
from ..two_character import two_character_scan


def mab(q):
    ext = make_extension(q)
    return VarietySpec(VarietyTag.mab, ext, least_valid_params(ext))


def test_intersection_sizes():
    ext = make_extension(3)
    points = points_array(3, 9)
    sizes = intersection_sizes(points[:5], points, ext)
    # every plane of PG(3,9) has 91 points
    assert sizes.tolist() == [91] * 5
    assert intersection_sizes(points[:3], points[:0], ext).tolist() == [0, 0, 0]


def test_shard_ranges():
    assert shard_ranges(10, 4) == [(0, 4), (4, 8), (8, 10)]
    assert shard_ranges(4, 4) == [(0, 4)]


@pytest.mark.parametrize(
    "q, histogram",
    [
        [3, {28: 540, 37: 280}],
        [4, {65: 3264, 81: 1105}],
    ],
)
def test_full_scan(q, histogram):
    result = two_character_scan(mab(q))
    assert result.counts == histogram
    assert result.complete


def test_full_scan_checkpoint(tmp_path):
    checkpoint = tmp_path / "shards.json"
    variety = mab(3)
    first = two_character_scan(variety, checkpoint=checkpoint, shard_size=100)
    done = json.loads(checkpoint.read_text())
    assert len(done["shards"]) == 9
    assert "800-820" in done["shards"]
    assert done["header"]["variety"] == variety.describe()
    assert done["header"]["shard_size"] == 100
    assert done["header"]["total"] == 820
    # every shard is now read back from the checkpoint
    second = two_character_scan(variety, checkpoint=checkpoint, shard_size=100)
    assert second == first


def test_checkpoint_of_another_variety(tmp_path):
    checkpoint = tmp_path / "shards.json"
    ext = make_extension(3)
    two_character_scan(VarietySpec(VarietyTag.fcone, ext), checkpoint=checkpoint)
    before = checkpoint.read_text()
    with pytest.raises(CheckpointMismatch):
        two_character_report(mab(3), checkpoint=checkpoint)
    assert checkpoint.read_text() == before


@pytest.mark.parametrize(
    "field, value",
    [
        ["shard_size", 200],
        ["total", 821],
        ["modulus", "x^2+1"],
    ],
)
def test_checkpoint_of_another_scan(tmp_path, field, value):
    checkpoint = tmp_path / "shards.json"
    two_character_scan(mab(3), checkpoint=checkpoint, shard_size=100)
    data = json.loads(checkpoint.read_text())
    data["header"][field] = value
    checkpoint.write_text(json.dumps(data))
    with pytest.raises(CheckpointMismatch):
        two_character_scan(mab(3), checkpoint=checkpoint, shard_size=100)


def test_checkpoint_of_another_shard_size(tmp_path):
    checkpoint = tmp_path / "shards.json"
    two_character_scan(mab(3), checkpoint=checkpoint, shard_size=100)
    with pytest.raises(CheckpointMismatch):
        two_character_scan(mab(3), checkpoint=checkpoint, shard_size=200)


def test_checkpoint_without_header(tmp_path):
    checkpoint = tmp_path / "shards.json"
    checkpoint.write_text(json.dumps({"0-820": {"counts": {"28": 540}, "scanned": 820, "total": 820}}))
    with pytest.raises(CheckpointMismatch):
        two_character_scan(mab(3), checkpoint=checkpoint)


def test_full_scan_every_valid_pair_q3():
    ext = make_extension(3)
    pairs = [
        BMParams(ext, a, b)
        for a in ext.elements()
        for b in ext.elements()
        if bm_validate(BMParams(ext, a, b))
    ]
    assert len(pairs) == 24
    for params in pairs:
        variety = VarietySpec(VarietyTag.mab, ext, params)
        points = variety.points()
        result = two_character_scan(variety, points=points)
        assert result.counts == {28: 540, 37: 280}, params.as_dict()
        assert result.sanity(len(points))


def test_full_scan_workers():
    result = two_character_scan(mab(3), workers=2, shard_size=200)
    assert result.counts == {28: 540, 37: 280}


def test_sampled_scan():
    variety = mab(4)
    result = two_character_scan(variety, mode="sampled", sample=500, seed=7)
    assert result.scanned == 500
    assert not result.complete
    assert set(result.counts) <= {65, 81}
    again = two_character_scan(variety, mode="sampled", sample=500, seed=7)
    assert again == result


def test_sampled_scan_bt():
    bt = bt_params(3)
    variety = VarietySpec(VarietyTag.heps, bt.ext, bt)
    result = two_character_scan(variety, mode="sampled", sample=200, seed=1)
    assert set(result.counts) <= {513, 577}


def test_scan_bad_mode():
    with pytest.raises(ValueError) as exinfo:
        two_character_scan(mab(3), mode="partial", points=np.zeros((0, 4), dtype=np.int64))
    assert "partial" in str(exinfo.value)


@pytest.mark.parametrize("q", [3, 4])
def test_two_character_report(q):
    report = two_character_report(mab(q))
    assert report.passed
    assert report.claim == "two-character"
    assert report.measured["points"] == (q * q + 1) * (q**3 + 1)
    assert len(report.expected["counts"]) == 2


def test_two_character_report_hermitian():
    ext = make_extension(3)
    variety = VarietySpec(VarietyTag.hermitian, ext, tangent_hermitian_matrix(ext.epsilon, ext))
    report = two_character_report(variety)
    assert report.passed
    assert report.measured["counts"] == {"28": 540, "37": 280}


def test_two_character_report_fails_on_cone():
    ext = make_extension(3)
    report = two_character_report(VarietySpec(VarietyTag.fcone, ext))
    assert not report.passed
