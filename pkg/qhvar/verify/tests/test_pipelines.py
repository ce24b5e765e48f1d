import json

import pytest

from ...fields import make_extension
from ...geometry.projective import ProjPoint
from ...geometry.varieties import bt_params
from ...geometry.varieties import least_valid_params
from ..pipelines import expected_bprime_lines
from ..pipelines import verify_bm
from ..pipelines import verify_bt
from ..report import write_reports

BM_CLAIMS = [
    "two-character",
    "bprime-correspondence",
    "base-quadric",
    "bprime-q1q2q3",
    "hermitian-cone-q1q2q3",
    "bprime-spread-lines",
    "infinity-bab",
    "infinity-mab",
]


def by_claim(reports):
    return {r.claim: r for r in reports}


@pytest.mark.parametrize(
    "q, expected",
    [
        [3, 1],
        [4, 17],
        [5, 51],
        [7, 1],
        [8, 65],
    ],
)
def test_expected_bprime_lines(q, expected):
    assert expected_bprime_lines(q) == expected


@pytest.mark.parametrize("q", [3, 4, 5])
def test_verify_bm(q):
    reports = verify_bm(least_valid_params(make_extension(q)))
    claims = [r.claim for r in reports]
    assert claims == BM_CLAIMS + (["fbar-partition"] if q % 2 else [])
    failed = [r.claim for r in reports if not r.passed]
    assert failed == []


def test_verify_bm_q3_values():
    reports = by_claim(verify_bm(least_valid_params(make_extension(3))))
    assert reports["two-character"].measured["counts"] == {"28": 540, "37": 280}
    assert reports["two-character"].params["a"] == "1,1"
    assert reports["two-character"].params["modulus"] == "0,1"
    assert reports["infinity-bab"].measured["labels"] == 19
    assert reports["infinity-bab"].measured["contained"] == 1
    assert reports["infinity-mab"].measured["labels"] == 37
    assert reports["fbar-partition"].measured["target_size"] == 148
    assert reports["base-quadric"].measured["kind"] == "hyperbolic"


def test_spread_labels_in_point_order():
    ext = make_extension(4)
    lines = by_claim(verify_bm(least_valid_params(ext)))["bprime-spread-lines"]
    labels = [ProjPoint.parse(text) for text in lines.measured["labels"]]
    assert len(labels) == 17
    keys = [p.key(ext.order) for p in labels]
    assert keys == sorted(keys)
    assert lines.measured["labels"] == lines.expected["labels"]


def test_verify_bm_sampled():
    reports = verify_bm(least_valid_params(make_extension(3)), mode="sampled", sample=100, seed=3)
    scan = by_claim(reports)["two-character"]
    assert scan.passed
    assert scan.measured["scanned"] == 100
    assert "counts" not in scan.expected
    assert scan.params["seed"] == 3


def test_verify_bm_reports_are_reproducible(tmp_path):
    params = least_valid_params(make_extension(3))
    first = write_reports(verify_bm(params), tmp_path / "first.json")
    second = write_reports(verify_bm(params), tmp_path / "second.json")
    assert first.read_bytes() == second.read_bytes()
    assert json.loads(first.read_text())["pass"] is True


def test_verify_bt_e3():
    reports = verify_bt(bt_params(3), sample=1000, seed=7)
    failed = [r.claim for r in reports if not r.passed]
    assert failed == []
    reports = by_claim(reports)
    assert reports["gcd"].measured["gcd"] == 1
    assert reports["union-of-lines"].measured["size"] == 37449
    assert reports["c3eps-spread-lines"].measured["count"] == 65
    assert reports["infinity-veps"].measured["labels"] == 193
    assert reports["infinity-veps"].measured["contained"] == 65
    assert reports["infinity-heps"].measured["labels"] == 577
    assert reports["infinity-heps"].measured["contained"] == 65
    assert set(reports["two-character"].measured["counts"]) <= {"513", "577"}


def test_verify_bt_e5():
    reports = verify_bt(bt_params(5))
    assert [r.claim for r in reports] == ["gcd", "sigma", "infinity-veps"]
    assert all(r.passed for r in reports)
    section = reports[-1]
    assert section.measured["labels"] == 32 * 32 + 1
    assert section.measured["contained"] == 32 * 32 + 1
    assert "two-character" in section.measured["not_run"]
