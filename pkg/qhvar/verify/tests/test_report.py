import json

import pandas
import pytest

from ...utils import TableStyle
from ..report import IntersectionHistogram
from ..report import VerificationReport
from ..report import reports_as_dict
from ..report import reports_table
from ..report import write_reports


@pytest.fixture(scope="function")
def histogram():
    h = IntersectionHistogram(3, 820)
    h.add([28] * 540)
    h.add([37] * 280)
    return h


@pytest.fixture(scope="function")
def reports():
    return [
        VerificationReport("alpha", dict(q=3), True, dict(count=1), dict(count=1), 0.25),
        VerificationReport("beta", dict(q=3), False, dict(count=2), dict(count=3), 1.5),
    ]


def test_histogram(histogram):
    assert histogram.sizes == [28, 37]
    assert histogram.scanned == 820
    assert histogram.complete
    assert histogram.sanity(280)
    assert not histogram.sanity(281)


def test_histogram_merge(histogram):
    other = IntersectionHistogram(3, 820)
    other.add([28, 28, 37])
    histogram.merge(other)
    assert histogram.counts == {28: 542, 37: 281}
    assert histogram.scanned == 823
    assert not histogram.complete


def test_histogram_round_trip(histogram):
    data = histogram.as_dict()
    assert data == {"counts": {"28": 540, "37": 280}, "scanned": 820, "total": 820}
    assert IntersectionHistogram.from_dict(3, json.loads(json.dumps(data))) == histogram


def test_histogram_table(histogram):
    frame = histogram.table(TableStyle.pandas)
    assert isinstance(frame, pandas.DataFrame)
    assert list(frame.columns) == ["size", "hyperplanes"]
    assert frame["hyperplanes"].sum() == 820
    text = str(histogram.table())
    assert "540" in text
    assert "size" in text


def test_report_as_dict(reports):
    data = reports[0].as_dict()
    assert "seconds" not in data
    assert data["pass"] is True
    assert reports[0].as_dict(timing=True)["seconds"] == 0.25
    assert reports_as_dict(reports)["pass"] is False
    assert "alpha" in str(reports[0])


def test_report_timer():
    report = VerificationReport("timed", {})
    with report.timer():
        report.passed = True
    assert report.seconds >= 0


def test_reports_table(reports):
    frame = reports_table(reports, TableStyle.pandas, timing=True)
    assert list(frame.columns) == ["claim", "pass", "measured", "expected", "seconds"]
    assert frame["claim"].tolist() == ["alpha", "beta"]


@pytest.mark.parametrize("fmt", ["json", "csv", "text"])
def test_write_reports(fmt, reports, tmp_path):
    first = write_reports(reports, tmp_path / f"one.{fmt}", fmt)
    second = write_reports(reports, tmp_path / f"two.{fmt}", fmt)
    assert first.read_bytes() == second.read_bytes()
    assert "beta" in first.read_text()


def test_write_reports_json(reports, tmp_path):
    path = write_reports(reports, tmp_path / "sub" / "out.json")
    data = json.loads(path.read_text())
    assert list(data) == ["pass", "reports"]
    assert data["reports"][1]["expected"] == {"count": 3}
    assert [p.name for p in path.parent.iterdir()] == ["out.json"]


def test_write_reports_bad_format(reports, tmp_path):
    with pytest.raises(ValueError) as exinfo:
        write_reports(reports, tmp_path / "out.xml", "xml")
    assert "unknown report format" in str(exinfo.value)
