import pandas
import pytest

from .. import PRT_Table
from .. import ResourceLimit
from .. import TableStyle
from .. import atomic_write
from .. import check_available_memory
from .. import dictionary_table
from .. import make_table
from .. import rss_mem


def test_dictionary_table():
    table = dictionary_table(dict(q=3, a="1,1", b="0,1"))
    received = str(table).strip().splitlines()
    assert received[1].split() == ["key", "value"]
    assert [line.split() for line in received[3:6]] == [["a", "1,1"], ["b", "0,1"], ["q", "3"]]
    assert dictionary_table({}) is None


@pytest.mark.parametrize(
    "table_style, klass",
    [
        [TableStyle.pandas, pandas.DataFrame],
        [TableStyle.pyRestTable, PRT_Table],
    ],
)
def test_make_table(table_style, klass):
    table = make_table(["size", "hyperplanes"], [(28, 540), (37, 280)], table_style)
    assert isinstance(table, klass)
    if table_style == TableStyle.pandas:
        assert list(table.columns) == ["size", "hyperplanes"]
        assert table["hyperplanes"].sum() == 820
    else:
        assert "540" in repr(table)
        assert len(table.rows) == 2


def test_atomic_write(tmp_path):
    path = tmp_path / "sub" / "report.txt"
    assert atomic_write(path, "first\n") == path
    atomic_write(path, "second\n")
    assert path.read_text() == "second\n"
    assert sorted(p.name for p in path.parent.iterdir()) == ["report.txt"]


def test_rss_mem():
    assert rss_mem().rss > 0


def test_check_available_memory():
    check_available_memory(1024, "small")
    with pytest.raises(ResourceLimit) as exinfo:
        check_available_memory(1 << 62, "huge")
    assert "huge" in str(exinfo.value)
    assert isinstance(exinfo.value, MemoryError)
