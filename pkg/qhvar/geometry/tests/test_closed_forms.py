import pytest

from ..closed_forms import bm_unital_count
from ..closed_forms import bm_variety_count
from ..varieties import DomainError


@pytest.mark.parametrize(
    "p, n, expected",
    [
        [2, 2, 2],
        [5, 1, 3],
        [3, 2, 4],
        [7, 1, 4],
        [2, 3, 2],
    ],
)
def test_bm_unital_count(p, n, expected):
    assert bm_unital_count(p, n) == expected


@pytest.mark.parametrize(
    "p, n, expected",
    [
        [3, 2, 4],
        [5, 1, 3],
        [3, 1, 1],
    ],
)
def test_bm_variety_count(p, n, expected):
    assert bm_variety_count(p, n) == expected


@pytest.mark.parametrize("p, n", [[2, 1], [3, 1]])
def test_bm_unital_count_small_q(p, n):
    with pytest.raises(DomainError) as exinfo:
        bm_unital_count(p, n)
    assert "< 4" in str(exinfo.value)


def test_bm_variety_count_even():
    with pytest.raises(DomainError):
        bm_variety_count(2, 3)
