import logging

import pytest

from ...fields import field_make
from ..linalg import determinant
from ..linalg import nullspace
from ..linalg import rank
from ..linalg import row_echelon

GF5 = field_make(5)


def test_determinant():
    assert determinant([[1, 2], [3, 4]], GF5) == 3
    assert determinant([[0, 1], [1, 0]], GF5) == 4
    assert determinant([[1, 2], [2, 4]], GF5) == 0
    with pytest.raises(ValueError):
        determinant([[1, 2, 3], [4, 0, 1]], GF5)


def test_rank_and_row_echelon():
    assert rank([[1, 2], [2, 4]], GF5) == 1
    rows, pivots, swaps = row_echelon([[0, 2], [1, 1]], GF5)
    assert rows == [[1, 0], [0, 1]]
    assert pivots == [0, 1]
    assert swaps == 1


def test_nullspace(caplog):
    caplog.set_level(logging.DEBUG, logger="qhvar.geometry.linalg")
    assert nullspace([[1, 2, 3]], GF5) == [[3, 1, 0], [2, 0, 1]]
    assert "dimension 2" in caplog.text
