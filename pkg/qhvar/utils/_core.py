"""
Table output
+++++++++++++++++++++++++++++++++++++++

.. autosummary::

   ~PRT_Table
   ~TableStyle
   ~make_table
"""

from enum import Enum

import pandas
import pyRestTable


class PRT_Table(pyRestTable.Table):
    """Change the default from pyRestTable."""

    def __repr__(self):
        return str(self)


class TableStyle(Enum):
    """Describes what table style to use."""

    pandas = pandas.DataFrame
    pyRestTable = PRT_Table


def make_table(labels, rows, table_style=TableStyle.pyRestTable):
    """
    Build a table of ``rows`` (sequences matching ``labels``).

    Returns a ``pandas.DataFrame`` or a :class:`PRT_Table`.
    """
    if table_style == TableStyle.pandas:
        return pandas.DataFrame([list(row) for row in rows], columns=list(labels))
    table = table_style.value()
    table.labels = list(labels)
    for row in rows:
        table.addRow(list(row))
    return table
