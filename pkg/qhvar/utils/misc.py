"""
Miscellaneous Support
+++++++++++++++++++++++++++++++++++++++

.. autosummary::

   ~atomic_write
   ~dictionary_table
"""

import logging
import os
import pathlib
import tempfile

import pyRestTable

logger = logging.getLogger(__name__)


def dictionary_table(dictionary, **kwargs):
    """
    Return a text table from ``dictionary``.

    Dictionary keys in first column, values in second.

    RETURNS

    table
        *object* or ``None`` :
        ``pyRestTable.Table()`` object (multiline text table)
        or ``None`` if dictionary has no contents

    EXAMPLE::

        In [1]: print(dictionary_table(dict(q=3, a="1,1", b="0,1")))
        === =====
        key value
        === =====
        a   1,1
        b   0,1
        q   3
        === =====
    """
    if len(dictionary) == 0:
        return
    t = pyRestTable.Table()
    t.addLabel("key")
    t.addLabel("value")
    for k, v in sorted(dictionary.items()):
        t.addRow((k, str(v)))
    return t


def atomic_write(path, text):
    """Write ``text`` to ``path`` through a temporary file and a rename."""
    path = pathlib.Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fp:
            fp.write(text)
        os.replace(tmp, path)
    except BaseException:
        pathlib.Path(tmp).unlink(missing_ok=True)
        raise
    logger.debug("wrote %s", path)
    return path
