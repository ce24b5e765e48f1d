"""
Diagnostic Support for Memory
+++++++++++++++++++++++++++++++++++++++

.. autosummary::

   ~rss_mem
   ~check_available_memory
   ~ResourceLimit
"""

import logging
import os

import psutil

logger = logging.getLogger(__name__)


class ResourceLimit(MemoryError):
    """
    A requested enumeration would not fit in the available memory.

    .. index:: qhvar Exception; ResourceLimit
    """


def rss_mem():
    """return memory used by this process"""
    return psutil.Process(os.getpid()).memory_info()


def check_available_memory(nbytes, what="allocation"):
    """
    Raise :class:`ResourceLimit` when ``nbytes`` exceeds available memory.

    PARAMETERS

    nbytes
        *int* :
        estimated size of the planned allocation
    what
        *str* :
        description used in the message
    """
    available = psutil.virtual_memory().available
    logger.debug("%s: needs %d bytes, %d available, rss %d", what, nbytes, available, rss_mem().rss)
    if nbytes > available:
        raise ResourceLimit(f"{what} needs {nbytes:,} bytes, only {available:,} available")
