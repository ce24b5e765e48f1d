"""
Support for logging
+++++++++++++++++++++++++++++++++++++++

Library modules only create loggers; handlers are attached by the
command-line entry point.

.. autosummary::

   ~configure_logging
   ~file_log_handler
   ~get_log_path
   ~stream_log_handler
"""

import logging
import pathlib
from logging import DEBUG
from logging import FileHandler
from logging import Formatter
from logging import StreamHandler
from logging.handlers import RotatingFileHandler

LOG_DIR_BASE = ".logs"
FILE_FORMAT = "|%(asctime)s|%(levelname)s|%(process)d|%(name)s|%(module)s|%(lineno)d|%(threadName)s| - %(message)s"
STREAM_FORMAT = "%(levelname)-.1s %(asctime)s - %(message)s"


def get_log_path(base=None):
    """
    Return a path to ``<base>/.logs``. Create directory if it does not exist.

    ``base`` defaults to the present working directory.
    """
    path = pathlib.Path(base or pathlib.Path.cwd()) / LOG_DIR_BASE
    path.mkdir(parents=True, exist_ok=True)
    return path


def file_log_handler(
    file_name_base,
    maxBytes=0,
    backupCount=0,
    log_path=None,
    level=None,
):
    """
    Record logging output to ``<log_path>/<file_name_base>.log``.

    PARAMETERS

    file_name_base : *str*
        Part of the name to store the log file.
    log_path : *str*
        Directory of the log file.
        default: :func:`get_log_path`
    level : *int* or *str*
        Threshold for reporting messages with this handler.
        default: ``logging.DEBUG``
    maxBytes : (optional) *int*
        Rollover size of the log file.  default: 0 (no rollover)
    backupCount : (optional) *int*
        Number of numbered backups kept after rollover.  default: 0

    .. note::  When either ``maxBytes`` or ``backupCount`` are zero,
        log file rollover never occurs.
    """
    log_path = pathlib.Path(log_path or get_log_path())
    log_file = log_path / f"{file_name_base}.log"

    if maxBytes > 0 or backupCount > 0:
        handler = RotatingFileHandler(log_file, maxBytes=maxBytes, backupCount=backupCount)
    else:
        handler = FileHandler(log_file)
    handler.setLevel(level or DEBUG)

    formatter = Formatter(FILE_FORMAT)
    formatter.default_msec_format = "%s.%03d"
    handler.setFormatter(formatter)
    return handler


def stream_log_handler(formatter=None, level="INFO"):
    """
    Record logging output to a stream (stderr).

    PARAMETERS

    formatter
        *object*:
        Instance of ``logging.Formatter``.
        (default: one-letter level, time, message)
    level
        *str*:
        Name of the logging level to report.
        (default: ``INFO``)
    """
    handler = StreamHandler()
    if formatter is None:
        formatter = Formatter(STREAM_FORMAT, datefmt="%a-%H:%M:%S")
        formatter.default_msec_format = "%s.%03d"
    handler.setFormatter(formatter)
    handler.setLevel(level)
    return handler


def configure_logging(level="WARNING", log_file=None, logger_name="qhvar"):
    """
    Attach a stream handler (and optionally a file handler) to the package logger.

    Returns the configured logger.
    """
    logger = logging.getLogger(logger_name)
    logger.setLevel(DEBUG)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    logger.addHandler(stream_log_handler(level=level))
    if log_file:
        logger.addHandler(file_log_handler(log_file))
    return logger
