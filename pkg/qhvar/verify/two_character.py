"""
Hyperplane scans of PG(3,q^2)
+++++++++++++++++++++++++++++++++++++++

Each hyperplane of PG(3,q^2) is met by the variety in some number of
points; a quasi-Hermitian variety shows exactly two numbers,
``q^3+1`` and ``q^3+q^2+1`` (for r = 3).

Hyperplanes are the points of the dual stream.  A full scan splits the
stream into shards; shards run in worker processes (``spawn`` context)
and finished shards are checkpointed to a JSON file so interrupted runs
resume.  A sampled scan draws ``n`` distinct hyperplane indices from
``numpy.random.default_rng(seed)``.

.. autosummary::

   ~CheckpointMismatch
   ~checkpoint_header
   ~intersection_sizes
   ~scan_range
   ~shard_ranges
   ~two_character_scan
   ~two_character_report
"""

import concurrent.futures
import json
import logging
import multiprocessing
import pathlib

import numpy as np

from ..fields import format_modulus
from ..geometry.projective import count_points
from ..geometry.projective import points_array
from ..geometry.projective import points_at
from ..geometry.varieties import VarietyTag
from ..geometry.varieties import expected_histogram
from ..geometry.varieties import expected_intersection_sizes
from ..utils import atomic_write
from ..utils import check_available_memory
from .report import IntersectionHistogram
from .report import VerificationReport

logger = logging.getLogger(__name__)

BATCH_BYTES = 1 << 26
SHARD_SIZE = 4096


def intersection_sizes(hyperplanes, points, ext):
    """
    Number of ``points`` on each row of ``hyperplanes`` (both integer arrays).

    Hyperplanes are handled in batches bounded by ``BATCH_BYTES``.
    """
    hyperplanes = np.asarray(hyperplanes, dtype=np.int64)
    points = np.asarray(points, dtype=np.int64)
    n = max(len(points), 1)
    batch = max(1, BATCH_BYTES // (8 * n))
    check_available_memory(3 * min(batch, len(hyperplanes)) * n * 8, "hyperplane batch")
    sizes = np.empty(len(hyperplanes), dtype=np.int64)
    for first in range(0, len(hyperplanes), batch):
        block = hyperplanes[first : first + batch]
        dot = np.zeros((len(block), len(points)), dtype=np.int64)
        for i in range(points.shape[1]):
            dot = ext.vadd(dot, ext.vmul(block[:, i, None], points[None, :, i]))
        sizes[first : first + len(block)] = (dot == 0).sum(axis=1)
    return sizes


def scan_range(points, ext, start, stop):
    """Sizes of the hyperplanes ``start .. stop-1`` of the dual stream."""
    return intersection_sizes(points_array(3, ext.order, start, stop), points, ext)


def _scan_shard(points, ext, start, stop):
    sizes = scan_range(points, ext, start, stop)
    values, counts = np.unique(sizes, return_counts=True)
    return start, stop, {int(v): int(c) for v, c in zip(values, counts)}


def shard_ranges(total, shard_size=SHARD_SIZE):
    """Consecutive ``(start, stop)`` ranges covering ``0 .. total-1``."""
    return [(first, min(first + shard_size, total)) for first in range(0, total, shard_size)]


class CheckpointMismatch(ValueError):
    """
    A checkpoint file was written by a different scan.

    .. index:: qhvar Exception; CheckpointMismatch
    """


def checkpoint_header(variety, total, shard_size):
    """What a checkpoint file is bound to: the variety, its field, the sharding."""
    header = dict(
        variety=variety.describe(),
        modulus=format_modulus(variety.ext.base.modulus),
        shard_size=int(shard_size),
        total=int(total),
    )
    if variety.tag == VarietyTag.hermitian:
        header["matrix"] = [[int(c) for c in row] for row in variety.params]
    # as read back from JSON
    return json.loads(json.dumps(header))


def _load_checkpoint(path, header):
    if path is None or not pathlib.Path(path).exists():
        return {}
    with open(path) as fp:
        data = json.load(fp)
    if not isinstance(data, dict) or data.get("header") != header:
        raise CheckpointMismatch(f"checkpoint {path} was written by another scan, expected {header}")
    done = data.get("shards", {})
    logger.info("resuming from %s: %d shard(s) done", path, len(done))
    return done


def _save_checkpoint(path, header, done):
    if path is not None:
        atomic_write(path, json.dumps(dict(header=header, shards=done), sort_keys=True))


def _full_scan(points, ext, histogram, workers, checkpoint, shard_size, header):
    total = histogram.total
    done = _load_checkpoint(checkpoint, header)
    pending = []
    for start, stop in shard_ranges(total, shard_size):
        key = f"{start}-{stop}"
        if key in done:
            histogram.merge(IntersectionHistogram.from_dict(histogram.q, done[key]))
        else:
            pending.append((start, stop))

    def record(start, stop, counts):
        part = IntersectionHistogram(histogram.q, total)
        part.counts.update(counts)
        part.scanned = stop - start
        histogram.merge(part)
        done[f"{start}-{stop}"] = part.as_dict()
        _save_checkpoint(checkpoint, header, done)
        logger.info("hyperplanes %d..%d done (%d/%d)", start, stop - 1, histogram.scanned, total)

    if workers <= 1 or len(pending) <= 1:
        for start, stop in pending:
            record(*_scan_shard(points, ext, start, stop))
        return histogram

    context = multiprocessing.get_context("spawn")
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers, mp_context=context) as pool:
        futures = [pool.submit(_scan_shard, points, ext, start, stop) for start, stop in pending]
        for future in concurrent.futures.as_completed(futures):
            record(*future.result())
    return histogram


def _sampled_scan(points, ext, histogram, n, seed):
    rng = np.random.default_rng(seed)
    picks = np.sort(rng.choice(histogram.total, size=min(n, histogram.total), replace=False))
    logger.info("sampling %d of %d hyperplanes (seed %d)", len(picks), histogram.total, seed)
    for first in range(0, len(picks), SHARD_SIZE):
        index = picks[first : first + SHARD_SIZE]
        histogram.add(intersection_sizes(points_at(3, ext.order, index), points, ext))
    return histogram


def two_character_scan(
    variety,
    mode="full",
    sample=10_000,
    seed=0,
    workers=1,
    checkpoint=None,
    points=None,
    shard_size=SHARD_SIZE,
):
    """
    Tally hyperplane intersection sizes of ``variety``.

    PARAMETERS

    variety
        *VarietySpec* :
        any supported variety of PG(3,q^2)
    mode
        *str* :
        ``"full"`` (every hyperplane) or ``"sampled"``
    sample, seed
        *int* :
        sample size and generator seed for ``mode="sampled"``
    workers
        *int* :
        worker processes for ``mode="full"``
    checkpoint
        *str* or ``None`` :
        JSON file of finished shards
    points
        *array* or ``None`` :
        the materialized variety, computed when not given

    RETURNS

    :class:`~qhvar.verify.report.IntersectionHistogram`
    """
    ext = variety.ext
    if points is None:
        points = variety.points()
    histogram = IntersectionHistogram(ext.q, count_points(3, ext.order))
    if mode == "full":
        header = checkpoint_header(variety, histogram.total, shard_size)
        _full_scan(points, ext, histogram, workers, checkpoint, shard_size, header)
    elif mode == "sampled":
        _sampled_scan(points, ext, histogram, sample, seed)
    else:
        raise ValueError(f"unknown scan mode {mode!r}")
    logger.info("%s over GF(%d^2): sizes %s", variety.tag.value, ext.q, histogram.sizes)
    return histogram


def two_character_report(variety, **kwargs):
    """
    Scan ``variety`` and judge the two-character property.

    A sampled scan passes when every observed size is one of the two
    expected sizes; a full scan must also match the expected counts and
    the double-counting identities.
    """
    ext = variety.ext
    report = VerificationReport("two-character", variety.describe())
    with report.timer():
        points = variety.points()
        histogram = two_character_scan(variety, points=points, **kwargs)
        sizes = sorted(expected_intersection_sizes(3, ext.q))
        report.measured = dict(histogram.as_dict(), points=len(points))
        report.expected = dict(sizes=sizes, points=(ext.q**2 + 1) * (ext.q**3 + 1))
        passed = set(histogram.counts) <= set(sizes) and len(points) == report.expected["points"]
        if histogram.complete:
            expected = expected_histogram(3, ext.q)
            report.expected["counts"] = {str(k): v for k, v in sorted(expected.items())}
            passed = passed and dict(histogram.counts) == expected and histogram.sanity(len(points))
        report.passed = passed
    return report


# -----------------------------------------------------------------------------
# :copyright: (c) 2024-2026, qhvar developers
#
# Distributed under the terms of the license in the file LICENSE.txt,
# distributed with this software.
# -----------------------------------------------------------------------------
