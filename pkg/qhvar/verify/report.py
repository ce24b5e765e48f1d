"""
Verification reports
+++++++++++++++++++++++++++++++++++++++

Every verification step produces a :class:`VerificationReport`; hyperplane
scans also produce an :class:`IntersectionHistogram`.  Reports are written
as JSON (sorted keys), CSV (through pandas) or text (pyRestTable), always
through :func:`~qhvar.utils.misc.atomic_write`.

.. autosummary::

   ~ClaimFailed
   ~IntersectionHistogram
   ~VerificationReport
   ~reports_as_dict
   ~render_reports
   ~reports_table
   ~write_reports
"""

import dataclasses
import json
import logging
import time
from collections import Counter
from contextlib import contextmanager

from ..utils import TableStyle
from ..utils import atomic_write
from ..utils import dictionary_table
from ..utils import make_table

logger = logging.getLogger(__name__)

FORMATS = ("json", "csv", "text")


class ClaimFailed(RuntimeError):
    """
    At least one verified claim did not hold.

    .. index:: qhvar Exception; ClaimFailed
    """


@dataclasses.dataclass
class IntersectionHistogram:
    """
    Hyperplane intersection sizes of a point set of PG(3,q^2).

    ``counts`` maps an intersection size to the number of hyperplanes met
    in that many points; ``total`` is the number of hyperplanes of the
    space and ``scanned`` the number actually examined.
    """

    q: int
    total: int
    counts: Counter = dataclasses.field(default_factory=Counter)
    scanned: int = 0

    def add(self, sizes):
        """Tally an iterable of per-hyperplane sizes."""
        before = sum(self.counts.values())
        self.counts.update(int(s) for s in sizes)
        self.scanned += sum(self.counts.values()) - before

    def merge(self, other):
        self.counts.update(other.counts)
        self.scanned += other.scanned
        return self

    @property
    def sizes(self):
        return sorted(self.counts)

    @property
    def complete(self):
        return self.scanned == self.total

    def sanity(self, variety_size):
        """
        Double counting on a complete scan.

        ``sum(counts) = total`` and ``sum(size * count) = |V| (q^4 + q^2 + 1)``.
        """
        q = self.q
        through_point = q**4 + q**2 + 1
        weighted = sum(size * count for size, count in self.counts.items())
        return sum(self.counts.values()) == self.total and weighted == variety_size * through_point

    def as_dict(self):
        return {
            "counts": {str(k): v for k, v in sorted(self.counts.items())},
            "scanned": self.scanned,
            "total": self.total,
        }

    @classmethod
    def from_dict(cls, q, data):
        counts = Counter({int(k): int(v) for k, v in data["counts"].items()})
        return cls(q, int(data["total"]), counts, int(data["scanned"]))

    def table(self, table_style=TableStyle.pyRestTable):
        return make_table(["size", "hyperplanes"], sorted(self.counts.items()), table_style)


@dataclasses.dataclass
class VerificationReport:
    """One checked claim with its parameters and measured quantities."""

    claim: str
    params: dict
    passed: bool = False
    measured: dict = dataclasses.field(default_factory=dict)
    expected: dict = dataclasses.field(default_factory=dict)
    seconds: float = 0.0

    @contextmanager
    def timer(self):
        t0 = time.monotonic()
        try:
            yield self
        finally:
            self.seconds = round(time.monotonic() - t0, 3)
            logger.info("%s: %s (%.3f s)", self.claim, "pass" if self.passed else "FAIL", self.seconds)

    def as_dict(self, timing=False):
        data = {
            "claim": self.claim,
            "params": self.params,
            "pass": bool(self.passed),
            "measured": self.measured,
            "expected": self.expected,
        }
        if timing:
            data["seconds"] = self.seconds
        return data

    def __str__(self):
        summary = {"claim": self.claim, "pass": self.passed}
        summary.update({f"measured.{k}": v for k, v in self.measured.items()})
        summary.update({f"expected.{k}": v for k, v in self.expected.items()})
        return str(dictionary_table(summary))


def reports_as_dict(reports, timing=False):
    return {
        "pass": all(r.passed for r in reports),
        "reports": [r.as_dict(timing) for r in reports],
    }


def reports_table(reports, table_style=TableStyle.pyRestTable, timing=False):
    """One row per report: claim, pass flag, measured and expected values."""
    labels = ["claim", "pass", "measured", "expected"]
    if timing:
        labels.append("seconds")
    rows = []
    for r in reports:
        row = [
            r.claim,
            r.passed,
            json.dumps(r.measured, sort_keys=True),
            json.dumps(r.expected, sort_keys=True),
        ]
        if timing:
            row.append(r.seconds)
        rows.append(row)
    return make_table(labels, rows, table_style)


def render_reports(reports, fmt="text", timing=False):
    """Reports as JSON, CSV or text."""
    if fmt == "json":
        return json.dumps(reports_as_dict(reports, timing), indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        return reports_table(reports, TableStyle.pandas, timing).to_csv(index=False)
    if fmt == "text":
        return str(reports_table(reports, TableStyle.pyRestTable, timing))
    raise ValueError(f"unknown report format {fmt!r}, expected one of {FORMATS}")


def write_reports(reports, path, fmt="json", timing=False):
    """
    Write ``reports`` atomically to ``path``.

    Without ``timing`` the output depends only on the parameters and seed.
    """
    text = render_reports(reports, fmt, timing)
    atomic_write(path, text)
    logger.info("%d report(s) written to %s", len(reports), path)
    return path


# -----------------------------------------------------------------------------
# :copyright: (c) 2024-2026, qhvar developers
#
# Distributed under the terms of the license in the file LICENSE.txt,
# distributed with this software.
# -----------------------------------------------------------------------------
