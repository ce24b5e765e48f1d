#!/usr/bin/env python

"""
Verify BM and BT quasi-Hermitian varieties of PG(3,q^2) and their models in PG(6,q).

Subcommands:

* ``verify-bm``: every check for M_{a,b} (default: full hyperplane scan)
* ``verify-bt``: every check for the BT variety, ``q = 2^e`` (default: sampled scan)
* ``two-character``: hyperplane scan of one variety
* ``classify-quadric``: base quadric of B' with its determinant
* ``count-spread-lines``: spread lines contained in a hypersurface of PG(6,q)
* ``counts``: closed-form numbers of BM unitals and varieties
* ``spread-selftest``: disjointness and covering of the spread

Exit status: 0 all claims hold, 1 a claim failed, 2 bad parameters,
3 not enough memory.

.. autosummary::

   ~ConfigError
   ~RunConfig
   ~bm_params
   ~bt_config_params
   ~default_params
   ~get_options
   ~main
   ~run
"""

import argparse
import dataclasses
import logging
import os
import pathlib
import sys

import yaml

from ..fields import EvenCharacteristic
from ..fields import NotPrime
from ..fields import ReducibleModulus
from ..fields import make_extension
from ..fields import prime_power
from ..geometry.barlotti_cofman import model_consistency
from ..geometry.barlotti_cofman import pairwise_disjoint
from ..geometry.barlotti_cofman import sample_spread_lines
from ..geometry.barlotti_cofman import spread_is_partition
from ..geometry.closed_forms import bm_unital_count
from ..geometry.closed_forms import bm_variety_count
from ..geometry.hypersurfaces import bprime
from ..geometry.hypersurfaces import c3eps
from ..geometry.hypersurfaces import fbar
from ..geometry.hypersurfaces import hermitian_cone
from ..geometry.quadrics import base_det_closed_form
from ..geometry.quadrics import base_matrix
from ..geometry.quadrics import classify_quadric
from ..geometry.quadrics import quadric_point_counts
from ..geometry.varieties import BMParams
from ..geometry.varieties import DomainError
from ..geometry.varieties import InvalidParams
from ..geometry.varieties import NotHermitianMatrix
from ..geometry.varieties import SingularMatrix
from ..geometry.varieties import VarietySpec
from ..geometry.varieties import VarietyTag
from ..geometry.varieties import bm_validate
from ..geometry.varieties import bt_params
from ..geometry.varieties import least_valid_params
from ..geometry.varieties import tangent_hermitian_matrix
from ..utils import ResourceLimit
from ..utils import TableStyle
from ..utils import atomic_write
from ..utils import configure_logging
from ..utils import make_table
from ..verify import CheckpointMismatch
from ..verify import ClaimFailed
from ..verify import EvenE
from ..verify import IntersectionHistogram
from ..verify import UnsupportedVariety
from ..verify import VerificationReport
from ..verify import count_spread_lines_in
from ..verify import render_reports
from ..verify import two_character_report
from ..verify import verify_bm
from ..verify import verify_bt
from ..verify import write_reports
from ..verify.pipelines import expected_bprime_lines

logger = logging.getLogger(__name__)

_PATH = pathlib.Path(__file__).parent
YAML_DEFAULTS_FILE = _PATH / "default_params.yml"

EXIT_OK = 0
EXIT_CLAIM_FAILED = 1
EXIT_CONFIG = 2
EXIT_RESOURCE = 3

HYPERSURFACES = ("bprime", "c3eps", "fbar", "hermitian-cone")
THEOREMS = ("bm-unitals", "bm-varieties")


class ConfigError(ValueError):
    """
    Command-line parameters are inconsistent or incomplete.

    .. index:: qhvar Exception; ConfigError
    """


CONFIG_ERRORS = (
    CheckpointMismatch,
    ConfigError,
    DomainError,
    EvenCharacteristic,
    EvenE,
    InvalidParams,
    NotHermitianMatrix,
    NotPrime,
    ReducibleModulus,
    SingularMatrix,
    UnsupportedVariety,
)


@dataclasses.dataclass
class RunConfig:
    """Everything one invocation needs, validated before any enumeration."""

    command: str
    q: int = None
    p: int = None
    e: int = None
    n: int = None
    a: str = None
    b: str = None
    delta: int = None
    modulus: str = None
    variety: str = "mab"
    hypersurface: str = "bprime"
    theorem: str = "bm-unitals"
    mode: str = None
    sample: int = 10_000
    seed: int = 0
    workers: int = 1
    checkpoint: str = None
    out: str = None
    fmt: str = "text"
    timing: bool = False
    log_level: str = "WARNING"
    log_file: str = None

    @classmethod
    def from_options(cls, options):
        fields = {f.name for f in dataclasses.fields(cls)}
        return cls(**{k: v for k, v in vars(options).items() if k in fields})


def get_qhvar_version():
    """Get the version string from the parent package."""
    from .. import __version__

    return __version__


def default_params():
    """The shipped table ``{q: {"delta": d, "a": "c0,c1", "b": "c0,c1"}}``."""
    table = yaml.load(YAML_DEFAULTS_FILE.open().read(), Loader=yaml.BaseLoader)
    return {int(q): dict(delta=int(v["delta"]), a=v["a"], b=v["b"]) for q, v in table.items()}


def _workers_default():
    text = os.environ.get("QHVAR_WORKERS", "1")
    try:
        return max(1, int(text))
    except ValueError:
        raise ConfigError(f"QHVAR_WORKERS={text!r} is not an integer")


def parse_element(text, ext):
    """``"c0,c1"`` to the encoding ``c0 + q*c1`` of GF(q^2)."""
    try:
        c0, c1 = (int(c) for c in str(text).split(","))
    except ValueError:
        raise ConfigError(f"field element {text!r} is not of the form c0,c1")
    if not (0 <= c0 < ext.q and 0 <= c1 < ext.q):
        raise ConfigError(f"field element {text!r} has components outside GF({ext.q})")
    return ext.join(c0, c1)


def extension(config):
    """GF(q^2) from ``--q`` or ``--p`` with ``--e``, with the overrides applied."""
    if config.q is None and (config.p is None or config.e is None):
        raise ConfigError("give --q, or --p together with --e")
    try:
        if config.q is not None:
            return make_extension(q=config.q, delta=config.delta, modulus=config.modulus)
        return make_extension(p=config.p, e=config.e, delta=config.delta, modulus=config.modulus)
    except CONFIG_ERRORS:
        raise
    except ValueError as exc:
        # malformed --modulus or --delta
        raise ConfigError(str(exc)) from exc


def bm_params(config):
    """
    BM parameters: ``--a``/``--b`` when given, else the shipped table, else the least valid pair.

    RAISES

    InvalidParams
        when the pair fails :func:`~qhvar.geometry.varieties.bm_validate`.
    """
    ext = extension(config)
    table = default_params().get(ext.q)
    if table and config.modulus is None and table["delta"] == ext.delta:
        a, b = table["a"], table["b"]
    else:
        least = least_valid_params(ext)
        a, b = ("{},{}".format(*ext.split(least.a)), "{},{}".format(*ext.split(least.b)))
    params = BMParams(ext, parse_element(config.a or a, ext), parse_element(config.b or b, ext))
    if not bm_validate(params):
        raise InvalidParams(f"(a, b) = ({config.a or a}, {config.b or b}) is not valid over GF({ext.q}^2)")
    return params


def bt_config_params(config):
    """BT parameters from ``--e`` or from ``--q = 2^e``."""
    e = config.e
    if e is None:
        if config.q is None:
            raise ConfigError("give --e (or --q = 2^e)")
        p, e = prime_power(config.q)
        if p != 2:
            raise ConfigError(f"BT varieties need q = 2^e, received q={config.q}")
    if e % 2 == 0:
        raise EvenE(f"e={e} is even")
    try:
        return bt_params(e, config.delta, config.modulus)
    except CONFIG_ERRORS:
        raise
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def _scan_kwargs(config, default_mode):
    return dict(
        mode=config.mode or default_mode,
        sample=config.sample,
        seed=config.seed,
        workers=config.workers,
        checkpoint=config.checkpoint,
    )


def cmd_verify_bm(config):
    return verify_bm(bm_params(config), **_scan_kwargs(config, "full"))


def cmd_verify_bt(config):
    return verify_bt(bt_config_params(config), **_scan_kwargs(config, "sampled"))


def _variety(config):
    tag = VarietyTag(config.variety)
    if tag in (VarietyTag.veps, VarietyTag.heps):
        bt = bt_config_params(config)
        return VarietySpec(tag, bt.ext, bt)
    if tag == VarietyTag.fcone:
        return VarietySpec(tag, extension(config))
    params = bm_params(config)
    if tag == VarietyTag.hermitian:
        return VarietySpec(tag, params.ext, tangent_hermitian_matrix(params.b, params.ext))
    return VarietySpec(tag, params.ext, params)


def cmd_two_character(config):
    variety = _variety(config)
    report = two_character_report(variety, **_scan_kwargs(config, "full"))
    report.params.update(mode=config.mode or "full", seed=config.seed)
    return [report]


def cmd_classify_quadric(config):
    params = bm_params(config)
    report = VerificationReport("classify-quadric", params.as_dict())
    with report.timer():
        matrix = base_matrix(params)
        result = classify_quadric(matrix)
        closed = base_det_closed_form(params)
        report.measured = dict(result._asdict(), gram=matrix.gram)
        report.expected = dict(kind="hyperbolic", points=quadric_point_counts(5, params.q)["hyperbolic"], det=closed)
        report.passed = result.kind == "hyperbolic" and result.det == closed
    logger.info("base matrix:\n%s", make_table(matrix.coordinates, matrix.gram))
    return [report]


def _hypersurface(config):
    name = config.hypersurface
    if name == "c3eps":
        bt = bt_config_params(config)
        return c3eps(bt), bt.q**2 + 1
    ext = extension(config)
    q = ext.q
    if name == "fbar":
        return fbar(ext), q**3 + q**2 + 1
    params = bm_params(config)
    if name == "hermitian-cone":
        return hermitian_cone(params.b, ext), q**3 + q**2 + 1
    return bprime(params), expected_bprime_lines(q)


def cmd_count_spread_lines(config):
    surface, expected = _hypersurface(config)
    report = VerificationReport("count-spread-lines", surface.describe())
    with report.timer():
        count, labels = count_spread_lines_in(surface)
        report.measured = dict(count=count, labels=[p.serialize() for p in labels])
        report.expected = dict(count=expected)
        report.passed = count == expected
    return [report]


def cmd_counts(config):
    if config.p is None or config.n is None:
        raise ConfigError("counts needs --p and --n")
    formula = bm_unital_count if config.theorem == "bm-unitals" else bm_variety_count
    report = VerificationReport("counts", dict(theorem=config.theorem, p=config.p, n=config.n))
    with report.timer():
        value = formula(config.p, config.n)
        report.measured = dict(value=value)
        report.passed = True
    return [report]


def cmd_spread_selftest(config):
    ext = extension(config)
    q = ext.q
    report = VerificationReport("spread-selftest", dict(q=q, delta=ext.delta, seed=config.seed))
    with report.timer():
        lines, covered, ok = spread_is_partition(ext)
        sampled = sample_spread_lines(ext, min(config.sample, 200), config.seed)
        checked, failures = model_consistency(ext, min(config.sample, 200), config.seed)
        report.measured = dict(
            lines=lines,
            covered=covered,
            partition=ok,
            sampled_disjoint=pairwise_disjoint(sampled),
            oracle_checked=checked,
            oracle_failures=len(failures),
        )
        report.expected = dict(lines=q**4 + q**2 + 1, covered=(q**6 - 1) // (q - 1))
        report.passed = ok and report.measured["sampled_disjoint"] and not failures
    return [report]


COMMAND_HELP = {
    "verify-bm": "every check for the BM variety M_{a,b}",
    "verify-bt": "every check for the BT variety, q = 2^e",
    "two-character": "hyperplane intersection histogram of one variety",
    "classify-quadric": "classify the base quadric of B'",
    "count-spread-lines": "spread lines contained in a hypersurface of PG(6,q)",
    "counts": "closed-form counts of BM unitals and varieties",
    "spread-selftest": "disjointness and covering of the spread",
}

COMMANDS = {
    "verify-bm": cmd_verify_bm,
    "verify-bt": cmd_verify_bt,
    "two-character": cmd_two_character,
    "classify-quadric": cmd_classify_quadric,
    "count-spread-lines": cmd_count_spread_lines,
    "counts": cmd_counts,
    "spread-selftest": cmd_spread_selftest,
}


def _emit(reports, config):
    if config.command == "counts" and config.fmt == "text":
        text = f"{reports[0].measured['value']}\n"
    elif config.command == "two-character" and config.fmt == "csv":
        histogram = IntersectionHistogram.from_dict(0, reports[0].measured)
        text = histogram.table(TableStyle.pandas).to_csv(index=False)
    elif config.out:
        write_reports(reports, config.out, config.fmt, config.timing)
        return
    else:
        text = render_reports(reports, config.fmt, config.timing)
    if config.out:
        atomic_write(config.out, text)
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def run(config):
    """
    Execute one subcommand and write its report.

    RETURNS

    exit status: 0 pass, 1 claim failed, 2 bad parameters, 3 not enough memory
    """
    try:
        reports = COMMANDS[config.command](config)
        _emit(reports, config)
        failed = [r.claim for r in reports if not r.passed]
        if failed:
            raise ClaimFailed(", ".join(failed))
    except ClaimFailed as exc:
        logger.error("claim(s) failed: %s", exc)
        return EXIT_CLAIM_FAILED
    except ResourceLimit as exc:
        logger.error("%s", exc)
        return EXIT_RESOURCE
    except CONFIG_ERRORS as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        logger.debug("parameter error", exc_info=True)
        return EXIT_CONFIG
    return EXIT_OK


def get_options(argv=None):
    """Handle command line arguments."""
    version = get_qhvar_version()

    parser = argparse.ArgumentParser(
        prog=pathlib.Path(sys.argv[0]).name,
        description=__doc__.strip().splitlines()[0],
    )
    parser.add_argument(
        "-v",
        "--version",
        action="version",
        help="print version number and exit",
        version=version,
    )

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int, help="order of the base field GF(q)")
    common.add_argument("--p", type=int, help="characteristic (with --e), or p of the counting formulas")
    common.add_argument("--e", type=int, help="q = p^e; for BT varieties q = 2^e")
    common.add_argument("--a", type=str, help="BM parameter a as c0,c1")
    common.add_argument("--b", type=str, help="BM parameter b as c0,c1")
    common.add_argument("--delta", type=int, help="override the constant of eps")
    common.add_argument("--modulus", type=str, help="base-field modulus, constant term first: 1,1,0,1")
    scan = common.add_mutually_exclusive_group()
    scan.add_argument("--full", dest="mode", action="store_const", const="full", help="scan every hyperplane")
    scan.add_argument("--sampled", dest="sample", type=int, metavar="N", help="scan N seeded hyperplanes")
    common.add_argument("--seed", type=int, default=0, help="seed of the sampled scan (default: 0)")
    common.add_argument(
        "--workers",
        type=int,
        default=None,
        help="worker processes for full scans (default: $QHVAR_WORKERS or 1)",
    )
    common.add_argument("--checkpoint", type=str, help="JSON file of finished scan shards")
    common.add_argument("--out", type=str, help="report file (default: standard output)")
    common.add_argument("--format", dest="fmt", choices=["json", "csv", "text"], default="text")
    common.add_argument("--timing", action="store_true", help="include wall times in reports")
    common.add_argument("--log-level", default="WARNING", help="stream log level (default: WARNING)")
    common.add_argument("--log-file", type=str, help="also log to .logs/<LOG_FILE>.log")

    subparsers = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub = subparsers.add_parser(name, parents=[common], help=COMMAND_HELP[name])
        if name == "two-character":
            sub.add_argument("--variety", choices=[t.value for t in VarietyTag], default="mab")
        elif name == "count-spread-lines":
            sub.add_argument("--hypersurface", choices=HYPERSURFACES, default="bprime")
        elif name == "counts":
            sub.add_argument("--theorem", choices=THEOREMS, default="bm-unitals")
            sub.add_argument("--n", type=int, help="q = p^n in the counting formulas")

    options = parser.parse_args(argv)
    if options.sample is not None:
        options.mode = "sampled"
    else:
        options.sample = 10_000
    config = RunConfig.from_options(options)
    if options.workers is None:
        config.workers = _workers_default()
    return config


def main(argv=None):
    try:
        config = get_options(argv)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    configure_logging(config.log_level, config.log_file)
    return run(config)


if __name__ == "__main__":
    sys.exit(main())

# -----------------------------------------------------------------------------
# :copyright: (c) 2024-2026, qhvar developers
#
# Distributed under the terms of the license in the file LICENSE.txt,
# distributed with this software.
# -----------------------------------------------------------------------------
