import json

import pytest

from ...fields import make_extension
from ...geometry.varieties import least_valid_params
from ...utils import ResourceLimit
from .. import qhvar_cli


def run_json(argv, tmp_path):
    path = tmp_path / "report.json"
    status = qhvar_cli.main(argv + ["--format", "json", "--out", str(path)])
    return status, json.loads(path.read_text())


def by_claim(data):
    return {r["claim"]: r for r in data["reports"]}


def test_Version():
    from ... import __version__

    version = qhvar_cli.get_qhvar_version()
    assert isinstance(version, str)
    assert version == __version__


def test_version_option():
    with pytest.raises(SystemExit):
        qhvar_cli.get_options(["--version"])


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8])
def test_default_params_table(q):
    table = qhvar_cli.default_params()
    ext = make_extension(q)
    least = least_valid_params(ext)
    assert table[q]["delta"] == ext.delta
    assert table[q]["a"] == "{},{}".format(*ext.split(least.a))
    assert table[q]["b"] == "{},{}".format(*ext.split(least.b))


def test_get_options():
    config = qhvar_cli.get_options(["verify-bt", "--e", "3", "--sampled", "100", "--seed", "7"])
    assert config.command == "verify-bt"
    assert config.mode == "sampled"
    assert config.sample == 100
    assert config.seed == 7

    config = qhvar_cli.get_options(["verify-bm", "--q", "3", "--full"])
    assert config.mode == "full"
    assert config.fmt == "text"

    with pytest.raises(SystemExit):
        qhvar_cli.get_options(["verify-bm", "--full", "--sampled", "10"])


def test_workers_from_environment(monkeypatch):
    monkeypatch.setenv("QHVAR_WORKERS", "3")
    assert qhvar_cli.get_options(["counts"]).workers == 3
    assert qhvar_cli.get_options(["counts", "--workers", "2"]).workers == 2
    monkeypatch.setenv("QHVAR_WORKERS", "many")
    assert qhvar_cli.main(["counts", "--p", "2", "--n", "2"]) == qhvar_cli.EXIT_CONFIG


def test_bm_params_defaults_and_overrides():
    params = qhvar_cli.bm_params(qhvar_cli.get_options(["verify-bm", "--q", "3"]))
    assert params.as_dict()["a"] == "1,1"
    assert params.as_dict()["b"] == "0,1"

    params = qhvar_cli.bm_params(qhvar_cli.get_options(["verify-bm", "--q", "4", "--a", "0,1"]))
    assert params.as_dict()["a"] == "0,1"
    assert params.as_dict()["b"] == "0,1"


def test_counts(capsys):
    assert qhvar_cli.main(["counts", "--theorem", "bm-unitals", "--p", "2", "--n", "2"]) == 0
    assert capsys.readouterr().out == "2\n"


@pytest.mark.parametrize(
    "argv",
    [
        ["verify-bm", "--q", "6"],
        ["verify-bm", "--q", "3", "--a", "9,9"],
        ["verify-bm", "--q", "3", "--a", "0,0"],
        ["verify-bm", "--q", "3", "--b", "1,0"],
        ["verify-bt", "--e", "4"],
        ["verify-bt", "--q", "9"],
        ["verify-bm"],
        ["verify-bm", "--q", "3", "--delta", "1"],
        ["verify-bm", "--q", "3", "--modulus", "1,2"],
        ["counts", "--p", "2"],
        ["counts", "--p", "2", "--n", "1"],
        ["count-spread-lines", "--hypersurface", "fbar", "--q", "4"],
    ],
)
def test_config_errors(argv):
    assert qhvar_cli.main(argv) == qhvar_cli.EXIT_CONFIG


def test_claim_failed(tmp_path):
    status, data = run_json(["two-character", "--variety", "fcone", "--q", "3"], tmp_path)
    assert status == qhvar_cli.EXIT_CLAIM_FAILED
    assert data["pass"] is False


def test_resource_limit(monkeypatch):
    def too_big(config):
        raise ResourceLimit("not enough memory for the test")

    monkeypatch.setitem(qhvar_cli.COMMANDS, "counts", too_big)
    assert qhvar_cli.main(["counts", "--p", "2", "--n", "2"]) == qhvar_cli.EXIT_RESOURCE


def test_spread_selftest(tmp_path):
    status, data = run_json(["spread-selftest", "--q", "3"], tmp_path)
    assert status == 0
    report = data["reports"][0]
    assert report["measured"]["lines"] == 91
    assert report["measured"]["covered"] == 364
    assert report["measured"]["oracle_failures"] == 0


def test_classify_quadric(tmp_path):
    status, data = run_json(["classify-quadric", "--q", "4", "--a", "0,1", "--b", "0,1"], tmp_path)
    assert status == 0
    measured = data["reports"][0]["measured"]
    assert measured["kind"] == "hyperbolic"
    assert measured["points"] == 357
    assert measured["det"] == 1


def test_count_spread_lines(tmp_path):
    status, data = run_json(["count-spread-lines", "--hypersurface", "bprime", "--q", "4"], tmp_path)
    assert status == 0
    assert data["reports"][0]["measured"]["count"] == 17


def test_two_character_csv(capsys):
    assert qhvar_cli.main(["two-character", "--variety", "mab", "--q", "3", "--format", "csv"]) == 0
    assert capsys.readouterr().out.splitlines() == ["size,hyperplanes", "28,540", "37,280"]


def test_verify_bm(tmp_path):
    status, data = run_json(["verify-bm", "--q", "3", "--a", "1,1", "--b", "0,1", "--full"], tmp_path)
    assert status == 0
    assert data["pass"] is True
    reports = by_claim(data)
    assert reports["two-character"]["measured"]["counts"] == {"28": 540, "37": 280}
    assert reports["infinity-bab"]["measured"]["labels"] == 19
    assert reports["infinity-bab"]["measured"]["contained"] == 1
    for report in data["reports"]:
        assert set(report) == {"claim", "params", "pass", "measured", "expected"}


def test_verify_bm_is_deterministic(tmp_path):
    first = tmp_path / "first.txt"
    second = tmp_path / "second.txt"
    assert qhvar_cli.main(["verify-bm", "--q", "3", "--out", str(first)]) == 0
    assert qhvar_cli.main(["verify-bm", "--q", "3", "--out", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()


def test_timing(tmp_path):
    path = tmp_path / "report.json"
    argv = ["counts", "--p", "3", "--n", "2", "--format", "json", "--timing", "--out", str(path)]
    assert qhvar_cli.main(argv) == 0
    report = json.loads(path.read_text())["reports"][0]
    assert set(report) == {"claim", "params", "pass", "measured", "expected", "seconds"}


def test_checkpoint_reused_for_another_variety(tmp_path):
    checkpoint = str(tmp_path / "shards.json")
    argv = ["two-character", "--q", "3", "--full", "--checkpoint", checkpoint]
    assert qhvar_cli.main(argv + ["--variety", "fcone"]) == qhvar_cli.EXIT_CLAIM_FAILED
    assert qhvar_cli.main(argv + ["--variety", "mab"]) == qhvar_cli.EXIT_CONFIG
