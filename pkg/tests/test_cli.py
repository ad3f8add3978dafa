import json
import re
import subprocess
import sys

import numpy as np
import pytest

from modradius import cli
from modradius.harness import CHECK_NAMES, CheckOutcome, SuiteReport


def run_cli(argv, capsys):
    code = cli.main(argv)
    return code, capsys.readouterr()


@pytest.mark.parametrize(
    "token, value",
    [
        ("1", 1),
        ("-2.5", -2.5),
        ("2i", 2j),
        ("i", 1j),
        ("-i", -1j),
        ("1+2i", 1 + 2j),
        ("1-i", 1 - 1j),
        ("1e-3-2i", 1e-3 - 2j),
        ("-1.5e+2+3.5e-1j", -150 + 0.35j),
        (" 3 ", 3),
    ],
)
def test_parse_complex(token, value):
    assert cli.parse_complex(token) == value


@pytest.mark.parametrize("token", ["", "abc", "1+", "i2", "1++2i"])
def test_parse_complex_rejects(token):
    with pytest.raises(cli.UsageError):
        cli.parse_complex(token)


def test_parse_entries_row_major():
    M = cli.parse_entries("1,2i,3,4", 2, 2)
    np.testing.assert_array_equal(M, [[1, 2j], [3, 4]])
    with pytest.raises(cli.UsageError):
        cli.parse_entries("1,2,3", 2, 2)


def test_parse_args_examples():
    args = cli.parse_args(["verify", "--n", "2", "--m", "3", "--trials", "100", "--seed", "7"])
    assert (args.command, args.n, args.m, args.trials, args.seed) == ("verify", 2, 3, 100, 7)
    assert args.tol == 1e-8 and args.grid_points == 1024 and args.check is None and args.out is None
    args = cli.parse_args(["omega", "--n", "1", "--m", "2", "--entries", "1,0"])
    assert args.command == "omega"
    np.testing.assert_array_equal(args.matrix, [[1], [0]])
    args = cli.parse_args(["verify", "--check", "kernel_identities, sandwich_bounds"])
    assert args.check == ["kernel_identities", "sandwich_bounds"]


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--trials", "0"],
        ["verify", "--n", "2"],
        ["verify", "--replay", "5"],
        ["verify", "--check", "bogus"],
        ["verify", "--tol", "-1"],
        ["verify", "--grid-points", "4"],
        ["verify", "--seed", str(2**64)],
        ["omega", "--n", "1", "--m", "2", "--entries", "1"],
        ["omega", "--n", "1", "--m", "1", "--entries", "x"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(argv)
    assert exc.value.code == cli.EXIT_USAGE


def test_omega_json(capsys):
    code, out = run_cli(["omega", "--n", "1", "--m", "2", "--entries", "1,0"], capsys)
    assert code == 0
    payload = json.loads(out.out)
    assert list(payload) == ["value", "argmax_theta", "certificate", "module_norm"]
    assert abs(payload["value"] - 0.5) <= payload["certificate"]
    assert payload["module_norm"] == 1.0


def test_wradius_json(capsys):
    code, out = run_cli(["wradius", "--n", "2", "--entries", "0,2,0,0"], capsys)
    assert code == 0
    payload = json.loads(out.out)
    assert abs(payload["value"] - 1.0) <= payload["certificate"]
    assert 0.0 <= payload["argmax_theta"] < 2 * np.pi


def test_profile_is_flat(capsys, tmp_path):
    out_path = tmp_path / "profile.json"
    code, _ = run_cli(
        ["profile", "--n", "2", "--m", "3", "--entries", "1,2i,-1,0.5,3-i,0", "--grid-points", "64", "--out", str(out_path)],
        capsys,
    )
    assert code == 0
    payload = json.loads(out_path.read_text(encoding="utf-8"))
    assert list(payload) == ["value", "certificate", "min", "max", "samples"]
    assert len(payload["samples"]) == 64
    assert payload["max"] - payload["min"] <= 1e-9 * (1 + payload["max"])


def test_verify_small_run_schema(capsys, tmp_path):
    out_path = tmp_path / "report.json"
    code, out = run_cli(["verify", "--n", "2", "--m", "2", "--trials", "3", "--seed", "7", "--out", str(out_path)], capsys)
    assert code == 0 and out.out == ""
    text = out_path.read_text(encoding="utf-8")
    report = json.loads(text)
    assert list(report) == ["version", "config", "outcomes", "passed"]
    assert report["passed"] is True
    assert [o["name"] for o in report["outcomes"]] == list(CHECK_NAMES)
    for o in report["outcomes"]:
        assert list(o) == ["name", "trials", "violations", "worst_margin", "witness_seed"]
        assert o["violations"] == 0
    assert report["config"]["shapes"] == [[2, 2]]
    assert report["config"]["master_seed"] == 7


def test_floats_use_17_significant_digits():
    text = cli.dumps({"a": 0.1, "b": 1 / 3, "c": [1.0, 2]})
    assert '"a": 0.10000000000000001' in text
    assert '"b": 0.33333333333333331' in text
    assert json.loads(text) == {"a": 0.1, "b": 1 / 3, "c": [1.0, 2]}
    with pytest.raises(ValueError):
        cli.dumps({"x": float("nan")})


def test_verify_report_floats_round_trip(capsys):
    code, out = run_cli(["verify", "--n", "1", "--m", "1", "--trials", "2", "--check", "sandwich_bounds"], capsys)
    assert code == 0
    margin = re.search(r'"worst_margin": ([^,\n]+)', out.out).group(1)
    assert float(margin) == json.loads(out.out)["outcomes"][0]["worst_margin"]
    digits = re.sub(r"[-+.]|e.*", "", margin).lstrip("0")
    assert len(digits) <= 17


def test_replay_from_cli(capsys):
    code, out = run_cli(["verify", "--n", "1", "--m", "3", "--trials", "4", "--check", "sandwich_bounds"], capsys)
    witness = json.loads(out.out)["outcomes"][0]["witness_seed"]
    code, out = run_cli(["verify", "--n", "1", "--m", "3", "--replay", str(witness), "--check", "sandwich_bounds"], capsys)
    assert code == 0
    report = json.loads(out.out)
    assert report["config"]["replay_seed"] == witness
    assert report["outcomes"][0]["trials"] == 1


def test_violation_exit_1(monkeypatch, capsys):
    def fake_plan(cfg, shapes, checks, workers=1):
        bad = CheckOutcome("sandwich_bounds", 1, 1, -0.5, 123)
        return SuiteReport({"shapes": []}, [bad], False)

    monkeypatch.setattr(cli, "run_plan", fake_plan)
    code, out = run_cli(["verify"], capsys)
    assert code == cli.EXIT_VIOLATION
    assert json.loads(out.out)["passed"] is False


def test_io_error_exit_2(tmp_path, capsys):
    bad = tmp_path / "missing" / "out.json"
    code, out = run_cli(["omega", "--n", "1", "--m", "1", "--entries", "1", "--out", str(bad)], capsys)
    assert code == cli.EXIT_USAGE
    assert "modradius:" in out.err


@pytest.mark.slow
def test_verify_defaults_exit_0(tmp_path):
    out_path = tmp_path / "report.json"
    proc = subprocess.run(
        [sys.executable, "-m", "modradius", "verify", "--out", str(out_path)], capture_output=True, text=True
    )
    assert proc.returncode == 0, proc.stderr
    report = json.loads(out_path.read_text(encoding="utf-8"))
    assert report["passed"] is True
    assert all(o["violations"] == 0 for o in report["outcomes"])
    assert report["config"]["shapes"] == [[1, 1], [1, 3], [2, 2], [3, 2], [4, 4]]
