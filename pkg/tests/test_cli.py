"""Command-line interface: exit codes, output shapes, determinism."""

import json
import subprocess
import sys

import pytest

from burau.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, build_parser, main
from burau.criteria import Rejection
from burau.fixtures import affine_fixture
from burau.laurent import ZZ
from burau.matrices import STANDARD, word_matrix
from burau.search import CurveStore
from burau.graphs import preset


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_affine(capsys):
    code, out, err = run(capsys, ["verify", "affine-a3"])
    assert code == EXIT_OK
    assert out.strip() == "PASS affine-a3"
    assert err == ""


def test_verify_affine_json(capsys):
    code, out, _ = run(capsys, ["verify", "affine-a3", "--json"])
    assert code == EXIT_OK
    payload = json.loads(out)
    cert = payload["affine-a3"]
    assert cert["accepted"] is True
    assert cert["verified"] is True
    assert cert["criterion"] == "commutator"
    assert cert["total_hom_dim"] == 60


def test_verify_d4_single_modulus(capsys):
    code, out, _ = run(capsys, ["verify", "d4-mod", "7"])
    assert code == EXIT_OK
    assert out.strip() == "PASS d4-mod-7"


def test_verify_d4_usage_errors(capsys):
    code, _, err = run(capsys, ["verify", "d4-mod"])
    assert code == EXIT_USAGE
    assert "modulus" in err
    code, _, err = run(capsys, ["verify", "d4-mod", "4"])
    assert code == EXIT_USAGE
    assert "available p: 6..16" in err


def test_verify_unknown_target_is_a_parse_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["verify", "affine-a5"])
    assert info.value.code == EXIT_USAGE


def test_verify_reports_failures_with_exit_one(capsys, monkeypatch):
    def always_reject(w1, i1, w2, i2, g):
        return Rejection("commutator", "pairing", "synthetic failure")

    monkeypatch.setattr("burau.cli.criterion1", always_reject)
    code, out, _ = run(capsys, ["verify", "affine-a3"])
    assert code == EXIT_FAILED
    assert out.startswith("FAIL affine-a3")
    assert "pairing: synthetic failure" in out


def test_burau_matrix_output(capsys):
    code, out, _ = run(capsys, ["burau", "--graph", "A2", "--word", "1"])
    assert code == EXIT_OK
    expected = str(word_matrix(preset("A2"), (1,), STANDARD, ZZ))
    assert out.strip("\n") == expected
    assert "-q^2" in out and "-q" in out


def test_burau_json_and_mod(capsys):
    code, out, _ = run(
        capsys,
        ["burau", "--graph", "A2", "--word", "1 1", "--mod", "5", "--json"],
    )
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["n"] == 2
    assert payload["ring"] == "Z/5"
    assert len(payload["rows"]) == 2


def test_pairing_of_the_affine_witness_pair(capsys):
    fx = affine_fixture()
    (a, i1), (b, i2) = fx.witnesses
    code, out, _ = run(
        capsys,
        [
            "pairing",
            "--graph",
            "tildeA3",
            "--w1",
            " ".join(str(x) for x in a),
            "--i1",
            str(i1),
            "--w2",
            " ".join(str(x) for x in b),
            "--i2",
            str(i2),
        ],
    )
    assert code == EXIT_OK
    assert out.strip() == "0"


def test_twist_output(capsys):
    code, out, _ = run(
        capsys, ["twist", "--graph", "A2", "--word", "1", "--start", "1"]
    )
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "0: P1{2}[-1]"
    assert "k0 class: (-q^2, 0)" in lines
    assert "spherical: True" in lines


def test_hom_output(capsys):
    code, out, _ = run(
        capsys,
        [
            "hom",
            "--graph",
            "A2",
            "--w1",
            "",
            "--i1",
            "1",
            "--w2",
            "",
            "--i2",
            "2",
        ],
    )
    assert code == EXIT_OK
    assert out.splitlines() == ["(1,0): 1", "Euler pairing: q"]


def test_search_curves_runs_and_writes_files(capsys, tmp_path):
    store_path = tmp_path / "store.json"
    out_path = tmp_path / "result.json"
    argv = [
        "search",
        "curves",
        "--graph",
        "tildeA2",
        "--budget",
        "30",
        "--criterion",
        "2",
        "--limit",
        "2",
        "--store",
        str(store_path),
        "--out",
        str(out_path),
    ]
    code, out, _ = run(capsys, argv)
    assert code == EXIT_OK
    assert out.strip() == f"wrote {out_path}"
    result = json.loads(out_path.read_text())
    assert result["manifest"]["kind"] == "curves"
    assert result["store_size"] == 30
    assert result["candidate_pairs"] == 2
    assert result["certificates"] == []
    loaded = CurveStore.load(store_path)
    assert len(loaded) == 30


def test_search_curves_is_deterministic(capsys):
    argv = [
        "search",
        "curves",
        "--graph",
        "tildeA2",
        "--budget",
        "25",
        "--limit",
        "1",
    ]
    code1, out1, _ = run(capsys, argv)
    code2, out2, _ = run(capsys, argv)
    assert code1 == code2 == EXIT_OK
    assert out1 == out2


def test_search_buckets_deterministic_output(capsys):
    argv = [
        "search",
        "buckets",
        "--graph",
        "A3",
        "--p",
        "2",
        "--budget",
        "300",
        "--seed",
        "1",
    ]
    code1, out1, _ = run(capsys, argv)
    code2, out2, _ = run(capsys, argv)
    assert code1 == code2 == EXIT_OK
    assert out1 == out2
    result = json.loads(out1)
    assert result["manifest"]["p"] == 2
    assert result["manifest"]["target"] == "fix_vector"
    assert "0" in result["buckets"]


def test_search_buckets_rejects_infinite_graphs(capsys):
    code, _, err = run(
        capsys,
        ["search", "buckets", "--graph", "tildeA3", "--p", "5"],
    )
    assert code == EXIT_USAGE
    assert err.startswith("error:")


def test_unknown_graph_and_bad_word_are_usage_errors(capsys):
    code, _, err = run(capsys, ["burau", "--graph", "nosuch", "--word", "1"])
    assert code == EXIT_USAGE
    assert "error:" in err
    code, _, err = run(capsys, ["burau", "--graph", "A2", "--word", "5"])
    assert code == EXIT_USAGE
    assert "error:" in err


def test_workers_default_comes_from_the_environment(monkeypatch):
    monkeypatch.setenv("BURAU_WORKERS", "3")
    args = build_parser().parse_args(["search", "buckets", "--graph", "A2"])
    assert args.workers == 3
    monkeypatch.delenv("BURAU_WORKERS")
    args = build_parser().parse_args(["search", "buckets", "--graph", "A2"])
    assert args.workers == 1


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "burau.cli", "verify", "affine-a3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == EXIT_OK
    assert proc.stdout.strip() == "PASS affine-a3"
