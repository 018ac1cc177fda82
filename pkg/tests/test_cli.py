"""Command-line behavior: report content, determinism, exit codes."""

import json
import subprocess
import sys

import pytest

from conftest import doc_by_label
from tdlab.catalog import fixture_corpus, load, save
from tdlab.cli import main


def _write(tmp_path, name, data):
    path = tmp_path / name
    path.write_bytes(data)
    return str(path)


def _fixture_path(tmp_path, label):
    return _write(tmp_path, label + ".json", save(doc_by_label(label)))


NILPOTENT = json.dumps({
    "label": "nilpotent",
    "field": {"kind": "rational"},
    "n": 2,
    "A": [[0, 1], [0, 0]],
    "Astar": [[1, 0], [0, -1]],
}).encode()


# ---------------------------------------------------------------------------
# verify


def test_verify_axioms_pass(tmp_path, capsys):
    path = _fixture_path(tmp_path, "krawtchouk-d2-rational")
    assert main(["verify", path]) == 0
    out = capsys.readouterr().out
    assert "summary: pass" in out
    assert "axioms" in out
    assert "system.super_tridiagonal" in out


def test_verify_all_json_structure(tmp_path, capsys):
    path = _fixture_path(tmp_path, "krawtchouk-d2-rational")
    assert main(["verify", path, "--checks", "all", "--format", "json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["label"] == "krawtchouk-d2-rational"
    assert report["summary"] == "pass"
    checks = {c["check"]: c for c in report["checks"]}
    assert len(report["checks"]) == 24
    assert checks["dims.total"]["details"]["dim"] == 21
    assert checks["main.commutators"]["details"]["commutator_max_rank"] == 0
    assert all(c["pass"] for c in report["checks"])


def test_verify_json_is_deterministic(tmp_path, capsys):
    path = _fixture_path(tmp_path, "krawtchouk-d1-gf13")
    assert main(["verify", path, "--checks", "all", "--format", "json"]) == 0
    first = capsys.readouterr().out
    assert main(["verify", path, "--checks", "all", "--format", "json"]) == 0
    assert capsys.readouterr().out == first


def test_verify_rejected_pair(tmp_path, capsys):
    path = _write(tmp_path, "nilpotent.json", NILPOTENT)
    assert main(["verify", path]) == 1
    out = capsys.readouterr().out
    assert "summary: fail" in out
    assert "DIAGONALIZABLE" in out


def test_verify_missing_file(tmp_path, capsys):
    assert main(["verify", str(tmp_path / "missing.json")]) == 2
    assert "error:" in capsys.readouterr().err


def test_verify_malformed_json(tmp_path, capsys):
    path = _write(tmp_path, "broken.json", b"{ broken")
    assert main(["verify", path]) == 2
    assert "not JSON" in capsys.readouterr().err


def test_verify_schema_violation(tmp_path, capsys):
    path = _write(tmp_path, "p4.json", json.dumps({
        "label": "x",
        "field": {"kind": "prime", "p": 4},
        "n": 1,
        "A": [[0]],
        "Astar": [[0]],
    }).encode())
    assert main(["verify", path]) == 2
    assert "not prime" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# orbit and dims


def test_orbit_lists_eight_relatives(tmp_path, capsys):
    path = _fixture_path(tmp_path, "krawtchouk-d2-rational")
    assert main(["orbit", path]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 9  # label line plus eight relatives
    assert lines[1].startswith("1 ")
    assert all("accepted" in line for line in lines[1:])
    words = [line.split()[0] for line in lines[1:]]
    assert words == ["1", "d", "D", "dD", "*", "d*", "D*", "dD*"]


def test_orbit_rejected_pair(tmp_path, capsys):
    path = _write(tmp_path, "nilpotent.json", NILPOTENT)
    assert main(["orbit", path]) == 1
    assert "rejected" in capsys.readouterr().out


def test_dims_table(tmp_path, capsys):
    path = _fixture_path(tmp_path, "krawtchouk-d2-gf101")
    assert main(["dims", path]) == 0
    out = capsys.readouterr().out
    assert "total: 21 expected 21" in out
    assert "codim: 6 expected 6" in out
    assert "summary: pass" in out


def test_dims_rejected_pair(tmp_path, capsys):
    path = _write(tmp_path, "nilpotent.json", NILPOTENT)
    assert main(["dims", path]) == 1


# ---------------------------------------------------------------------------
# generate


def test_generate_krawtchouk_writes_verified_document(tmp_path, capsys):
    out_path = tmp_path / "k3.json"
    assert main(["generate", "krawtchouk", "--d", "3",
                 "--field", "rational", "-o", str(out_path)]) == 0
    doc = load(out_path.read_bytes())
    assert doc.n == 4
    assert main(["verify", str(out_path)]) == 0


def test_generate_krawtchouk_prime_collision(capsys):
    assert main(["generate", "krawtchouk", "--d", "7", "--field", "prime:13"]) == 2
    assert "collides" in capsys.readouterr().err


def test_generate_krawtchouk_requires_d(capsys):
    assert main(["generate", "krawtchouk"]) == 2


def test_generate_split_accepted(tmp_path, capsys):
    out_path = tmp_path / "s1.json"
    assert main(["generate", "split", "--theta", "1,-1", "--thetastar", "1,-1",
                 "--phi", "2", "-o", str(out_path)]) == 0
    assert load(out_path.read_bytes()).n == 2


def test_generate_split_rejected(tmp_path, capsys):
    code = main(["generate", "split", "--theta", "3,1,-1,-3",
                 "--thetastar", "3,1,-1,-3", "--phi", "1,1,1",
                 "-o", str(tmp_path / "never.json")])
    assert code == 1
    assert "rejected" in capsys.readouterr().out
    assert not (tmp_path / "never.json").exists()


def test_generate_split_to_stdout(capsys):
    assert main(["generate", "split", "--theta", "1,-1",
                 "--thetastar", "1,-1", "--phi", "2"]) == 0
    doc = load(capsys.readouterr().out.encode())
    assert doc.label == "split-d1-rational"


def test_generate_split_bad_scalar(capsys):
    assert main(["generate", "split", "--theta", "1,oops",
                 "--thetastar", "1,-1", "--phi", "2"]) == 2


def test_generate_split_zero_phi(capsys):
    assert main(["generate", "split", "--theta", "1,-1",
                 "--thetastar", "1,-1", "--phi", "0"]) == 2


def test_generate_split_requires_parameters(capsys):
    assert main(["generate", "split", "--theta", "1,-1"]) == 2


def test_generate_bad_field(capsys):
    assert main(["generate", "krawtchouk", "--d", "2", "--field", "real"]) == 2
    assert main(["generate", "krawtchouk", "--d", "2", "--field", "prime:x"]) == 2


# ---------------------------------------------------------------------------
# argument handling and the exit-code contract


def test_bad_subcommand_and_missing_args(capsys):
    assert main(["frobnicate"]) == 2
    assert main([]) == 2
    assert main(["verify"]) == 2


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0


def test_exit_codes_across_corpus(tmp_path, capsys):
    for doc in fixture_corpus():
        data = save(doc)
        path = _write(tmp_path, doc.label + ".json", data)
        assert main(["verify", path]) == 0, doc.label
        capsys.readouterr()
        payload = json.loads(data)
        del payload["field"]
        corrupt = _write(tmp_path, doc.label + "-corrupt.json",
                         json.dumps(payload).encode())
        assert main(["verify", corrupt]) == 2, doc.label
        capsys.readouterr()


def test_console_script_entry_point(tmp_path):
    path = _fixture_path(tmp_path, "krawtchouk-d1-rational")
    proc = subprocess.run([sys.executable, "-m", "tdlab.cli", "verify", path],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "summary: pass" in proc.stdout
