import json

import pytest

from pickychar.cli import main, parse_permutation
from pickychar.perms import Permutation


def test_parse_permutation_cycles():
    g = parse_permutation("(1,2,3)(4,5)")
    assert g == Permutation.from_cycles([(1, 2, 3), (4, 5)], 5)
    assert parse_permutation("(1,2)", degree=4).degree == 4
    assert parse_permutation("", degree=3) == Permutation.identity(3)


def test_parse_permutation_one_line():
    assert parse_permutation("2 3 1").images == (2, 3, 1)
    assert parse_permutation("2,3,1").images == (2, 3, 1)


def test_parse_permutation_errors():
    with pytest.raises(ValueError, match="repeated point"):
        parse_permutation("(1,1)")
    with pytest.raises(ValueError, match="repeated point"):
        parse_permutation("(1,2)(2,3)")
    with pytest.raises(ValueError, match="malformed token"):
        parse_permutation("(1,x)")
    with pytest.raises(ValueError, match="degree"):
        parse_permutation("")
    with pytest.raises(ValueError, match="exceeds degree"):
        parse_permutation("(1,9)", degree=4)


def test_char_commands(capsys):
    assert main(["char", "4,3,1"]) == 0
    assert capsys.readouterr().out.strip() == "70"
    assert main(["char", "4,3,1", "--at", "4,2,1,1"]) == 0
    assert capsys.readouterr().out.strip() == "0"
    assert main(["--json", "char", "--column", "4,2,1,1"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["schema"] == "picky-char/1"
    assert data["values"]["3,3,2"] == -2


def test_partition_and_tower_commands(capsys):
    assert main(["--json", "partition", "6,4,3,1", "-q", "3"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["size"] == 14
    assert data["core"] == [1, 1]
    assert main(["--json", "tower", "4,2,1,1", "-p", "2"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["row_weights"] == [0, 0, 2, 0]
    assert data["nu_p_degree"] == 1


def test_picky_and_sylow_commands(capsys):
    assert main(["--json", "picky", "-n", "12", "-p", "3"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert {"type": [9, 3], "class": "P_ADIC"} in data["classes"]
    assert {"type": [9, 1, 1, 1], "class": "THREE_FIXED"} in data["classes"]
    assert main(["picky", "--type", "4,4", "-p", "2"]) == 0
    assert capsys.readouterr().out.strip() == "NOT_PICKY"
    assert main(["--json", "sylow", "-n", "8", "-p", "2"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["block_structures"] == 315
    assert data["normalizer_order"] == 128


def test_sub_and_local_commands(capsys):
    assert main(["--json", "sub", "(1,2,3,4)(5,6)", "-n", "8"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["order"] == 128
    assert main(["--json", "local", "-k", "3"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["count"] == 20
    assert main(
        ["local", "-k", "3", "--label", "(ext (pair b0 b1) -1)", "--at", "(1,5)(2,6)(3,7)(4,8)"]
    ) == 0
    assert capsys.readouterr().out.strip() == "-2"


def test_bijection_command(capsys):
    assert main(["--json", "bijection", "-n", "8", "-p", "2"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["ok"] is True
    assert len(data["pairs"]) == 10
    assert main(["--json", "bijection", "--element", "(1,2)(3,4)", "-n", "6"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["ok"] is True


def test_cli_error_exit_code(capsys):
    assert main(["char", "3,4"]) == 2
    assert "error:" in capsys.readouterr().err


def test_suite_subset_and_byte_stability(tmp_path):
    out1, out2 = tmp_path / "a", tmp_path / "b"
    assert main(["--max-n", "4", "suite", "--out", str(out1)]) == 0
    assert main(["--max-n", "4", "suite", "--out", str(out2)]) == 0
    files1 = sorted(p.name for p in out1.iterdir())
    assert files1 == sorted(p.name for p in out2.iterdir())
    assert "summary.csv" in files1
    assert len(files1) == 13
    for name in files1:
        assert (out1 / name).read_bytes() == (out2 / name).read_bytes()
    summary = (out1 / "summary.csv").read_text()
    assert summary.count("PASS") == 12
