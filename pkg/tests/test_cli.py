import json

import pytest

from equicohom.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_normalize(capsys):
    code, out, _ = run_cli(capsys, "normalize", "--ring", "bt2",
                           "--expr", "z00*z01*z10*z11")
    assert code == 0
    assert out.strip() == "xi"


def test_normalize_roundtrip(capsys):
    code, out, _ = run_cli(capsys, "normalize", "--expr", "z00*cT")
    assert code == 0
    code2, out2, _ = run_cli(capsys, "normalize", "--expr", out.strip())
    assert code2 == 0
    assert out2 == out


def test_empty_expr_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        run_cli(capsys, "normalize", "--expr", "")
    assert exc.value.code == 2


def test_unknown_flag_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        run_cli(capsys, "normalize", "--expr", "z00", "--bogus")
    assert exc.value.code == 2


def test_basis_csv(capsys):
    code, out, _ = run_cli(capsys, "basis", "--coset", "W01+W10",
                           "--window", "0:6:0:10", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "a,b,count"
    cells = {tuple(map(int, l.split(",")[:2])): int(l.split(",")[2])
             for l in lines[1:]}
    assert cells == {(0, 0): 1, (0, 2): 1, (2, 0): 1, (2, 2): 3, (2, 4): 2,
                     (4, 2): 2, (4, 4): 5, (4, 6): 3, (6, 4): 3, (6, 6): 7,
                     (6, 8): 4}


def test_map_json(capsys):
    code, out, _ = run_cli(capsys, "map", "--name", "rho", "--expr", "cT",
                           "--format", "json")
    assert code == 0
    body = json.loads(out)
    assert body["schema"] == 1


def test_multiply(capsys):
    code, out, _ = run_cli(capsys, "multiply", "--ring", "bt1",
                           "--expr", "z0", "--expr", "z1")
    assert code == 0
    assert out.strip() == "xi"


def test_euler(capsys):
    code, out, _ = run_cli(capsys, "euler", "--m", "0", "--n", "0",
                           "--twisted")
    assert code == 0
    assert out.strip() == "e^2"


def test_verify_subset_ok_and_reproducible(capsys):
    code, out1, _ = run_cli(capsys, "verify", "--criteria", "C01a,C14")
    assert code == 0
    code, out2, _ = run_cli(capsys, "verify", "--criteria", "C01a,C14")
    assert code == 0
    assert out1 == out2
    assert "PASS C01a" in out1


def test_verify_expected_failure_exit(capsys):
    # the impossible flat system reports FAIL but is a declared expected
    # failure, so the overall verdict stays ok
    code, out, _ = run_cli(capsys, "verify", "--criteria", "C01c")
    assert "FAIL C01c" in out
    assert code == 0
