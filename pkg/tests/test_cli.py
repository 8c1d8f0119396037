import json

import pytest

from ntasep.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_steady_all(capsys):
    code, out = run(capsys, "steady", "--mult", "1,1,1", "--method", "all")
    assert code == 0
    data = json.loads(out.out)
    assert data["weights"] == {"0,1,2": 2, "0,2,1": 1, "1,0,2": 1, "1,2,0": 2, "2,0,1": 2, "2,1,0": 1}
    assert list(data) == sorted(data)


def test_steady_deterministic(capsys):
    _, a = run(capsys, "steady", "--mult", "2,1,1", "--method", "mpf")
    _, b = run(capsys, "steady", "--mult", "2,1,1", "--method", "mpf")
    assert a.out == b.out


def test_steady_tsv(capsys):
    code, out = run(capsys, "steady", "--mult", "1,1,1,1", "--format", "tsv")
    lines = out.out.splitlines()
    assert code == 0 and len(lines) == 24 and lines[0] == "0,1,2,3\t9"


def test_usage_errors(capsys):
    assert run(capsys, "steady", "--mult", "1,0,1")[0] == 64
    assert run(capsys, "steady", "--mult", "a,b")[0] == 64
    assert run(capsys, "apply-r", "--i", "10", "--j", "101")[0] == 64
    with pytest.raises(SystemExit) as exc:
        main(["steady"])
    assert exc.value.code == 64


def test_budget_exit(capsys):
    assert run(capsys, "steady", "--mult", "1,1,1,1", "--budget", "5")[0] == 3


def test_apply_r(capsys):
    code, out = run(capsys, "apply-r", "--i", "1100100100", "--j", "0010111110")
    assert code == 0 and out.out.strip() == "1110110100 0000101110"


def test_hat_and_ybe(capsys):
    code, out = run(capsys, "hat", "--n", "2")
    assert code == 0 and json.loads(out.out)["matrix"] == ["...", "...", "..."]
    assert run(capsys, "ybe", "--L", "4", "--all")[0] == 0
    assert run(capsys, "ybe", "--L", "6", "--samples", "200", "--seed", "3")[0] == 0


def test_rmat_and_xop(capsys):
    code, out = run(capsys, "rmat", "--l", "1", "--m", "2", "--L", "3", "--q0")
    assert code == 0 and json.loads(out.out)["100,011"] == "110,001"
    code, out = run(capsys, "xop", "--n", "2", "--i", "0")
    assert code == 0 and out.out.strip() == "1 + A+"


def test_verify_and_conjecture(capsys):
    assert run(capsys, "verify")[0] == 0
    code, out = run(capsys, "conjecture", "--mult", "1,1,1", "--r", "1")
    assert code == 0 and json.loads(out.out)[0]["stationary"] is True
