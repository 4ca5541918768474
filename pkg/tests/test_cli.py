import json
import subprocess
import sys

import pytest

from schubfock.cli import Command, UsageError, execute, main, parse_args
from schubfock.permcore import product_word, simple


def run_main(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# parsing ------------------------------------------------------------------------------


def test_parse_stanley():
    c = parse_args(["stanley", "w[1: 2 3 1]", "--vars", "2"])
    assert c == Command("stanley", product_word([1, 2]), c.options)
    assert c.options["vars"] == 2 and c.options["pretty"] is False


def test_parse_verify():
    c = parse_args(["verify", "heisenberg", "--max-len", "4"])
    assert (c.verb, c.subject, c.options["max_len"]) == ("verify", "heisenberg", 4)


@pytest.mark.parametrize(
    "argv",
    [
        ["stanley", "not-a-perm"],
        ["frobnicate", "s1"],
        ["stanley", "s1", "--bogus"],
        ["stanley", "s1", "--vars", "0"],
        ["verify", "no-such-sweep"],
        ["maya", "1,3"],
        ["verify", "psi", "--window", "4..1"],
        ["stanley", "s1", "--json", "--pretty"],
    ],
)
def test_parse_rejects(argv):
    with pytest.raises(UsageError):
        parse_args(argv)


def test_negative_window_is_a_value():
    c = parse_args(["backstable", "s0", "--window", "-2..1"])
    assert c.options["window"] == (-2, 1)
    assert parse_args(["backstable", "s0", "--window=-1..3"]).options["window"] == (-1, 3)


def test_help_exits_cleanly(capsys):
    with pytest.raises(SystemExit) as info:
        parse_args(["--help"])
    assert info.value.code == 0
    assert "verify" in capsys.readouterr().out


# execution --------------------------------------------------------------------------------


def test_execute_stanley():
    r = execute(parse_args(["stanley", "s2 s1", "--vars", "2"]))
    assert r.status == "ok" and r.exit_code == 0
    assert r.payload["polynomial"]["text"] == "x1*x2 + x1^2 + x2^2"
    assert r.payload["schur"] == [{"lambda": [2], "coeff": "1"}]


def test_execute_eg():
    r = execute(parse_args(["eg", "s1 s2", "--k", "1"]))
    assert r.payload["eg"] == [{"lambda": [1, 1], "coeff": "1"}]


def test_execute_schubert():
    r = execute(parse_args(["schubert", "w[1: 3 2 1]"]))
    assert r.status == "ok"
    assert r.payload["degree"] == 3
    assert r.payload["polynomial"]["text"] == "x1^2*x2"


def test_execute_backstable():
    r = execute(parse_args(["backstable", "s1", "--window", "-1..1"]))
    assert r.status == "ok"
    assert r.payload["evaluation"]["text"] == "x-1 + x0 + x1"


def test_execute_backstable_window_must_straddle_zero():
    with pytest.raises(UsageError):
        execute(parse_args(["backstable", "s1", "--window", "1..3"]))


def test_execute_mn():
    r = execute(parse_args(["mn", "s2 s1", "--n", "2", "--k", "1"]))
    assert r.status == "ok"
    assert r.payload["mn"] is True and r.payload["dual_mn"] is True


def test_execute_maya():
    r = execute(parse_args(["maya", "3,1", "--k", "3", "--window", "-1..8"]))
    assert r.status == "ok"
    assert r.payload["labels"] == [-1, 0, 1, 4, 2, 5, 6, 3, 7, 8]


def test_execute_verify_small():
    r = execute(parse_args(["verify", "uddu", "--max-len", "2"]))
    assert r.status == "ok"
    assert r.payload[0]["sweep"] == "uddu" and r.payload[0]["checked"] > 0


def test_module_error_becomes_fail_report():
    r = execute(Command("schubert", simple(0), {"vars": None, "k": None, "n": None}))
    assert r.status == "fail" and r.exit_code == 1
    assert r.diagnostics and r.diagnostics[0].startswith("UnsupportedWindow")


# main and output ------------------------------------------------------------------------------


def test_exit_codes(capsys):
    assert run_main(capsys, "eg", "s1")[0] == 0
    code, out, _ = run_main(capsys, "schubert", "s0")
    assert code == 1 and json.loads(out)["status"] == "fail"
    code, out, err = run_main(capsys, "stanley", "not-a-perm")
    assert code == 2 and out == "" and "error" in err


def test_output_is_deterministic_json(capsys):
    argv = ("stanley", "w[1: 3 1 4 2]", "--vars", "3")
    first = run_main(capsys, *argv)[1]
    second = run_main(capsys, *argv)[1]
    assert first == second
    assert first.count("\n") == 1
    report = json.loads(first)
    assert set(report) == {"status", "payload", "diagnostics"}


def test_pretty_output(capsys):
    _, out, _ = run_main(capsys, "eg", "s1", "--pretty")
    assert out.startswith("{\n")
    assert json.loads(out)["status"] == "ok"


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "pool.toml"
    cfg.write_text('window = "-1..2"\nmax_len = 2\nk_values = [0, 1]\n')
    code, out, _ = run_main(capsys, "verify", "exp-transfer", "--config", str(cfg))
    assert code == 0
    small = json.loads(out)["payload"][0]["checked"]
    code, out, _ = run_main(capsys, "verify", "exp-transfer", "--config", str(cfg), "--max-len", "3")
    assert json.loads(out)["payload"][0]["checked"] > small


def test_bad_config_is_usage_error(tmp_path, capsys):
    cfg = tmp_path / "pool.toml"
    cfg.write_text("nonsense = 3\n")
    assert run_main(capsys, "verify", "psi", "--config", str(cfg))[0] == 2
    assert run_main(capsys, "verify", "psi", "--config", str(tmp_path / "missing.toml"))[0] == 2


def test_jobs_do_not_change_output(capsys):
    base = ("verify", "stanley", "--max-len", "3")
    serial = run_main(capsys, *base)[1]
    threaded = run_main(capsys, *base, "--jobs", "4")[1]
    assert serial == threaded


def test_python_dash_m_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "schubfock", "eg", "s1 s2", "--k", "1"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["payload"]["eg"] == [{"coeff": "1", "lambda": [1, 1]}]
