import importlib
import json
import logging
import re
from pathlib import Path

import pytest

import rsbf_cli
from rsbf_cli import run
from tools.errors import InternalConsistencyError
from tools.matrix_tools import SquareIdentityFailure, SquareIdentityVerdict

GOLDEN = Path(__file__).parent / "golden"


def run_json(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    assert code == 0, err
    return json.loads(out)


def run_error(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    lines = err.strip().splitlines()
    assert len(lines) == 1
    return code, json.loads(lines[0])


def test_orbits_json(capsys):
    data = run_json(capsys, "orbits", "--n", "4")
    assert data["g"] == 6
    assert [o["representative"] for o in data["orbits"]] == ["0000", "0001", "0011", "0101", "0111", "1111"]
    assert "elements" not in data["orbits"][0]


def test_orbits_elements_csv(capsys):
    assert run(["orbits", "--n", "2", "--elements", "--format", "csv"]) == 0
    out, _ = capsys.readouterr()
    assert out == "representative,size,elements\n00,1,00\n01,2,01 10\n11,1,11\n"


def test_matrix_json_matches_golden(capsys):
    golden = json.loads((GOLDEN / "matrix_n4.json").read_text())
    assert run_json(capsys, "matrix", "--n", "4") == golden


def test_matrix_csv(capsys):
    assert run(["matrix", "--n", "2", "--format", "csv"]) == 0
    out, _ = capsys.readouterr()
    assert out == "1,1,1\n2,0,-2\n1,-1,1\n"


def test_matrix_pretty(capsys):
    assert run(["matrix", "--n", "3", "--format", "pretty"]) == 0
    out, _ = capsys.readouterr()
    assert "rows/columns: 000 001 011 111" in out
    assert "\x1b[" not in out


def test_matrix_pretty_keeps_every_entry(capsys):
    rows = run_json(capsys, "matrix", "--n", "8")["matrix"]
    assert run(["matrix", "--n", "8", "--format", "pretty"]) == 0
    out, _ = capsys.readouterr()
    table = out.split("rows/columns:")[0]
    printed = [
        [int(v) for v in values]
        for values in (re.findall(r"-?\d+", line) for line in table.splitlines())
        if len(values) == len(rows)
    ]
    assert printed == rows


def test_output_is_deterministic(capsys):
    run(["matrix", "--n", "5", "--threads", "3"])
    first, _ = capsys.readouterr()
    run(["matrix", "--n", "5"])
    second, _ = capsys.readouterr()
    assert first == second


def test_out_file(tmp_path, capsys):
    target = tmp_path / "orbits.json"
    assert run(["orbits", "--n", "3", "--out", str(target)]) == 0
    assert capsys.readouterr().out == ""
    assert json.loads(target.read_text())["g"] == 4


def test_verify_default_checks(capsys):
    data = run_json(capsys, "verify", "--n", "4")
    assert data["ok"] is True
    assert set(data["checks"]) == {"square", "trace", "eigen"}
    assert data["checks"]["square"]["holds"] is True
    assert data["checks"]["trace"]["direct"] == 8
    assert data["checks"]["eigen"]["positive"] == 4


def test_verify_all_checks(capsys):
    data = run_json(capsys, "verify", "--n", "6", "--square", "--trace", "--eigen", "--oracle", "--probe", "--seed", "5")
    assert data["ok"] is True
    assert data["checks"]["oracle"]["trace"] == 16
    assert data["checks"]["probe"]["seed"] == 5


def test_verify_small_n_skips_eigen(capsys):
    data = run_json(capsys, "verify", "--n", "2")
    assert data["ok"] is True
    assert "skipped" in data["checks"]["eigen"]


def test_verify_failure_exit_code(capsys, monkeypatch):
    failure = SquareIdentityFailure(i=0, j=1, got=3, expected=0)
    monkeypatch.setattr(
        rsbf_cli,
        "verify_square_identity",
        lambda m, **kwargs: SquareIdentityVerdict(m.n, m.g, False, 1 << m.n, failure),
    )
    code = run(["verify", "--n", "4", "--square"])
    out, err = capsys.readouterr()
    assert code == 1
    assert json.loads(out)["ok"] is False
    assert json.loads(err.strip())["error"] == "verification_failed"


def test_spectrum_csv(capsys):
    assert run(["spectrum", "--n", "4", "--function", "000110", "--format", "csv"]) == 0
    out, _ = capsys.readouterr()
    assert out == (
        "representative,walsh_value\n"
        "0000,4\n0001,4\n0011,4\n0101,-4\n0111,-4\n1111,4\n"
    )


def test_spectrum_from_truth_table_file(tmp_path, capsys):
    path = tmp_path / "f.txt"
    path.write_text("0000010100110110\n")
    data = run_json(capsys, "spectrum", "--n", "4", "--function", f"@{path}")
    assert data["function"] == "000110"
    assert data["bent"] is True
    assert [s["walsh"] for s in data["spectrum"]] == [4, 4, 4, -4, -4, 4]


def test_spectrum_n1_reads_orbit_values(capsys):
    data = run_json(capsys, "spectrum", "--n", "1", "--function", "01")
    assert [s["walsh"] for s in data["spectrum"]] == [0, 2]


def test_eigen(capsys):
    assert run_json(capsys, "eigen", "--n", "6") == {"n": 6, "g": 14, "trace": 16, "positive": 8, "negative": 6}


def test_eigen_csv(capsys):
    assert run(["eigen", "--n", "5", "--format", "csv"]) == 0
    out, _ = capsys.readouterr()
    assert out == "n,g,trace,positive,negative\n5,8,0,4,4\n"


def test_bent_search_exhaustive(capsys):
    golden = json.loads((GOLDEN / "bent_n4.json").read_text())
    assert run_json(capsys, "bent-search", "--n", "4", "--exhaustive") == golden


def test_bent_search_odd(capsys):
    data = run_json(capsys, "bent-search", "--n", "5", "--exhaustive")
    assert data["bent_count"] == 0
    assert data["reason"] == "no bent functions for odd n"


def test_bent_search_sampled(capsys):
    data = run_json(capsys, "bent-search", "--n", "6", "--sample", "300", "--seed", "4")
    assert data["mode"] == "sampled"
    assert data["seed"] == 4
    assert data["functions_tested"] == 300


def test_bent_search_csv_header(capsys):
    assert run(["bent-search", "--n", "4", "--exhaustive", "--format", "csv"]) == 0
    out, _ = capsys.readouterr()
    lines = out.splitlines()
    assert lines[0] == "orbit_values"
    assert lines[1:] == json.loads((GOLDEN / "bent_n4.json").read_text())["bent"]


def test_oracle(capsys):
    data = run_json(capsys, "oracle", "--n", "4")
    assert data == {
        "n": 4,
        "g": 6,
        "trace": 8,
        "sigma_sums": [
            {"k": 0, "sigma_sum": 0},
            {"k": 1, "sigma_sum": 8},
            {"k": 2, "sigma_sum": 16},
            {"k": 3, "sigma_sum": 8},
        ],
    }


@pytest.mark.parametrize("argv,kind", [
    (["orbits"], "usage"),
    (["orbits", "--n", "0"], "usage"),
    (["nonsense", "--n", "3"], "usage"),
    (["bent-search", "--n", "4"], "usage"),
    (["bent-search", "--n", "4", "--exhaustive", "--sample", "3"], "usage"),
    (["orbits", "--n", "40"], "dimension"),
    (["eigen", "--n", "2"], "theorem_scope"),
    (["spectrum", "--n", "4", "--function", "0001"], "invalid_function"),
    (["spectrum", "--n", "3", "--function", "01000000"], "invalid_function"),
])
def test_usage_errors_exit_2(capsys, argv, kind):
    code, error = run_error(capsys, *argv)
    assert code == 2
    assert error["error"] == kind


def test_missing_function_file(capsys, tmp_path):
    code, error = run_error(capsys, "spectrum", "--n", "4", "--function", f"@{tmp_path / 'missing.txt'}")
    assert code == 2
    assert error["error"] == "io"


@pytest.mark.parametrize("argv", [
    ["matrix", "--n", "17"],
    ["matrix", "--n", "6", "--max-n-override", "4"],
    ["bent-search", "--n", "8", "--exhaustive"],
    ["bent-search", "--n", "14", "--sample", "10"],
    ["eigen", "--n", "30"],
])
def test_budget_errors_exit_3(capsys, argv):
    code, error = run_error(capsys, *argv)
    assert code == 3
    assert error["error"] == "budget"


def test_override_raises_budget(capsys):
    data = run_json(capsys, "eigen", "--n", "30", "--max-n-override", "30")
    assert data["positive"] + data["negative"] == data["g"]


def test_internal_error_exit_4(capsys, monkeypatch):
    def broken(config):
        raise InternalConsistencyError("divisibility check failed")

    monkeypatch.setitem(rsbf_cli.COMMANDS, "orbits", broken)
    code, error = run_error(capsys, "orbits", "--n", "3")
    assert code == 4
    assert error == {"error": "internal", "message": "divisibility check failed"}


def test_log_level_defaults_to_error(monkeypatch):
    import config.settings as settings

    monkeypatch.delenv("LOG_LEVEL", raising=False)
    try:
        assert importlib.reload(settings).LOG_LEVEL == "ERROR"
    finally:
        monkeypatch.undo()
        importlib.reload(settings)


def test_budget_warning_stays_off_stderr_by_default(capsys, monkeypatch):
    monkeypatch.setattr(rsbf_cli, "LOG_LEVEL", "ERROR")
    code, error = run_error(capsys, "bent-search", "--n", "8", "--exhaustive")
    assert code == 3
    assert error["error"] == "budget"
    assert logging.getLogger().level == logging.ERROR


def test_internal_error_traceback_logged_at_debug(capsys, monkeypatch):
    def broken(config):
        raise InternalConsistencyError("divisibility check failed")

    monkeypatch.setattr(rsbf_cli, "LOG_LEVEL", "DEBUG")
    monkeypatch.setitem(rsbf_cli.COMMANDS, "orbits", broken)
    assert run(["orbits", "--n", "3"]) == 4
    _, err = capsys.readouterr()
    lines = err.strip().splitlines()
    assert json.loads(lines[-1])["error"] == "internal"
    assert "Traceback" in err
