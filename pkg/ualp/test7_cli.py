# test7_cli.py
import csv
import io
import json

import pytest

from ualp import __version__
from ualp.cli import EXIT_FAILURES, EXIT_IO, EXIT_OK, EXIT_USAGE, main


def _rows(text):
    return list(csv.reader(io.StringIO(text)))


"""------------eval------------"""

def test_eval_single_point(capsys):
    assert main(["eval", "--m-prime", "1", "--n", "0", "--x", "0.6"]) == EXIT_OK
    rows = _rows(capsys.readouterr().out)
    assert rows[0] == ["x", "value"]
    assert float(rows[1][0]) == 0.6
    assert float(rows[1][1]) == pytest.approx(0.8, abs=1e-15)


def test_eval_legendre_degree_one(capsys):
    assert main(["eval", "--m-prime", "0", "--n", "1", "--x", "0.5"]) == EXIT_OK
    x, value = capsys.readouterr().out.splitlines()[1].split(",")
    assert x == "0.5"
    assert float(value) == pytest.approx(0.5, abs=1e-15)


def test_eval_range(capsys):
    assert main(["eval", "--m-prime", "0", "--n", "2", "--x-range", "-1", "1", "5"]) == EXIT_OK
    rows = _rows(capsys.readouterr().out)
    assert len(rows) == 6
    assert [float(row[0]) for row in rows[1:]] == [-1.0, -0.5, 0.0, 0.5, 1.0]


def test_eval_outside_domain(capsys):
    assert main(["eval", "--m-prime", "1", "--n", "0", "--x", "1.5"]) == EXIT_USAGE
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "[-1, 1]" in captured.err
    assert len(captured.err.strip().splitlines()) == 1


@pytest.mark.parametrize("argv", [
    ["eval", "--m-prime", "1", "--x", "0.5"],
    ["eval", "--m-prime", "-1", "--n", "0", "--x", "0.5"],
    ["eval", "--m-prime", "1", "--n", "0", "--x", "0.5", "--x-range", "0", "1", "3"],
    ["eval", "--m-prime", "1", "--n", "0", "--x", "0.5", "--format", "json"],
    ["eval", "--m-prime", "1", "--n", "0", "--x-range", "0", "1", "1"],
    ["bogus"],
    [],
])
def test_usage_errors(argv, capsys):
    assert main(argv) == EXIT_USAGE
    assert capsys.readouterr().err.startswith("ualp")


"""------------tabulate------------"""

def test_tabulate_shape_and_values(capsys):
    assert main(["tabulate", "--m-prime", "0", "--n-max", "2", "--x-count", "3"]) == EXIT_OK
    rows = _rows(capsys.readouterr().out)
    assert len(rows) == 4
    assert all(len(row) == 4 for row in rows)
    assert rows[0][0] == "x"
    by_x = {float(row[0]): [float(cell) for cell in row[1:]] for row in rows[1:]}
    assert by_x[1.0] == pytest.approx([1.0, 1.0, 1.0], abs=1e-14)
    assert by_x[0.0][1] == 0.0


def test_tabulate_is_deterministic(tmp_path):
    first = tmp_path / "first.csv"
    second = tmp_path / "second.csv"
    argv = ["tabulate", "--m-prime", "1.5", "--n-max", "4", "--x-count", "11"]
    assert main(argv + ["--output", str(first)]) == EXIT_OK
    assert main(argv + ["--output", str(second)]) == EXIT_OK
    assert first.read_bytes() == second.read_bytes()


def test_tabulate_bad_arguments():
    assert main(["tabulate", "--m-prime", "0", "--n-max", "-1", "--x-count", "3"]) == EXIT_USAGE
    assert main(["tabulate", "--m-prime", "0", "--n-max", "2", "--x-count", "1"]) == EXIT_USAGE


def test_tabulate_unwritable_output(tmp_path):
    target = tmp_path / "missing-dir" / "table.csv"
    argv = ["tabulate", "--m-prime", "0", "--n-max", "2", "--x-count", "3", "--output", str(target)]
    assert main(argv) == EXIT_IO


"""------------verify------------"""

def test_verify_power_exp_report(tmp_path):
    output = tmp_path / "report.json"
    assert main(["verify", "--identity", "power-exp", "--no-timestamp", "--output", str(output)]) == EXIT_OK
    report = json.loads(output.read_text())
    assert list(report) == ["tool_version", "timestamp", "identity_name", "tolerance_config", "records", "summary"]
    assert report["tool_version"] == __version__
    assert report["timestamp"] is None
    assert report["identity_name"] == "power-exp"
    assert report["summary"] == {"total": 5, "passed": 5, "failed": 0}
    first = report["records"][0]
    for key in ["identity_name", "parameters", "closed_form", "numeric", "abs_diff", "rel_diff", "passed",
                "numeric_error_estimate"]:
        assert key in first
    assert first["parameters"] == {"m": 1.0, "n": 2.0, "beta": 1.0}


def test_verify_report_has_timestamp_by_default(capsys):
    assert main(["verify", "--identity", "power-exp"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["timestamp"].endswith("+00:00")


def test_verify_csv_format(capsys):
    assert main(["verify", "--identity", "power-exp", "--format", "csv"]) == EXIT_OK
    rows = _rows(capsys.readouterr().out)
    assert rows[0][:3] == ["identity_name", "parameters", "closed_form"]
    assert len(rows) == 6
    assert all(row[6] == "true" for row in rows[1:])


def test_verify_divergent_point_fails_without_aborting(tmp_path):
    output = tmp_path / "bessel.json"
    argv = ["verify", "--identity", "bessel-integral", "--grid", "includes-divergent-point",
            "--abs-tol", "1e-6", "--rel-tol", "1e-6", "--no-timestamp", "--output", str(output)]
    assert main(argv) == EXIT_FAILURES
    report = json.loads(output.read_text())
    assert report["summary"] == {"total": 5, "passed": 4, "failed": 1}
    assert "DomainError" in report["records"][-1]["annotation"]


def test_verify_unknown_identity(capsys):
    assert main(["verify", "--identity", "unknown-thing"]) == EXIT_USAGE
    assert "unknown-thing" in capsys.readouterr().err


def test_verify_unknown_preset():
    assert main(["verify", "--identity", "norm", "--grid", "includes-divergent-point"]) == EXIT_USAGE


def test_verify_grid_file(tmp_path, capsys):
    grid = tmp_path / "grid.json"
    grid.write_text(json.dumps([{"m": 0, "n": 1, "beta": 3}, {"m": 1, "n": 2, "beta": 1}]))
    assert main(["verify", "--identity", "power-exp", "--grid-file", str(grid), "--no-timestamp"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["summary"]["total"] == 2
    assert report["records"][0]["closed_form"] == pytest.approx(1.0 / 3.0)


def test_verify_empty_grid_file(tmp_path, capsys):
    grid = tmp_path / "grid.json"
    grid.write_text("[]")
    assert main(["verify", "--identity", "main-integral", "--grid-file", str(grid)]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["records"] == []


def test_verify_grid_file_errors(tmp_path):
    missing = tmp_path / "nope.json"
    assert main(["verify", "--identity", "power-exp", "--grid-file", str(missing)]) == EXIT_IO
    malformed = tmp_path / "bad.json"
    malformed.write_text('[{"m": 1, "n": 2}]')
    assert main(["verify", "--identity", "power-exp", "--grid-file", str(malformed)]) == EXIT_USAGE
    not_json = tmp_path / "bad2.json"
    not_json.write_text("{not json")
    assert main(["verify", "--identity", "power-exp", "--grid-file", str(not_json)]) == EXIT_USAGE


def test_verify_overflowing_point_fails_without_aborting(tmp_path, capsys):
    grid = tmp_path / "grid.json"
    grid.write_text(json.dumps([{"m": 1, "n": 2, "beta": 1}, {"m": 300, "n": 1, "beta": 1e-5}]))
    argv = ["verify", "--identity", "power-exp", "--grid-file", str(grid), "--no-timestamp"]
    assert main(argv) == EXIT_FAILURES
    report = json.loads(capsys.readouterr().out)
    assert report["summary"] == {"total": 2, "passed": 1, "failed": 1}
    assert report["records"][1]["annotation"].startswith("RangeError")


def test_verify_status_lines_go_to_stderr(capsys):
    assert main(["verify", "--identity", "power-exp", "--no-timestamp", "--debug"]) == EXIT_OK
    captured = capsys.readouterr()
    json.loads(captured.out)
    assert "5/5 passed" in captured.err
    # no colour codes when stderr is not a terminal
    assert "\x1b[" not in captured.err


"""------------identities------------"""

def test_identities_listing(capsys):
    assert main(["identities"]) == EXIT_OK
    rows = _rows(capsys.readouterr().out)
    assert rows[0] == ["identity", "grid", "points"]
    listed = {(row[0], row[1]): int(row[2]) for row in rows[1:]}
    assert listed[("main-integral", "default")] == 144
    assert listed[("orthogonality", "default")] == 108
    assert listed[("bessel-integral", "includes-divergent-point")] == 5
