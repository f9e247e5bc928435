#!/usr/bin/env python3
"""Tests for the batch command line: eval, table, verify and constants."""

import csv
import io
import json

from gammamorphic.cli import ArgumentGrid, main
from gammamorphic.registry import TABLE_COLUMNS, evaluate


def test_eval_prints_value_and_route(capsys):
    assert main(["eval", "barnes-g", "--x", "4"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("value")
    assert "route" in out


def test_eval_domain_error_exits_one(capsys):
    assert main(["eval", "barnes-g", "--x", "0"]) == 1
    assert "ZeroError" in capsys.readouterr().err


def test_table_csv_header_and_rows(capsys):
    assert main(["table", "barnes-g", "--start", "0.5", "--stop", "3.0", "--count", "11"]) == 0
    rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
    assert rows[0] == ["arg_re", "arg_im", "value_re", "value_im", "abs_error", "route"]
    assert tuple(rows[0]) == TABLE_COLUMNS
    assert len(rows) == 12


def test_table_aborts_on_first_bad_argument(tmp_path, capsys):
    target = tmp_path / "table.csv"
    code = main(["table", "barnes-g", "--start", "-1.0", "--stop", "1.0", "--count", "5", "--output", str(target)])
    assert code == 1
    assert not target.exists()
    assert "x = -1.0" in capsys.readouterr().err


def test_table_json_is_bit_exact(tmp_path):
    target = tmp_path / "table.json"
    assert main(["table", "gamma", "--start", "0.3", "--stop", "4.1", "--count", "7", "--format", "json",
                 "--output", str(target)]) == 0
    rows = json.loads(target.read_text())
    assert len(rows) == 7
    for row in rows:
        expected = evaluate("gamma", row["arg_re"])
        assert row["value_re"] == expected.value
        assert row["abs_error"] == expected.abs_error


def test_table_from_manifest(tmp_path, capsys):
    manifest = tmp_path / "run.json"
    manifest.write_text(json.dumps({
        "function": "g2",
        "alpha": 2.0,
        "grid": {"start": 0.5, "stop": 2.5, "count": 3},
        "format": "csv",
        "log": True,
    }))
    assert main(["table", "--manifest", str(manifest)]) == 0
    rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
    assert len(rows) == 4


def test_complex_grid_is_row_major():
    grid = ArgumentGrid(start=1.0, stop=2.0, count=2, im_start=0.0, im_stop=1.0, im_count=2)
    assert grid.points() == [1.0, 2.0, 1 + 1j, 2 + 1j]


def test_flag_errors_exit_two(capsys):
    assert main(["verify", "--only", "NOPE"]) == 2
    assert "NOPE" in capsys.readouterr().err
    assert main(["table", "barnes-g"]) == 2
    assert main(["eval", "no-such-function"]) == 2


def test_malformed_numbers_are_flag_errors(capsys):
    assert main(["eval", "barnes-g", "--x", "abc"]) == 2
    assert "not a number" in capsys.readouterr().err
    assert main(["eval", "g2", "--x", "1.5", "--alpha", "two"]) == 2
    assert main(["table", "g2", "--start", "1", "--stop", "2", "--count", "3", "--alpha", "two"]) == 2


def test_help_lists_functions_and_identities(capsys):
    assert main(["--help"]) == 0
    out = capsys.readouterr().out
    for name in ("barnes-g", "g2", "double-sine", "FE_G", "S2_PREFACTOR"):
        assert name in out


def test_verify_json(capsys):
    assert main(["verify", "--only", "FE_G,GLAISHER_DEF", "--density", "small", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["summary"]["exit_code"] == 0
    assert {r["id"] for r in payload["reports"]} == {"FE_G", "GLAISHER_DEF"}


def test_verify_manifest_tolerances(tmp_path, capsys):
    manifest = tmp_path / "tol.json"
    manifest.write_text(json.dumps({"tolerances": {"FE_G": -1.0}}))
    assert main(["verify", "--only", "FE_G", "--density", "small", "--manifest", str(manifest)]) == 1
    assert "failing verified identities: FE_G" in capsys.readouterr().out


def test_constants(capsys):
    assert main(["constants", "--format", "json"]) == 0
    rows = {r["name"]: r for r in json.loads(capsys.readouterr().out)}
    assert abs(rows["glaisher"]["value"] - 1.2824271291006226) < 1e-14
    assert "zeta_prime_minus_one" in rows
