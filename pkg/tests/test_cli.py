"""Command-line surface: validation, dispatch, rendering, exit codes."""

from __future__ import annotations

import json
from importlib import resources

import jsonschema
import pytest

from torsionlab.cli import execute, main, render_json

def write_spec(tmp_path, doc, name="spec.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


def report_schema() -> dict:
    text = (
        resources.files("torsionlab.schemas")
        .joinpath("workbench-report.v1.json")
        .read_text(encoding="utf-8")
    )
    return json.loads(text)


def check_report(report: dict) -> None:
    jsonschema.Draft202012Validator(report_schema()).validate(report)


# -- execute -------------------------------------------------------------------


def test_execute_partition_example():
    doc = {
        "task": "partition",
        "ring": {"zmod": 12},
        "filter": {"mult_set": [1, 3, 9]},
    }
    report, code = execute(doc)
    assert code == 0
    assert report["results"]["K"] == ["(2)"]
    assert report["results"]["Z"] == ["(3)"]
    assert report["results"]["C"] == ["(2)"]
    check_report(report)


def test_execute_census_example():
    report, code = execute({"task": "census", "ring": {"zmod": 12}})
    assert code == 0
    assert report["results"]["gabriel_filters"] == 4
    check_report(report)


def test_execute_enumerate():
    report, code = execute({"task": "enumerate", "ring": {"zmod": 12}})
    assert code == 0
    assert report["results"]["ideal_count"] == 6
    assert sorted(report["results"]["spectrum"]) == ["(2)", "(3)"]
    # factor by (4) is the size-4 local piece, factor by (3) the size-3 one
    assert report["results"]["local_factors"] == ["Z/12/(4)", "Z/12/(3)"]
    check_report(report)


def test_execute_closure():
    doc = {
        "task": "closure",
        "ring": {"zmod": 12},
        "filter": {"mult_set": [1, 3, 9]},
        "params": {"ideal_gens": [6]},
    }
    report, code = execute(doc)
    assert code == 0
    assert report["results"]["closure"] == "(2)"
    assert report["results"]["closure_elements"] == [0, 2, 4, 6, 8, 10]
    assert not report["results"]["is_closed"]
    check_report(report)


def test_execute_certify():
    doc = {
        "task": "certify",
        "ring": {"zmod": 12},
        "filter": {"mult_set": [1, 3, 9]},
        "params": {"ideal_gens": [2]},
    }
    report, code = execute(doc)
    assert code == 0
    cert = report["results"]["certificate"]
    assert cert["generators"] == [2]
    assert cert["h"] == "(1)"
    assert report["results"]["verified"] is True
    check_report(report)


def test_execute_suite_single():
    doc = {"task": "suite", "ring": {"zmod": 6}, "filter": "trivial"}
    report, code = execute(doc)
    assert code == 0
    assert report["results"]["all_passed"] is True
    check_report(report)


def test_execute_monomial_saturate():
    doc = {
        "task": "monomial-decide",
        "params": {
            "op": "saturate",
            "mult_set": {"s": {"vars": {"2": 1}}},
            "ideal": {"gens": [{"vars": {"1": 2, "2": 1}}, {"vars": {"1": 1, "2": 3}}]},
        },
    }
    report, code = execute(doc)
    assert code == 0
    assert report["results"]["saturation"] == "<x1>"
    check_report(report)


def test_execute_monomial_cohen():
    doc = {
        "task": "monomial-decide",
        "params": {
            "op": "cohen",
            "mult_set": {"s": {"vars": {"1": 1}}},
            "primes": [
                {"finite": [1]},
                {"finite": [2]},
                {"tail": {"start": 2}},
            ],
        },
    }
    report, code = execute(doc)
    assert code == 0  # informative without --expect-pass
    results = report["results"]
    assert results["verdict"] == "not-totally-noetherian"
    assert results["consistent"] is True
    assert results["cross_check"]["verdict"] == "refuted"
    check_report(report)


def test_execute_rejects_unknown_fields():
    from torsionlab.errors import SpecValidationError

    with pytest.raises(SpecValidationError):
        execute({"task": "census", "ring": {"zmod": 12}, "bogus": 1})
    with pytest.raises(SpecValidationError):
        execute({"task": "census", "ring": {"zmod": 12}, "params": {"extra": 2}})
    with pytest.raises(SpecValidationError):
        execute({"task": "partition", "ring": {"zmod": 12}})  # missing filter


# -- main() and exit codes -------------------------------------------------------


def test_main_partition_text(tmp_path, capsys):
    spec = write_spec(
        tmp_path,
        {"ring": {"zmod": 12}, "filter": {"mult_set": [1, 3, 9]}},
    )
    assert main(["partition", "--spec", spec]) == 0
    out = capsys.readouterr().out
    assert "K: (2)" in out and "Z: (3)" in out


def test_main_task_mismatch(tmp_path, capsys):
    spec = write_spec(tmp_path, {"task": "census", "ring": {"zmod": 12}})
    assert main(["partition", "--spec", spec]) == 2
    assert "declares task" in capsys.readouterr().err


def test_main_parse_error(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text('{"ring": {', encoding="utf-8")
    assert main(["census", "--spec", str(path)]) == 2
    err = capsys.readouterr().err
    assert "line" in err and "column" in err


def test_main_missing_file(capsys):
    assert main(["census", "--spec", "/nonexistent/x.json"]) == 2


def test_main_expect_pass_on_refuted(tmp_path, capsys):
    spec = write_spec(
        tmp_path,
        {
            "params": {
                "op": "decide",
                "mult_set": {"s": {"vars": {"1": 1}}},
                "ideal": {"families": [{"base": {"vars": {}}, "start": 2}]},
            }
        },
    )
    assert main(["monomial", "--spec", spec]) == 0
    assert main(["monomial", "--spec", spec, "--expect-pass"]) == 1


def test_main_cap_flag(tmp_path, capsys):
    spec = write_spec(tmp_path, {"ring": {"zmod": 20}})
    assert main(["census", "--spec", spec, "--cap", "16"]) == 2
    assert "cap" in capsys.readouterr().err


def test_main_json_format(tmp_path, capsys):
    spec = write_spec(tmp_path, {"ring": {"zmod": 12}, "format": "json"})
    assert main(["census", "--spec", spec]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["results"]["gabriel_filters"] == 4
    assert report["timing_ms"] is None
    check_report(report)


def test_json_reports_are_byte_identical():
    doc = {"task": "suite", "ring": {"zmod": 12}, "filter": {"seeds": [[4]]}}
    first, _ = execute(doc)
    second, _ = execute(doc)
    assert render_json(first) == render_json(second)


def test_json_report_round_trips():
    doc = {"task": "census", "ring": {"zmod": 30}}
    report, _ = execute(doc)
    assert json.loads(render_json(report)) == report
