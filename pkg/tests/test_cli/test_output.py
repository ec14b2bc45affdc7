"""
Unit tests for report rendering (lacunary/cli/output.py).
"""

import json

import pytest
from pydantic import ValidationError

from lacunary.cli.output import (
    Report,
    ReportRow,
    format_number,
    relative_deviation,
    render,
)


@pytest.mark.unit
@pytest.mark.parametrize(
    "value, expected",
    [(43985.55252, "4.398555252e+04"), (-1.0, "-1.000000000e+00"), (float("nan"), "nan")],
)
def test_format_number(value, expected):
    assert format_number(value) == expected


@pytest.mark.unit
def test_relative_deviation_of_complex_pair():
    """re and im are compared as one complex number."""
    err = relative_deviation({"re": 3.0, "im": 4.0, "guess_re": 9.0}, {"re": 3.0, "im": 3.0})

    assert err == pytest.approx(1.0 / abs(3 + 3j))


@pytest.mark.unit
def test_relative_deviation_takes_worst_key():
    err = relative_deviation({"a": 1.1, "b": 2.0}, {"a": 1.0, "b": 2.0})

    assert err == pytest.approx(0.1)


@pytest.mark.unit
def test_row_requires_error_with_reference():
    with pytest.raises(ValidationError):
        ReportRow(label="x", computed={"v": 1.0}, reference={"v": 1.0})


@pytest.mark.unit
def test_add_derives_deviation():
    report = Report(title="t")
    row = report.add("r", {"value": 2.0}, {"value": 4.0})

    assert row.abs_rel_err == pytest.approx(0.5)
    assert report.rows == [row]


@pytest.mark.unit
def test_render_json_keeps_full_precision():
    report = Report(title="t")
    report.add("r", {"value": 0.1 + 0.2})
    data = json.loads(render(report, "json"))

    assert data["rows"][0]["computed"]["value"] == 0.1 + 0.2
    assert data["rows"][0]["reference"] is None


@pytest.mark.unit
def test_render_table_without_references():
    report = Report(title="Values", notes=["done"])
    report.add("n=200", {"value": 43985.55252})
    lines = render(report, "table").splitlines()

    assert lines[0] == "Values"
    assert lines[1].split() == ["label", "computed"]
    assert lines[3].split() == ["n=200", "value=4.398555252e+04"]
    assert lines[-1] == "note: done"


@pytest.mark.unit
def test_render_table_with_references():
    report = Report(title="Values")
    report.add("a", {"value": 2.0}, {"value": 4.0})
    report.add("b", {"value": 1.0})
    lines = render(report, "table").splitlines()

    assert lines[1].split() == ["label", "computed", "reference", "rel.dev"]
    assert lines[3].split()[-1] == "5.000e-01"
    assert lines[4].split() == ["b", "value=1.000000000e+00"]
