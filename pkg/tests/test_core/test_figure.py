"""
Unit tests for figure output (lacunary/core/figure.py).
"""

import csv
import io
import xml.etree.ElementTree as ET

import pytest

from lacunary.core.contour import PathPolyline
from lacunary.core.errors import FigureOutputError
from lacunary.core.figure import emit_figure

SVG = "{http://www.w3.org/2000/svg}"


@pytest.fixture
def polylines():
    return [
        PathPolyline(
            k=0,
            kind="descent",
            points=(6j, 1 + 5j, 2 + 4j),
            psi_values=(0j, 1 + 0j, 2 + 0j),
            terminus="singularity",
            terminus_index=0,
        ),
        PathPolyline(
            k=0,
            kind="ascent",
            points=(6j, 7j),
            psi_values=(0j, -1 + 0j),
            terminus="infinity",
            direction=1.5,
        ),
    ]


@pytest.mark.unit
def test_svg_document(polylines, symmetric_saddles_200_2):
    marks = [(-1, -3.14 + 0.69j), (0, 3.14 + 0.69j)]
    document = emit_figure(polylines, symmetric_saddles_200_2, marks, title="paths")
    root = ET.fromstring(document.split("?>", 1)[1])

    assert root.tag == f"{SVG}svg"
    assert root.find(f"{SVG}title").text == "paths"
    lines = root.findall(f".//{SVG}polyline")
    assert [line.get("class") for line in lines] == ["descent", "ascent"]
    assert lines[0].get("points").split()[0] == "0.000000,-6.000000"
    assert len(root.findall(f".//{SVG}circle")) == len(symmetric_saddles_200_2)
    assert [p.get("data-j") for p in root.findall(f".//{SVG}path")] == ["-1", "0"]


@pytest.mark.unit
def test_svg_is_reproducible(polylines):
    first = emit_figure(polylines, [], [(0, 3.14 + 0.69j)])
    second = emit_figure(polylines, [], [(0, 3.14 + 0.69j)])

    assert first == second


@pytest.mark.unit
def test_csv_document(polylines):
    document = emit_figure(polylines, [], [(0, 3.0 + 1.0j)], fmt="csv")
    rows = list(csv.reader(io.StringIO(document)))

    assert rows[0] == ["k", "kind", "re", "im"]
    assert len(rows) == 1 + 3 + 2 + 1
    assert rows[-1][:2] == ["0", "singularity"]


@pytest.mark.unit
def test_writes_target(polylines, tmp_path):
    target = tmp_path / "paths.csv"
    document = emit_figure(polylines, [], [], fmt="csv", target=target)

    assert target.read_bytes().decode("utf-8") == document
    assert "\r\n" in document


@pytest.mark.unit
def test_unwritable_target(polylines, tmp_path):
    with pytest.raises(FigureOutputError) as exc_info:
        emit_figure(polylines, [], [], target=tmp_path / "missing" / "paths.svg")

    assert "missing" in exc_info.value.target


@pytest.mark.unit
def test_unknown_format(polylines):
    with pytest.raises(ValueError):
        emit_figure(polylines, [], [], fmt="png")
