"""
Unit tests for the reference tables (lacunary/data/references.py).
"""

import json

import pytest

from lacunary.data.references import REFERENCE_DATA_PATH, ReferenceBook


@pytest.mark.unit
def test_saddle_table(references):
    table = references.saddles

    assert (table.n, table.x) == (1000, 2.0)
    assert [row.k for row in table.rows] == list(range(6))
    assert table.rows[0].saddle == complex(0.0, 6.112742)
    assert table.rows[5].approximate == complex(30.002189, 4.467837)


@pytest.mark.unit
def test_table_shapes(references):
    assert all(len(c.errors) == 4 for c in references.truncation)
    assert len(references.values) == 4
    assert all(len(c.theta_pi) == 5 for c in references.stokes)
    assert references.theta_grid_pi == (0.0, 0.1, 0.2, 0.3, 0.4, 0.5)
    assert all(len(c.errors) == len(references.theta_grid_pi) for c in references.complex_errors)


@pytest.mark.unit
def test_every_value_names_its_source(references):
    sources = [row.source for row in references.saddles.rows]
    sources += [c.source for c in references.truncation + references.values]
    sources += [c.source for c in references.stokes + references.complex_errors]

    assert all(s.startswith("Table ") for s in sources)
    assert len(set(sources)) == len(sources)


@pytest.mark.unit
def test_stokes_angles_decrease(references):
    for column in references.stokes:
        assert list(column.theta_pi) == sorted(column.theta_pi, reverse=True)


@pytest.mark.unit
def test_figures(references):
    fig2 = references.figure(2)

    assert [p.label for p in fig2.panels] == ["a", "b", "c", "d"]
    assert fig2.panels[1].theta_pi == references.stokes[1].theta_pi[0]
    with pytest.raises(KeyError):
        references.figure(4)


@pytest.mark.unit
def test_missing_field(tmp_path):
    data = json.loads(REFERENCE_DATA_PATH.read_text(encoding="utf-8"))
    del data["table4"]
    path = tmp_path / "refs.json"
    path.write_text(json.dumps(data), encoding="utf-8")

    with pytest.raises(KeyError):
        ReferenceBook(path)


@pytest.mark.unit
def test_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        ReferenceBook(tmp_path / "absent.json")
