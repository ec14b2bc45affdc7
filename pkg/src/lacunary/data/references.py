"""
Published reference values used by `reproduce` and by the test-suite.

Every number of the five reference tables is stored in reference_values.json
next to this module, each entry carrying a `source` string naming its table,
row and column. ReferenceBook loads the file once into frozen dataclasses.

Data Storage:
- reference_values.json ships as package data
- Read-only; values are transcribed, never recomputed here
"""

import json
from dataclasses import dataclass
from pathlib import Path

# ============================================================================
# CONFIGURATION
# ============================================================================

REFERENCE_DATA_PATH = Path(__file__).parent / "reference_values.json"


# ============================================================================
# DATA STRUCTURES
# ============================================================================


@dataclass(frozen=True)
class SaddleRow:
    """One row of the saddle table: refined and approximate s_k."""

    k: int
    saddle: complex
    approximate: complex
    source: str


@dataclass(frozen=True)
class SaddleTable:
    n: int
    x: float
    rows: tuple[SaddleRow, ...]


@dataclass(frozen=True)
class TruncationColumn:
    """Relative errors for j = 0..3 at one real (n, x)."""

    n: int
    x: float
    errors: tuple[float, ...]
    source: str


@dataclass(frozen=True)
class ValueColumn:
    """Exact value, expansion and r(n) approximation at one real (n, x)."""

    n: int
    x: float
    exact: float
    asymptotic: float
    gn: float
    source: str


@dataclass(frozen=True)
class StokesColumn:
    """theta*/pi for the pairs (1,2) .. (5,6) at one (n, |x|)."""

    n: int
    abs_x: float
    theta_pi: tuple[float, ...]
    source: str


@dataclass(frozen=True)
class ComplexErrorColumn:
    """Relative errors of the complex expansion along the theta grid."""

    n: int
    abs_x: float
    errors: tuple[float, ...]
    source: str


@dataclass(frozen=True)
class FigurePanel:
    label: str
    n: int
    abs_x: float
    theta_pi: float
    k_min: int
    k_max: int


@dataclass(frozen=True)
class FigureSpec:
    caption: str
    panels: tuple[FigurePanel, ...]


# ============================================================================
# REFERENCE BOOK
# ============================================================================


class ReferenceBook:
    """
    The published tables and figure configurations.

    Attributes:
        saddles: Table of refined and approximate saddles (n=1000, x=2)
        truncation: Error against truncation index, three (n, x) columns
        values: Exact vs expansion vs r(n) approximation, four columns
        stokes: Stokes angles, two (n, |x|) columns
        theta_grid_pi: theta/pi grid of the complex-error table
        complex_errors: Complex-x relative errors, three columns
        figures: Figure configurations keyed "fig1".."fig3"
    """

    def __init__(self, path: Path = REFERENCE_DATA_PATH):
        """
        Load the reference tables.

        Raises:
            FileNotFoundError: If the data file is missing
            KeyError: If a required field is missing
        """
        with open(path, encoding="utf-8") as f:
            data = json.load(f)

        t1 = data["table1"]
        self.saddles = SaddleTable(
            n=t1["n"],
            x=t1["x"],
            rows=tuple(
                SaddleRow(
                    k=row["k"],
                    saddle=complex(*row["saddle"]),
                    approximate=complex(*row["approximate"]),
                    source=row["source"],
                )
                for row in t1["rows"]
            ),
        )
        self.truncation = tuple(
            TruncationColumn(c["n"], c["x"], tuple(c["errors"]), c["source"])
            for c in data["table2"]["columns"]
        )
        self.values = tuple(
            ValueColumn(c["n"], c["x"], c["exact"], c["asymptotic"], c["gn"], c["source"])
            for c in data["table3"]["columns"]
        )
        self.stokes = tuple(
            StokesColumn(c["n"], c["abs_x"], tuple(c["theta_pi"]), c["source"])
            for c in data["table4"]["columns"]
        )
        self.theta_grid_pi = tuple(data["table5"]["theta_pi"])
        self.complex_errors = tuple(
            ComplexErrorColumn(c["n"], c["abs_x"], tuple(c["errors"]), c["source"])
            for c in data["table5"]["columns"]
        )
        self.figures = {
            key: FigureSpec(
                caption=spec["caption"],
                panels=tuple(FigurePanel(**panel) for panel in spec["panels"]),
            )
            for key, spec in data["figures"].items()
        }

    def figure(self, number: int) -> FigureSpec:
        try:
            return self.figures[f"fig{number}"]
        except KeyError:
            raise KeyError(f"no figure {number}; available: {sorted(self.figures)}") from None
