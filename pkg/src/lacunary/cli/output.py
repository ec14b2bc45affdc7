"""
Report documents written by the command line.

A Report is a titled list of ReportRow entries. Each row carries the computed
numbers at full precision; rows reproducing a published value also carry the
reference and the relative deviation from it. Two renderings:

- json: the pydantic model dump, full precision, one object
- table: aligned text with 10 significant digits
"""

import math

from pydantic import BaseModel, Field, model_validator

SIGNIFICANT_DIGITS = 10


class ReportRow(BaseModel):
    """
    One line of a report.

    Attributes:
        label: Row label, e.g. "k=1" or "n=200 x=1.2 j=3"
        computed: Named computed values
        reference: Named published values, when the row reproduces one
        abs_rel_err: Relative deviation of computed from reference
    """

    label: str
    computed: dict[str, float]
    reference: dict[str, float] | None = None
    abs_rel_err: float | None = None

    @model_validator(mode="after")
    def _reference_and_error_together(self) -> "ReportRow":
        if (self.reference is None) != (self.abs_rel_err is None):
            raise ValueError("abs_rel_err must be given exactly when reference is")
        return self


class Report(BaseModel):
    title: str
    rows: list[ReportRow] = Field(default_factory=list)
    notes: list[str] = Field(default_factory=list)

    def add(
        self,
        label: str,
        computed: dict[str, float],
        reference: dict[str, float] | None = None,
    ) -> ReportRow:
        """Append a row, deriving abs_rel_err from the keys shared with reference."""
        err = None
        if reference is not None:
            err = relative_deviation(computed, reference)
        row = ReportRow(label=label, computed=computed, reference=reference, abs_rel_err=err)
        self.rows.append(row)
        return row


def relative_deviation(computed: dict[str, float], reference: dict[str, float]) -> float:
    """
    |computed - reference| / |reference| over the shared keys.

    Two keys "re" and "im" are compared as one complex number.
    """
    if set(reference) == {"re", "im"}:
        c = complex(computed["re"], computed["im"])
        r = complex(reference["re"], reference["im"])
        return abs(c - r) / abs(r)
    worst = 0.0
    for key, ref in reference.items():
        value = computed[key]
        worst = max(worst, abs(value - ref) / abs(ref) if ref else abs(value))
    return worst


def format_number(value: float, digits: int = SIGNIFICANT_DIGITS) -> str:
    """
    Scientific notation with the given significant digits.

    Examples:
        >>> format_number(43985.55252)
        '4.398555252e+04'
    """
    if math.isnan(value) or math.isinf(value):
        return str(value)
    return f"{value:.{digits - 1}e}"


def _format_values(values: dict[str, float]) -> str:
    return " ".join(f"{k}={format_number(v)}" for k, v in values.items())


def render_json(report: Report) -> str:
    return report.model_dump_json(indent=2) + "\n"


def render_table(report: Report) -> str:
    """Aligned text: label, computed values, reference values, deviation."""
    header = ("label", "computed", "reference", "rel.dev")
    body = [
        (
            row.label,
            _format_values(row.computed),
            _format_values(row.reference) if row.reference else "",
            format_number(row.abs_rel_err, 4) if row.abs_rel_err is not None else "",
        )
        for row in report.rows
    ]
    has_ref = any(r[2] for r in body)
    columns = 4 if has_ref else 2
    widths = [max(len(r[i]) for r in [header, *body]) for i in range(columns)]

    def line(cells) -> str:
        return "  ".join(c.ljust(w) for c, w in zip(cells[:columns], widths)).rstrip()

    out = [report.title, line(header), line(tuple("-" * w for w in widths))]
    out.extend(line(r) for r in body)
    out.extend(f"note: {n}" for n in report.notes)
    return "\n".join(out) + "\n"


def render(report: Report, fmt: str) -> str:
    if fmt == "json":
        return render_json(report)
    return render_table(report)
