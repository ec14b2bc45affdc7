"""
Figure documents for traced paths: SVG for viewing, CSV for replotting.

Output is a pure function of the input: coordinates are written with six
decimals and elements in input order, so repeated runs are byte-identical.
"""

import csv
import io
import xml.etree.ElementTree as ET
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import Literal

from lacunary.core.contour import PathPolyline
from lacunary.core.errors import FigureOutputError
from lacunary.core.saddles import Saddle

FigureFormat = Literal["svg", "csv"]

SVG_NS = "http://www.w3.org/2000/svg"
CANVAS_PX = 800
MARGIN = 0.05
STROKES = {"descent": "#1f4e9c", "ascent": "#b03a2e"}


def _fmt(v: float) -> str:
    text = f"{v:.6f}"
    return "0.000000" if text == "-0.000000" else text


def _bounds(coords: list[complex]) -> tuple[float, float, float, float]:
    if not coords:
        return -1.0, -1.0, 2.0, 2.0
    xs = [c.real for c in coords]
    ys = [-c.imag for c in coords]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    w = max(x1 - x0, 1e-3)
    h = max(y1 - y0, 1e-3)
    pad = MARGIN * max(w, h)
    return x0 - pad, y0 - pad, w + 2 * pad, h + 2 * pad


def _svg(
    paths: Sequence[PathPolyline],
    saddles: Sequence[Saddle],
    singularities: Sequence[tuple[int, complex]],
    title: str | None,
) -> str:
    coords = [p for path in paths for p in path.points]
    coords += [s.s for s in saddles] + [t for _, t in singularities]
    x0, y0, w, h = _bounds(coords)
    unit = max(w, h) / 200.0

    root = ET.Element(
        "svg",
        {
            "xmlns": SVG_NS,
            "version": "1.1",
            "width": str(CANVAS_PX),
            "height": str(round(CANVAS_PX * h / w)),
            "viewBox": " ".join(_fmt(v) for v in (x0, y0, w, h)),
        },
    )
    if title:
        ET.SubElement(root, "title").text = title

    group = ET.SubElement(
        root, "g", {"id": "paths", "fill": "none", "stroke-width": _fmt(unit / 2)}
    )
    for path in paths:
        ET.SubElement(
            group,
            "polyline",
            {
                "class": path.kind,
                "data-k": str(path.k),
                "stroke": STROKES[path.kind],
                "points": " ".join(f"{_fmt(p.real)},{_fmt(-p.imag)}" for p in path.points),
            },
        )

    group = ET.SubElement(root, "g", {"id": "saddles", "fill": "black"})
    for saddle in saddles:
        ET.SubElement(
            group,
            "circle",
            {
                "data-k": str(saddle.k),
                "cx": _fmt(saddle.s.real),
                "cy": _fmt(-saddle.s.imag),
                "r": _fmt(1.5 * unit),
            },
        )

    group = ET.SubElement(
        root, "g", {"id": "singularities", "stroke": "black", "stroke-width": _fmt(unit / 2)}
    )
    arm = 1.5 * unit
    for j, t in singularities:
        cx, cy = t.real, -t.imag
        d = (
            f"M{_fmt(cx - arm)},{_fmt(cy - arm)} L{_fmt(cx + arm)},{_fmt(cy + arm)} "
            f"M{_fmt(cx - arm)},{_fmt(cy + arm)} L{_fmt(cx + arm)},{_fmt(cy - arm)}"
        )
        ET.SubElement(group, "path", {"data-j": str(j), "d": d})

    return ET.tostring(root, encoding="unicode", xml_declaration=True) + "\n"


def _csv(
    paths: Sequence[PathPolyline],
    saddles: Sequence[Saddle],
    singularities: Sequence[tuple[int, complex]],
) -> str:
    buffer = io.StringIO(newline="")
    writer = csv.writer(buffer)
    writer.writerow(["k", "kind", "re", "im"])
    for path in paths:
        for p in path.points:
            writer.writerow([path.k, path.kind, _fmt(p.real), _fmt(p.imag)])
    for saddle in saddles:
        writer.writerow([saddle.k, "saddle", _fmt(saddle.s.real), _fmt(saddle.s.imag)])
    for j, t in singularities:
        writer.writerow([j, "singularity", _fmt(t.real), _fmt(t.imag)])
    return buffer.getvalue()


def emit_figure(
    paths: Iterable[PathPolyline],
    saddles: Iterable[Saddle],
    singularities: Iterable[tuple[int, complex]],
    fmt: FigureFormat = "svg",
    target: str | Path | None = None,
    title: str | None = None,
) -> str:
    """
    Render paths, saddles and singularities as an SVG or CSV document.

    SVG: one polyline per path, a dot per saddle, a cross per singularity, with
    the imaginary axis pointing up. CSV: one row per point with columns
    k, kind, re, im; saddles and singularities follow as their own kinds.

    Args:
        paths: Traced polylines
        saddles: Saddles to mark
        singularities: (j, T_j) pairs to mark
        fmt: "svg" or "csv"
        target: File to write; the document is returned either way
        title: SVG title element

    Raises:
        FigureOutputError: If target cannot be written
        ValueError: For an unknown format
    """
    paths, saddles, singularities = list(paths), list(saddles), list(singularities)
    if fmt == "svg":
        document = _svg(paths, saddles, singularities, title)
    elif fmt == "csv":
        document = _csv(paths, saddles, singularities)
    else:
        raise ValueError(f"unknown figure format {fmt!r}")

    if target is not None:
        try:
            Path(target).write_text(document, encoding="utf-8", newline="")
        except OSError as e:
            raise FigureOutputError(str(target), e) from e
    return document
