"""Deterministic byte renderers for tables and plots.

Four formats: fixed-width text, CSV (same dialect the corpus uses), JSON
with full-precision values, and standalone SVG 1.1 for plots.  Identical
inputs always produce identical bytes; nothing here consults the clock,
locale, or environment.
"""

from __future__ import annotations

import csv
import io
import json
from enum import Enum
from xml.sax.saxutils import escape

from ..errors import UnsupportedFormat
from .model import Cell, PlotData, ReportTable, format_number


class OutputFormat(Enum):
    PLAIN_TEXT = "text"
    DELIMITED_VALUES = "csv"
    STRUCTURED_DATA = "json"
    VECTOR_GRAPHIC = "svg"


def _table_text(table: ReportTable) -> str:
    columns = len(table.column_headers)
    widths = [len(h) for h in table.column_headers]
    for row in table.rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell.text))
    lines = [table.title, ""]

    def line(texts: list[str]) -> str:
        parts = []
        for i in range(columns):
            if i == 0:
                parts.append(texts[i].ljust(widths[i]))
            else:
                parts.append(texts[i].rjust(widths[i]))
        return "  ".join(parts).rstrip()

    lines.append(line(list(table.column_headers)))
    for row in table.rows:
        lines.append(line([cell.text for cell in row]))
    if table.footnotes:
        lines.append("")
        lines.extend(table.footnotes)
    return "\n".join(lines) + "\n"


def _plot_text(plot: PlotData) -> str:
    lines = [plot.title, ""]
    lines.append(f"x: {plot.axis_labels[0]}")
    lines.append(f"y: {plot.axis_labels[1]}")
    for series in plot.series:
        lines.append("")
        lines.append(f"{series.name} ({series.kind})")
        if series.kind == "histogram":
            for low, high, count in series.bins:
                lines.append(
                    f"  [{format_number(low, 2)}, {format_number(high, 2)}): {count}"
                )
        else:
            for i, (x, y) in enumerate(series.points):
                label = f"  {series.point_labels[i]}" if series.point_labels else ""
                lines.append(f"  {format_number(x, 4)}, {format_number(y, 4)}{label}")
    return "\n".join(lines) + "\n"


def _table_csv(table: ReportTable) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(table.column_headers)
    for row in table.rows:
        writer.writerow([cell.text for cell in row])
    return buffer.getvalue()


def _plot_csv(plot: PlotData) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    if plot.kind == "histogram":
        writer.writerow(("series", "bin_low", "bin_high", "count"))
        for series in plot.series:
            for low, high, count in series.bins:
                writer.writerow((series.name, repr(low), repr(high), count))
    else:
        writer.writerow(("series", "x", "y", "label"))
        for series in plot.series:
            for i, (x, y) in enumerate(series.points):
                label = series.point_labels[i] if series.point_labels else ""
                writer.writerow((series.name, repr(x), repr(y), label))
    return buffer.getvalue()


def _cell_value(cell: Cell):
    if isinstance(cell.value, tuple):
        return list(cell.value)
    return cell.value


def table_payload(table: ReportTable) -> dict:
    """JSON-ready dictionary of a table with full-precision values."""
    return {
        "title": table.title,
        "headers": list(table.column_headers),
        "rows": [[_cell_value(cell) for cell in row] for row in table.rows],
        "footnotes": list(table.footnotes),
    }


def plot_payload(plot: PlotData) -> dict:
    """JSON-ready dictionary of a plot with full-precision coordinates."""
    return {
        "title": plot.title,
        "kind": plot.kind,
        "axis_labels": list(plot.axis_labels),
        "series": [
            {
                "name": series.name,
                "kind": series.kind,
                "points": [[x, y] for x, y in series.points],
                "bins": [[low, high, count] for low, high, count in series.bins],
                "point_labels": list(series.point_labels),
            }
            for series in plot.series
        ],
    }


def _json_bytes(payload: dict) -> bytes:
    return (json.dumps(payload, ensure_ascii=False, indent=2) + "\n").encode("utf-8")


# Fixed plot geometry, px.
_WIDTH = 640
_HEIGHT = 480
_LEFT = 70.0
_RIGHT = 620.0
_TOP = 50.0
_BOTTOM = 420.0
_PALETTE = ("#4477aa", "#ee6677", "#228833", "#ccbb44")
_TICKS = 5


def _fmt(value: float) -> str:
    return format_number(value, 2)


def _tick_label(value: float) -> str:
    text = f"{value:.4g}"
    return "0" if text == "-0" else text


class _Scale:
    def __init__(self, low: float, high: float, pixel_low: float, pixel_high: float):
        if high == low:
            low -= 0.5
            high += 0.5
        self.low = low
        self.high = high
        self.pixel_low = pixel_low
        self.pixel_high = pixel_high

    def __call__(self, value: float) -> float:
        fraction = (value - self.low) / (self.high - self.low)
        return self.pixel_low + fraction * (self.pixel_high - self.pixel_low)

    def ticks(self) -> list[float]:
        step = (self.high - self.low) / (_TICKS - 1)
        return [self.low + i * step for i in range(_TICKS)]


def _plot_svg(plot: PlotData) -> str:
    if plot.kind == "histogram":
        all_bins = [b for series in plot.series for b in series.bins]
        x_low = min(b[0] for b in all_bins)
        x_high = max(b[1] for b in all_bins)
        y_low = 0.0
        y_high = float(max(b[2] for b in all_bins) or 1)
    else:
        xs = [p[0] for series in plot.series for p in series.points]
        ys = [p[1] for series in plot.series for p in series.points]
        x_pad = 0.05 * ((max(xs) - min(xs)) or 1.0)
        y_pad = 0.05 * ((max(ys) - min(ys)) or 1.0)
        x_low, x_high = min(xs) - x_pad, max(xs) + x_pad
        y_low, y_high = min(ys) - y_pad, max(ys) + y_pad
    sx = _Scale(x_low, x_high, _LEFT, _RIGHT)
    sy = _Scale(y_low, y_high, _BOTTOM, _TOP)

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_WIDTH}" height="{_HEIGHT}" viewBox="0 0 {_WIDTH} {_HEIGHT}">',
        f'<rect x="0" y="0" width="{_WIDTH}" height="{_HEIGHT}" fill="#ffffff"/>',
        f'<text x="{_WIDTH // 2}" y="26" text-anchor="middle" '
        f'font-family="sans-serif" font-size="14">{escape(plot.title)}</text>',
    ]
    axis_style = 'stroke="#000000" stroke-width="1"'
    text_style = 'font-family="sans-serif" font-size="11"'
    parts.append(
        f'<line x1="{_fmt(_LEFT)}" y1="{_fmt(_BOTTOM)}" x2="{_fmt(_RIGHT)}" '
        f'y2="{_fmt(_BOTTOM)}" {axis_style}/>'
    )
    parts.append(
        f'<line x1="{_fmt(_LEFT)}" y1="{_fmt(_TOP)}" x2="{_fmt(_LEFT)}" '
        f'y2="{_fmt(_BOTTOM)}" {axis_style}/>'
    )
    for tick in sx.ticks():
        px = sx(tick)
        parts.append(
            f'<line x1="{_fmt(px)}" y1="{_fmt(_BOTTOM)}" x2="{_fmt(px)}" '
            f'y2="{_fmt(_BOTTOM + 5)}" {axis_style}/>'
        )
        parts.append(
            f'<text x="{_fmt(px)}" y="{_fmt(_BOTTOM + 18)}" text-anchor="middle" '
            f"{text_style}>{escape(_tick_label(tick))}</text>"
        )
    for tick in sy.ticks():
        py = sy(tick)
        parts.append(
            f'<line x1="{_fmt(_LEFT - 5)}" y1="{_fmt(py)}" x2="{_fmt(_LEFT)}" '
            f'y2="{_fmt(py)}" {axis_style}/>'
        )
        parts.append(
            f'<text x="{_fmt(_LEFT - 8)}" y="{_fmt(py + 4)}" text-anchor="end" '
            f"{text_style}>{escape(_tick_label(tick))}</text>"
        )
    parts.append(
        f'<text x="{_fmt((_LEFT + _RIGHT) / 2)}" y="{_fmt(_BOTTOM + 38)}" '
        f'text-anchor="middle" {text_style}>{escape(plot.axis_labels[0])}</text>'
    )
    parts.append(
        f'<text x="18" y="{_fmt((_TOP + _BOTTOM) / 2)}" text-anchor="middle" '
        f'transform="rotate(-90 18 {_fmt((_TOP + _BOTTOM) / 2)})" '
        f"{text_style}>{escape(plot.axis_labels[1])}</text>"
    )

    for index, series in enumerate(plot.series):
        color = _PALETTE[index % len(_PALETTE)]
        if series.kind == "histogram":
            for low, high, count in series.bins:
                left = sx(low)
                top = sy(float(count))
                parts.append(
                    f'<rect x="{_fmt(left)}" y="{_fmt(top)}" '
                    f'width="{_fmt(sx(high) - left)}" '
                    f'height="{_fmt(_BOTTOM - top)}" fill="{color}" '
                    f'stroke="#ffffff" stroke-width="1"/>'
                )
        elif series.kind == "curve":
            coordinates = " ".join(
                f"{_fmt(sx(x))},{_fmt(sy(y))}" for x, y in series.points
            )
            parts.append(
                f'<polyline points="{coordinates}" fill="none" '
                f'stroke="{color}" stroke-width="2"/>'
            )
        else:
            for i, (x, y) in enumerate(series.points):
                title = (
                    f"<title>{escape(series.point_labels[i])}</title>"
                    if series.point_labels
                    else ""
                )
                parts.append(
                    f'<circle cx="{_fmt(sx(x))}" cy="{_fmt(sy(y))}" r="3.5" '
                    f'fill="{color}" fill-opacity="0.8">{title}</circle>'
                    if title
                    else f'<circle cx="{_fmt(sx(x))}" cy="{_fmt(sy(y))}" r="3.5" '
                    f'fill="{color}" fill-opacity="0.8"/>'
                )
    if len(plot.series) > 1:
        for index, series in enumerate(plot.series):
            color = _PALETTE[index % len(_PALETTE)]
            y = _TOP + 14 + 16 * index
            parts.append(
                f'<rect x="{_fmt(_RIGHT - 130)}" y="{_fmt(y - 9)}" width="10" '
                f'height="10" fill="{color}"/>'
            )
            parts.append(
                f'<text x="{_fmt(_RIGHT - 115)}" y="{_fmt(y)}" '
                f"{text_style}>{escape(series.name)}</text>"
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render(artifact: ReportTable | PlotData, output_format: OutputFormat) -> bytes:
    """Serialize a table or plot to bytes in the requested format."""
    if isinstance(artifact, ReportTable):
        if output_format is OutputFormat.PLAIN_TEXT:
            return _table_text(artifact).encode("utf-8")
        if output_format is OutputFormat.DELIMITED_VALUES:
            return _table_csv(artifact).encode("utf-8")
        if output_format is OutputFormat.STRUCTURED_DATA:
            return _json_bytes(table_payload(artifact))
        raise UnsupportedFormat("vector output is only available for plots")
    if isinstance(artifact, PlotData):
        if output_format is OutputFormat.PLAIN_TEXT:
            return _plot_text(artifact).encode("utf-8")
        if output_format is OutputFormat.DELIMITED_VALUES:
            return _plot_csv(artifact).encode("utf-8")
        if output_format is OutputFormat.STRUCTURED_DATA:
            return _json_bytes(plot_payload(artifact))
        return _plot_svg(artifact).encode("utf-8")
    raise TypeError(f"cannot render {type(artifact).__name__}")
