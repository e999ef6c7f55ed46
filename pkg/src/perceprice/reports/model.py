"""Report carriers: tables with display strings plus numeric shadows, plots.

Display strings are produced once, here, under round-half-to-even, so every
renderer emits identical bytes for identical inputs.  Full-precision values
ride along as shadows for machine consumers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

CellValue = Union[float, int, str, tuple[float, float], None]

SIGNIFICANCE_LEGEND = "Signif. codes: 0 '***' 0.001 '**' 0.01 '*' 0.05 '.' 0.1 ' ' 1"


def format_number(value: float, decimals: int) -> str:
    """Fixed-point, round-half-to-even, without negative zero."""
    text = f"{value:.{decimals}f}"
    if float(text) == 0.0:
        text = f"{0.0:.{decimals}f}"
    return text


def significance_tier(p_value: float) -> str:
    """Map a p-value to the printed legend's code tier."""
    if p_value <= 0.001:
        return "***"
    if p_value <= 0.01:
        return "**"
    if p_value <= 0.05:
        return "*"
    if p_value <= 0.1:
        return "."
    return ""


def significance_display(p_value: float) -> str:
    """Parenthesized tier as the source tables print it; empty when none."""
    tier = significance_tier(p_value)
    return f"({tier})" if tier else ""


@dataclass(frozen=True)
class Cell:
    """One table cell: display text plus an optional full-precision shadow."""

    text: str
    value: CellValue = None
    decimals: int | None = None

    @staticmethod
    def number(value: float, decimals: int) -> "Cell":
        return Cell(text=format_number(value, decimals), value=value, decimals=decimals)

    @staticmethod
    def integer(value: int) -> "Cell":
        return Cell(text=str(value), value=value)

    @staticmethod
    def label(text: str) -> "Cell":
        return Cell(text=text, value=text)

    @staticmethod
    def p_value(p: float) -> "Cell":
        # Three decimals normally; four when the value would print as 0.000,
        # matching the printed tables' treatment of very small p-values.
        decimals = 4 if abs(p) < 0.0005 else 3
        return Cell.number(p, decimals)

    @staticmethod
    def pair(first: float, second: float, first_decimals: int, second_decimals: int) -> "Cell":
        text = (
            f"{format_number(first, first_decimals)} "
            f"({format_number(second, second_decimals)})"
        )
        return Cell(text=text, value=(first, second))


@dataclass(frozen=True)
class ReportTable:
    """A titled grid of cells with ordered footnotes."""

    title: str
    column_headers: tuple[str, ...]
    rows: tuple[tuple[Cell, ...], ...]
    footnotes: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        for row in self.rows:
            if len(row) != len(self.column_headers):
                raise ValueError("every row needs exactly one cell per header")

    def cell(self, row_index: int, column: str) -> Cell:
        return self.rows[row_index][self.column_headers.index(column)]


@dataclass(frozen=True)
class Series:
    """One named data series of a plot."""

    name: str
    kind: str  # scatter | curve | histogram
    points: tuple[tuple[float, float], ...] = ()
    bins: tuple[tuple[float, float, int], ...] = ()  # (low, high, count)
    point_labels: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in ("scatter", "curve", "histogram"):
            raise ValueError(f"unknown series kind {self.kind!r}")
        if self.point_labels and len(self.point_labels) != len(self.points):
            raise ValueError("point_labels must match points in length")


@dataclass(frozen=True)
class PlotData:
    """Plot payload: one or more series plus axis labels."""

    title: str
    kind: str  # scatter | histogram
    series: tuple[Series, ...]
    axis_labels: tuple[str, str]


def make_row(cells: Sequence[Cell]) -> tuple[Cell, ...]:
    return tuple(cells)
