"""Replication reports: survey tables, figures, and byte renderers."""

from .figures import figure1, figure2
from .model import (
    SIGNIFICANCE_LEGEND,
    Cell,
    PlotData,
    ReportTable,
    Series,
    format_number,
    significance_display,
    significance_tier,
)
from .printed import KNOWN_DIVERGENCES
from .render import OutputFormat, plot_payload, render, table_payload
from .tables import (
    RESOLVED_LOG_DEPENDENT,
    RESOLVED_LOG_POLICY,
    TABLE5_TARGETS,
    TABLE6_TARGETS,
    SweepCandidate,
    discrepancy_table,
    sweep_log_policies,
    table1,
    table2,
    table3_4,
    table5_6,
)

__all__ = [
    "Cell",
    "KNOWN_DIVERGENCES",
    "OutputFormat",
    "PlotData",
    "RESOLVED_LOG_DEPENDENT",
    "RESOLVED_LOG_POLICY",
    "ReportTable",
    "SIGNIFICANCE_LEGEND",
    "Series",
    "SweepCandidate",
    "TABLE5_TARGETS",
    "TABLE6_TARGETS",
    "discrepancy_table",
    "figure1",
    "figure2",
    "format_number",
    "plot_payload",
    "render",
    "significance_display",
    "significance_tier",
    "sweep_log_policies",
    "table1",
    "table2",
    "table3_4",
    "table5_6",
    "table_payload",
]
