"""Survey table reproductions with divergence tracking against print.

Each builder recomputes its table from a corpus and, when the corpus is the
embedded one, compares every produced cell against the published cell at the
cell's own printed precision; anything beyond print rounding becomes a
footnote.  Passing strict=True suppresses recomputation entirely and returns
the published cells verbatim for archival comparison.

Default view: recomputed ratios over the sign-reconciled income-elasticity
column, the combination that reproduces the published summary and regression
tables.  The stored columns are never altered; reconciliation is applied
here, in the analysis layer, and always footnoted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .._embedded import EMBEDDED_ROWS
from ..corpus import (
    DEFAULT_DISCREPANCY_TOLERANCE,
    Corpus,
    EtaVariant,
    Mode,
    column,
    derive_rows,
    discrepancy_report,
    eta_columns,
    ratio_column,
    sign_reconciled_eta_i,
)
from ..errors import EmptyAfterTransform
from ..identity import DEFAULT_EPSILON
from ..statkit import (
    LogTransformPolicy,
    RegressionFit,
    describe,
    design_with_intercept,
    fit_log_ratio_regression,
    ols,
    shapiro_wilk,
)
from . import printed
from .model import (
    SIGNIFICANCE_LEGEND,
    Cell,
    ReportTable,
    format_number,
    make_row,
    significance_display,
)

# Printed regression targets used by the transform sweep: slope, r-squared,
# F statistic for the income-elasticity and price-elasticity regressions.
TABLE5_TARGETS = (-0.531, 0.4153, 19.89)
TABLE6_TARGETS = (0.241, 0.0527, 1.557)
SWEEP_SLOPE_TOLERANCE = 0.01
SWEEP_R_SQUARED_TOLERANCE = 0.01
SWEEP_F_TOLERANCE = 0.5

# The transform combination that reproduces the published log regressions:
# natural log of absolute values applied to both the ratio and the regressor.
RESOLVED_LOG_POLICY = LogTransformPolicy.ABS_LOG
RESOLVED_LOG_DEPENDENT = True

_TABLE1_COLUMN_HEADERS = ("η_p", "η_i", "η_p / η_i")
_STAT_LABELS = ("Mean", "Median", "Minimum", "Maximum", "S.E.", "S.D.")


def _is_embedded(corpus: Corpus) -> bool:
    return corpus.origin == "embedded"


def _require_embedded(corpus: Corpus) -> None:
    if not _is_embedded(corpus):
        raise ValueError(
            "archival rendering reproduces the embedded survey tables and does "
            "not accept corpus overrides"
        )


def _p_text(p: float) -> str:
    # Mirrors Cell.p_value display: three decimals, four when the value
    # would otherwise print as 0.000.
    return format_number(p, 4 if abs(p) < 0.0005 else 3)


def _printed_number_cell(text: str) -> Cell:
    return Cell(text=text, value=float(text))


def _divergence_note(place: str, computed_text: str, printed_text: str) -> str:
    return f"{place}: computed {computed_text} vs printed {printed_text} (beyond print rounding)"


def _reconciliation_notes(corpus: Corpus, eta_variant: EtaVariant) -> tuple[str, ...]:
    if eta_variant is not EtaVariant.SIGN_RECONCILED:
        return ()
    reconciled, flipped = sign_reconciled_eta_i(corpus)
    if not flipped:
        return ()
    as_stored = column(corpus, "eta_i")
    changes = {
        record.commodity: (old, new)
        for record, old, new in zip(corpus, as_stored, reconciled)
        if record.commodity in flipped
    }
    parts = ", ".join(
        f"{name} ({changes[name][0]:g} read as {changes[name][1]:g})" for name in flipped
    )
    return (
        "η_i signs restored where the published ratio contradicts the stored "
        f"elasticities: {parts}. The η_i column has minimum "
        f"{format_number(min(as_stored), 2)} as stored and "
        f"{format_number(min(reconciled), 2)} after restoration.",
    )


def table1(
    corpus: Corpus,
    ratio_mode: Mode = Mode.RECOMPUTED,
    eta_variant: EtaVariant = EtaVariant.SIGN_RECONCILED,
    strict: bool = False,
) -> ReportTable:
    """Descriptive statistics of the elasticity and ratio columns."""
    if strict:
        _require_embedded(corpus)
        rows = []
        for label in printed.TABLE1_ROW_LABELS:
            cells = [Cell.label(label)]
            for text in printed.TABLE1_PRINTED[label]:
                if "(" in text:
                    pair = printed.parse_shapiro_cell(text)
                    cells.append(Cell(text=text, value=pair))
                elif label == "n":
                    cells.append(Cell(text=text, value=int(text)))
                else:
                    cells.append(_printed_number_cell(text))
            rows.append(make_row(cells))
        return ReportTable(
            title=printed.TABLE1_TITLE,
            column_headers=printed.TABLE1_HEADERS,
            rows=tuple(rows),
            footnotes=(printed.SOURCE_LINE,),
        )

    eta_p, eta_i = eta_columns(corpus, eta_variant)
    ratio = ratio_column(corpus, ratio_mode, eta_variant)
    data_columns = (eta_p, eta_i, ratio)
    summaries = [describe(values) for values in data_columns]
    normality = [shapiro_wilk(values) for values in data_columns]

    stat_values = {
        "Mean": [s.mean for s in summaries],
        "Median": [s.median for s in summaries],
        "Minimum": [s.minimum for s in summaries],
        "Maximum": [s.maximum for s in summaries],
        "S.E.": [s.standard_error for s in summaries],
        "S.D.": [s.standard_deviation for s in summaries],
    }
    rows = []
    for label in _STAT_LABELS:
        rows.append(
            make_row(
                [Cell.label(label)] + [Cell.number(v, 2) for v in stat_values[label]]
            )
        )
    rows.append(
        make_row(
            [Cell.label("Shapiro-Wilks (p-value)")]
            + [Cell.pair(t.w_statistic, t.p_value, 3, 2) for t in normality]
        )
    )
    rows.append(make_row([Cell.label("n")] + [Cell.integer(s.n) for s in summaries]))

    footnotes = list(_reconciliation_notes(corpus, eta_variant))
    if _is_embedded(corpus):
        for label in _STAT_LABELS:
            for i, header in enumerate(_TABLE1_COLUMN_HEADERS):
                value = stat_values[label][i]
                reference = printed.TABLE1_PRINTED[label][i]
                if printed.diverges(value, reference):
                    footnotes.append(
                        _divergence_note(
                            f"{header} {label}", format_number(value, 2), reference
                        )
                    )
        for i, header in enumerate(_TABLE1_COLUMN_HEADERS):
            reference = printed.TABLE1_PRINTED["Shapiro-Wilks (p-value)"][i]
            printed_w, printed_p = reference.split(" (")
            printed_p = printed_p.rstrip(")")
            test = normality[i]
            if printed.diverges(test.w_statistic, printed_w):
                footnotes.append(
                    _divergence_note(
                        f"{header} Shapiro-Wilks W",
                        format_number(test.w_statistic, 3),
                        printed_w,
                    )
                )
            if printed.diverges(test.p_value, printed_p):
                footnotes.append(
                    _divergence_note(
                        f"{header} Shapiro-Wilks p-value",
                        format_number(test.p_value, 2),
                        printed_p,
                    )
                )
    return ReportTable(
        title=printed.TABLE1_TITLE,
        column_headers=printed.TABLE1_HEADERS,
        rows=tuple(rows),
        footnotes=tuple(footnotes),
    )


def table2(
    corpus: Corpus,
    mode: Mode = Mode.RECOMPUTED,
    epsilon: float = DEFAULT_EPSILON,
    strict: bool = False,
) -> ReportTable:
    """The study rows with derived ratio, error, and classification."""
    if strict:
        _require_embedded(corpus)
        rows = tuple(
            make_row(
                [
                    Cell.label(row[0]),
                    _printed_number_cell(row[1]),
                    _printed_number_cell(row[2]),
                    _printed_number_cell(row[3]),
                    _printed_number_cell(row[4]),
                    Cell.label(row[5]),
                ]
            )
            for row in EMBEDDED_ROWS
        )
        return ReportTable(
            title=printed.TABLE2_TITLE,
            column_headers=printed.TABLE2_HEADERS,
            rows=rows,
            footnotes=(),
        )

    derived = derive_rows(corpus, mode, epsilon)
    rows = tuple(
        make_row(
            [
                Cell.label(row.record.commodity),
                Cell.number(row.record.eta_p, 2),
                Cell.number(row.record.eta_i, 2),
                Cell.number(row.ratio, 2),
                Cell.number(row.error, 2),
                Cell.label(row.record.source),
                Cell.label(row.classification.value),
            ]
        )
        for row in derived
    )
    footnotes = []
    if all(record.has_published for record in corpus):
        for entry in discrepancy_report(corpus):
            footnotes.append(
                f"{entry.commodity}: published ratio "
                f"{format_number(entry.published, 2)} disagrees with recomputed "
                f"{format_number(entry.recomputed, 2)}"
            )
    return ReportTable(
        title=printed.TABLE2_TITLE,
        column_headers=printed.TABLE2_HEADERS + ("Classification",),
        rows=rows,
        footnotes=tuple(footnotes),
    )


def _strict_regression_table(
    title: str, printed_rows: tuple[tuple[str, ...], ...], footnotes: tuple[str, ...]
) -> ReportTable:
    rows = tuple(
        make_row(
            [
                Cell.label(row[0]),
                _printed_number_cell(row[1]),
                _printed_number_cell(row[2]),
                _printed_number_cell(row[3]),
                _printed_number_cell(row[4]),
                Cell.label(row[5]),
            ]
        )
        for row in printed_rows
    )
    return ReportTable(
        title=title,
        column_headers=printed.REGRESSION_HEADERS,
        rows=rows,
        footnotes=footnotes,
    )


def _stats_line(fit: RegressionFit) -> str:
    regressors = len(fit.coefficient_estimates) - 1
    return (
        f"R-squared {format_number(fit.r_squared, 4)}; "
        f"F {fit.f_statistic:.4g} on {regressors} and {fit.df_residual} DF; "
        f"F p-value {_p_text(fit.f_p_value)}"
    )


def _regression_table(
    title: str,
    fit: RegressionFit,
    estimate_decimals: int,
    printed_rows: tuple[tuple[str, ...], ...] | None,
    extra_notes: tuple[str, ...] = (),
) -> ReportTable:
    rows = []
    codes = [significance_display(p) for p in fit.p_values]
    for i, label in enumerate(fit.term_labels):
        rows.append(
            make_row(
                [
                    Cell.label(label),
                    Cell.number(fit.coefficient_estimates[i], estimate_decimals),
                    Cell.number(fit.standard_errors[i], 3),
                    Cell.number(fit.t_values[i], 3),
                    Cell.p_value(fit.p_values[i]),
                    Cell.label(codes[i]),
                ]
            )
        )
    footnotes = [SIGNIFICANCE_LEGEND, _stats_line(fit)]
    footnotes.extend(extra_notes)
    if printed_rows is not None:
        numeric = (
            ("Estimate", fit.coefficient_estimates, estimate_decimals),
            ("S.E.", fit.standard_errors, 3),
            ("t-value", fit.t_values, 3),
        )
        for i, reference_row in enumerate(printed_rows):
            term = fit.term_labels[i]
            for offset, (name, values, decimals) in enumerate(numeric, start=1):
                if printed.diverges(values[i], reference_row[offset]):
                    footnotes.append(
                        _divergence_note(
                            f"{term} {name}",
                            format_number(values[i], decimals),
                            reference_row[offset],
                        )
                    )
            if printed.diverges(fit.p_values[i], reference_row[4]):
                footnotes.append(
                    _divergence_note(
                        f"{term} PR (> t)", _p_text(fit.p_values[i]), reference_row[4]
                    )
                )
            if codes[i] != reference_row[5]:
                footnotes.append(
                    f"{term} significance: computed {codes[i] or '(none)'} at "
                    f"p {_p_text(fit.p_values[i])} vs printed "
                    f"{reference_row[5] or '(none)'}"
                )
    return ReportTable(
        title=title,
        column_headers=printed.REGRESSION_HEADERS,
        rows=tuple(rows),
        footnotes=tuple(footnotes),
    )


def table3_4(
    corpus: Corpus,
    eta_variant: EtaVariant = EtaVariant.SIGN_RECONCILED,
    strict: bool = False,
) -> tuple[ReportTable, ReportTable]:
    """Quadratic and linear regressions of η_p on η_i."""
    if strict:
        _require_embedded(corpus)
        quadratic = _strict_regression_table(
            printed.TABLE3_TITLE,
            printed.TABLE3_PRINTED,
            (printed.TABLE3_PRINTED_LEGEND, printed.TABLE3_PRINTED_SOURCE),
        )
        linear = _strict_regression_table(
            printed.TABLE4_TITLE, printed.TABLE4_PRINTED, (printed.TABLE4_PRINTED_LEGEND,)
        )
        return quadratic, linear

    eta_p, eta_i = eta_columns(corpus, eta_variant)
    quadratic_fit = ols(
        design_with_intercept(eta_i, [v * v for v in eta_i]),
        eta_p,
        term_labels=("Intercept", "η_i", "η_i^2"),
    )
    linear_fit = ols(
        design_with_intercept(eta_i), eta_p, term_labels=("Intercept", "η_i")
    )
    notes = _reconciliation_notes(corpus, eta_variant)
    embedded = _is_embedded(corpus)
    quadratic = _regression_table(
        printed.TABLE3_TITLE,
        quadratic_fit,
        4,
        printed.TABLE3_PRINTED if embedded else None,
        notes,
    )
    linear = _regression_table(
        printed.TABLE4_TITLE,
        linear_fit,
        3,
        printed.TABLE4_PRINTED if embedded else None,
        notes,
    )
    return quadratic, linear


_POLICY_DESCRIPTIONS = {
    LogTransformPolicy.ABS_LOG: "natural log of absolute values",
    LogTransformPolicy.SIGNED_LOG1P: "sign-preserving log1p of magnitudes",
    LogTransformPolicy.DROP_NON_POSITIVE: "natural log after dropping non-positive rows",
}


def _regressor_label(name: str, policy: LogTransformPolicy) -> str:
    if policy is LogTransformPolicy.ABS_LOG:
        return f"log|{name}|"
    if policy is LogTransformPolicy.SIGNED_LOG1P:
        return f"slog1p({name})"
    return f"log({name})"


def table5_6(
    corpus: Corpus,
    policy: LogTransformPolicy = RESOLVED_LOG_POLICY,
    log_dependent: bool = RESOLVED_LOG_DEPENDENT,
    ratio_mode: Mode = Mode.RECOMPUTED,
    eta_variant: EtaVariant = EtaVariant.SIGN_RECONCILED,
    strict: bool = False,
) -> tuple[ReportTable, ReportTable]:
    """Log regressions of the elasticity ratio on each elasticity."""
    if strict:
        _require_embedded(corpus)
        income = _strict_regression_table(
            printed.TABLE5_TITLE, printed.TABLE5_PRINTED, (printed.TABLE5_PRINTED_LEGEND,)
        )
        price = _strict_regression_table(
            printed.TABLE6_TITLE, printed.TABLE6_PRINTED, (printed.TABLE6_PRINTED_LEGEND,)
        )
        return income, price

    eta_p, eta_i = eta_columns(corpus, eta_variant)
    ratio = ratio_column(corpus, ratio_mode, eta_variant)
    embedded = _is_embedded(corpus)
    tables = []
    for title, regressor, name, reference in (
        (printed.TABLE5_TITLE, eta_i, "η_i", printed.TABLE5_PRINTED),
        (printed.TABLE6_TITLE, eta_p, "η_p", printed.TABLE6_PRINTED),
    ):
        fit = fit_log_ratio_regression(
            ratio,
            regressor,
            policy,
            transform_dependent=log_dependent,
            term_labels=("Intercept", _regressor_label(name, policy)),
        )
        transform_note = (
            f"Transform: {_POLICY_DESCRIPTIONS[policy]}, applied to "
            f"{'both sides' if log_dependent else 'the regressor only'}; "
            f"{fit.n} of {len(ratio)} rows used"
        )
        tables.append(
            _regression_table(
                title,
                fit,
                3,
                reference if embedded else None,
                (transform_note,),
            )
        )
    return tables[0], tables[1]


def discrepancy_table(
    corpus: Corpus, tolerance: float = DEFAULT_DISCREPANCY_TOLERANCE
) -> ReportTable:
    """Published ratios that disagree with recomputation from the record."""
    entries = discrepancy_report(corpus, tolerance)
    rows = tuple(
        make_row(
            [
                Cell.label(entry.commodity),
                Cell.number(entry.published, 2),
                Cell.number(entry.recomputed, 2),
                Cell.number(entry.absolute_difference, 2),
            ]
        )
        for entry in entries
    )
    return ReportTable(
        title="Published elasticity ratios that disagree with recomputation.",
        column_headers=(
            "Commodity/Service",
            "Published ratio",
            "Recomputed ratio",
            "Absolute difference",
        ),
        rows=rows,
        footnotes=(f"Tolerance: {tolerance:g}",),
    )


@dataclass(frozen=True)
class SweepCandidate:
    """One transform combination tried against the printed log regressions."""

    table: str
    policy: LogTransformPolicy
    log_dependent: bool
    ratio_mode: Mode
    fit: RegressionFit
    rows_used: int
    slope_deviation: float
    r_squared_deviation: float
    f_deviation: float
    matches_printed: bool


def sweep_log_policies(
    corpus: Corpus, eta_variant: EtaVariant = EtaVariant.SIGN_RECONCILED
) -> tuple[SweepCandidate, ...]:
    """Fit every (policy, dependent-transform, ratio-source) combination.

    Each candidate is compared against the printed slope, r-squared, and F
    targets; matches_printed marks combinations that land within the sweep
    tolerances.  Candidates whose transform leaves too few rows are skipped.
    """
    eta_p, eta_i = eta_columns(corpus, eta_variant)
    modes = [Mode.RECOMPUTED]
    if all(record.has_published for record in corpus):
        modes.insert(0, Mode.AS_PUBLISHED)
    candidates = []
    for table, regressor, targets, check_f in (
        ("table5", eta_i, TABLE5_TARGETS, True),
        ("table6", eta_p, TABLE6_TARGETS, False),
    ):
        for ratio_mode in modes:
            ratio = ratio_column(corpus, ratio_mode, eta_variant)
            for policy in LogTransformPolicy:
                for log_dependent in (True, False):
                    try:
                        fit = fit_log_ratio_regression(
                            ratio, regressor, policy, transform_dependent=log_dependent
                        )
                    except EmptyAfterTransform:
                        continue
                    slope_deviation = abs(fit.coefficient_estimates[1] - targets[0])
                    r_squared_deviation = abs(fit.r_squared - targets[1])
                    f_deviation = abs(fit.f_statistic - targets[2])
                    matches = (
                        slope_deviation <= SWEEP_SLOPE_TOLERANCE
                        and r_squared_deviation <= SWEEP_R_SQUARED_TOLERANCE
                        and (not check_f or f_deviation <= SWEEP_F_TOLERANCE)
                    )
                    candidates.append(
                        SweepCandidate(
                            table=table,
                            policy=policy,
                            log_dependent=log_dependent,
                            ratio_mode=ratio_mode,
                            fit=fit,
                            rows_used=fit.n,
                            slope_deviation=slope_deviation,
                            r_squared_deviation=r_squared_deviation,
                            f_deviation=f_deviation,
                            matches_printed=matches,
                        )
                    )
    return tuple(candidates)
