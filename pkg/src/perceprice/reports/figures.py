"""Figure payloads: the ratio histogram and the elasticity scatter plot."""

from __future__ import annotations

from ..corpus import Corpus, EtaVariant, Mode, eta_columns, ratio_column
from ..statkit import design_with_intercept, histogram, ols
from . import printed
from .model import PlotData, Series
from .tables import _require_embedded

CURVE_SAMPLES = 100


def figure1(
    corpus: Corpus,
    mode: Mode = Mode.RECOMPUTED,
    bin_width: float = 1.0,
    anchor: float = 0.0,
    eta_variant: EtaVariant = EtaVariant.SIGN_RECONCILED,
    strict: bool = False,
) -> PlotData:
    """Histogram of the elasticity ratio column."""
    if strict:
        _require_embedded(corpus)
        mode = Mode.AS_PUBLISHED
    ratio = ratio_column(corpus, mode, eta_variant)
    binned = histogram(ratio, bin_width, anchor)
    bins = tuple(
        (binned.bin_edges[i], binned.bin_edges[i + 1], binned.counts[i])
        for i in range(len(binned.counts))
    )
    series = Series(name="η_p / η_i", kind="histogram", bins=bins)
    return PlotData(
        title=printed.FIGURE1_TITLE,
        kind="histogram",
        series=(series,),
        axis_labels=("η_p / η_i", "Frequency"),
    )


def _quadratic_coefficients(
    eta_p: tuple[float, ...], eta_i: tuple[float, ...]
) -> tuple[float, float, float]:
    fit = ols(
        design_with_intercept(eta_i, [v * v for v in eta_i]),
        eta_p,
        term_labels=("Intercept", "η_i", "η_i^2"),
    )
    a, b, c = fit.coefficient_estimates
    return a, b, c


def figure2(
    corpus: Corpus,
    with_quadratic_curve: bool = True,
    eta_variant: EtaVariant = EtaVariant.SIGN_RECONCILED,
    strict: bool = False,
) -> PlotData:
    """Scatter of (η_i, η_p) study points, optionally with the fitted curve."""
    if strict:
        _require_embedded(corpus)
        eta_variant = EtaVariant.AS_PRINTED
    eta_p, eta_i = eta_columns(corpus, eta_variant)
    labels = tuple(record.commodity for record in corpus)
    scatter = Series(
        name="studies",
        kind="scatter",
        points=tuple(zip(eta_i, eta_p)),
        point_labels=labels,
    )
    series = [scatter]
    if with_quadratic_curve:
        if strict:
            coefficients = tuple(float(row[1]) for row in printed.TABLE3_PRINTED)
        else:
            coefficients = _quadratic_coefficients(eta_p, eta_i)
        a, b, c = coefficients
        low, high = min(eta_i), max(eta_i)
        step = (high - low) / (CURVE_SAMPLES - 1)
        xs = [low + j * step for j in range(CURVE_SAMPLES)]
        series.append(
            Series(
                name="quadratic fit",
                kind="curve",
                points=tuple((x, a + b * x + c * x * x) for x in xs),
            )
        )
    return PlotData(
        title=printed.FIGURE2_TITLE,
        kind="scatter",
        series=tuple(series),
        axis_labels=("η_i", "η_p"),
    )
