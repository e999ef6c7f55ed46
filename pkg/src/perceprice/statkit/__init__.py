"""From-scratch statistics: descriptives, normality, OLS, transforms, bins."""

from .descriptive import SampleSummary, describe
from .histogram import Histogram, histogram
from .ols import (
    CONDITION_WARNING_THRESHOLD,
    IllConditionedDesign,
    RegressionFit,
    design_with_intercept,
    ols,
)
from .shapiro import NormalityTestResult, shapiro_wilk
from .special import (
    f_cdf,
    f_p_value,
    normal_cdf,
    normal_quantile,
    regularized_incomplete_beta,
    student_t_cdf,
    two_sided_t_p_value,
)
from .transforms import (
    LogTransformPolicy,
    fit_log_ratio_regression,
    log_transform,
    paired_log_transform,
)

__all__ = [
    "CONDITION_WARNING_THRESHOLD",
    "Histogram",
    "IllConditionedDesign",
    "LogTransformPolicy",
    "NormalityTestResult",
    "RegressionFit",
    "SampleSummary",
    "describe",
    "design_with_intercept",
    "f_cdf",
    "f_p_value",
    "fit_log_ratio_regression",
    "histogram",
    "log_transform",
    "normal_cdf",
    "normal_quantile",
    "ols",
    "paired_log_transform",
    "regularized_incomplete_beta",
    "shapiro_wilk",
    "student_t_cdf",
    "two_sided_t_p_value",
]
