"""Log-transform policies for variables that may be negative or zero.

The source tables regress log-transformed variables without saying how
negative inputs were handled, so the policy is an explicit, configurable
choice rather than a constant.
"""

from __future__ import annotations

import math
from enum import Enum
from typing import Sequence

from ..errors import EmptyAfterTransform, ZeroValueUnderAbsLog
from .ols import RegressionFit, design_with_intercept, ols

MIN_ROWS_AFTER_DROP = 3


class LogTransformPolicy(Enum):
    """How ln is extended to non-positive inputs."""

    ABS_LOG = "abs_log"  # x -> ln|x|, undefined at 0
    SIGNED_LOG1P = "signed_log1p"  # x -> sign(x) * ln(1 + |x|), total
    DROP_NON_POSITIVE = "drop_non_positive"  # x -> ln x, rows with x <= 0 removed


def _abs_log(value: float) -> float:
    if value == 0.0:
        raise ZeroValueUnderAbsLog("ln|x| is undefined at x = 0")
    return math.log(abs(value))


def _signed_log1p(value: float) -> float:
    return math.copysign(math.log1p(abs(value)), value)


def log_transform(
    values: Sequence[float], policy: LogTransformPolicy
) -> tuple[float, ...]:
    """Transform one vector under the policy (DropNonPositive filters it)."""
    if policy is LogTransformPolicy.ABS_LOG:
        return tuple(_abs_log(v) for v in values)
    if policy is LogTransformPolicy.SIGNED_LOG1P:
        return tuple(_signed_log1p(v) for v in values)
    return tuple(math.log(v) for v in values if v > 0)


def paired_log_transform(
    dependent: Sequence[float],
    regressor: Sequence[float],
    policy: LogTransformPolicy,
    transform_dependent: bool = True,
) -> tuple[tuple[float, ...], tuple[float, ...], tuple[int, ...]]:
    """Transform a (dependent, regressor) pair, dropping rows pairwise.

    Returns (dependent', regressor', kept row indices).  Only
    DropNonPositive removes rows; the same rows disappear from both vectors.
    """
    if len(dependent) != len(regressor):
        raise ValueError("dependent and regressor must have equal length")
    if policy is LogTransformPolicy.DROP_NON_POSITIVE:
        kept = tuple(
            i
            for i in range(len(regressor))
            if regressor[i] > 0 and (not transform_dependent or dependent[i] > 0)
        )
        if len(kept) < MIN_ROWS_AFTER_DROP:
            raise EmptyAfterTransform(
                f"only {len(kept)} rows remain after dropping non-positive values"
            )
        new_x = tuple(math.log(regressor[i]) for i in kept)
        new_y = tuple(
            math.log(dependent[i]) if transform_dependent else dependent[i] for i in kept
        )
        return new_y, new_x, kept
    kept = tuple(range(len(regressor)))
    new_x = log_transform(regressor, policy)
    new_y = log_transform(dependent, policy) if transform_dependent else tuple(dependent)
    return new_y, new_x, kept


def fit_log_ratio_regression(
    ratio: Sequence[float],
    regressor: Sequence[float],
    policy: LogTransformPolicy,
    transform_dependent: bool = True,
    term_labels: Sequence[str] | None = None,
) -> RegressionFit:
    """Regress the (optionally transformed) ratio on one transformed regressor."""
    y, x, _ = paired_log_transform(ratio, regressor, policy, transform_dependent)
    return ols(design_with_intercept(x), y, term_labels=term_labels)
