"""Ordinary least squares via orthogonal decomposition.

The design matrix is factored with numpy's QR; coefficients come from the
triangular solve and the coefficient covariance from the inverse of R, so
the normal equations are never formed explicitly.  Inference (standard
errors, two-sided t p-values, the overall F test against the intercept-only
model) is computed from scratch on top of the t and F CDFs in ``special``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..errors import InsufficientData, RankDeficient
from .special import f_p_value, two_sided_t_p_value

CONDITION_WARNING_THRESHOLD = 1e8


class IllConditionedDesign(UserWarning):
    """Design matrix condition number exceeds the stability threshold."""


@dataclass(frozen=True)
class RegressionFit:
    """OLS estimates with standard errors and test statistics."""

    coefficient_estimates: tuple[float, ...]
    standard_errors: tuple[float, ...]
    t_values: tuple[float, ...]
    p_values: tuple[float, ...]
    r_squared: float
    f_statistic: float
    f_p_value: float
    df_residual: int
    n: int
    term_labels: tuple[str, ...]

    def predict(self, row: Sequence[float]) -> float:
        """Evaluate the fitted linear predictor on one design row."""
        if len(row) != len(self.coefficient_estimates):
            raise ValueError("row length must match the coefficient count")
        return math.fsum(c * x for c, x in zip(self.coefficient_estimates, row))


def design_with_intercept(*columns: Sequence[float]) -> np.ndarray:
    """Stack a leading column of ones with the given regressor columns."""
    if not columns:
        raise ValueError("at least one regressor column is required")
    length = len(columns[0])
    for col in columns:
        if len(col) != length:
            raise ValueError("all regressor columns must have equal length")
    return np.column_stack([np.ones(length)] + [np.asarray(c, dtype=float) for c in columns])


def ols(
    design: Sequence[Sequence[float]] | np.ndarray,
    response: Sequence[float],
    term_labels: Sequence[str] | None = None,
) -> RegressionFit:
    """Fit response on the design matrix (intercept column included)."""
    X = np.asarray(design, dtype=float)
    y = np.asarray(response, dtype=float)
    if X.ndim != 2:
        raise ValueError("design must be two-dimensional")
    n, k = X.shape
    if y.shape != (n,):
        raise ValueError("response length must match design rows")
    if not (np.isfinite(X).all() and np.isfinite(y).all()):
        raise ValueError("design and response must be finite")
    if n < k + 1:
        raise InsufficientData(
            f"need at least {k + 1} rows for {k} coefficients, got {n}"
        )
    if term_labels is None:
        term_labels = ("intercept",) + tuple(f"x{i}" for i in range(1, k))
    elif len(term_labels) != k:
        raise ValueError("term_labels length must match the coefficient count")

    q, r = np.linalg.qr(X)
    diag = np.abs(np.diag(r))
    tol = max(n, k) * np.finfo(float).eps * (diag.max() if diag.size else 0.0)
    if diag.min() <= tol:
        raise RankDeficient("design matrix is rank deficient")
    condition = np.linalg.cond(X)
    if condition > CONDITION_WARNING_THRESHOLD:
        warnings.warn(
            f"design condition number {condition:.3e} exceeds "
            f"{CONDITION_WARNING_THRESHOLD:.0e}; estimates may be unstable",
            IllConditionedDesign,
            stacklevel=2,
        )

    beta = np.linalg.solve(r, q.T @ y)
    residuals = y - X @ beta
    df_residual = n - k
    sse = float(residuals @ residuals)
    sigma_squared = sse / df_residual
    r_inv = np.linalg.solve(r, np.eye(k))
    unscaled = (r_inv * r_inv).sum(axis=1)
    standard_errors = np.sqrt(sigma_squared * unscaled)

    t_values = []
    p_values = []
    for estimate, se in zip(beta, standard_errors):
        if se == 0.0:
            t = math.inf if estimate > 0 else -math.inf if estimate < 0 else 0.0
            p = 0.0 if estimate != 0 else 1.0
        else:
            t = float(estimate / se)
            p = two_sided_t_p_value(t, df_residual)
        t_values.append(t)
        p_values.append(p)

    sst = float(((y - y.mean()) ** 2).sum())
    if sst == 0.0:
        r_squared = 0.0
        f_statistic = 0.0
        f_prob = 1.0
    else:
        r_squared = 1.0 - sse / sst
        if k >= 2:
            ssr = sst - sse
            f_statistic = (ssr / (k - 1)) / sigma_squared if sigma_squared > 0 else math.inf
            f_prob = 0.0 if math.isinf(f_statistic) else f_p_value(f_statistic, k - 1, df_residual)
        else:
            f_statistic = 0.0
            f_prob = 1.0

    return RegressionFit(
        coefficient_estimates=tuple(float(b) for b in beta),
        standard_errors=tuple(float(s) for s in standard_errors),
        t_values=tuple(t_values),
        p_values=tuple(p_values),
        r_squared=float(r_squared),
        f_statistic=float(f_statistic),
        f_p_value=float(f_prob),
        df_residual=df_residual,
        n=n,
        term_labels=tuple(term_labels),
    )
