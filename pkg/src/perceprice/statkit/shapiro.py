"""Shapiro-Wilk normality test, Royston's 1995 formulation.

Expected normal order statistics are approximated by Blom scores
m_i = Phi^-1((i - 3/8) / (n + 1/4)); the two largest weights get polynomial
corrections in 1/sqrt(n); the null distribution of a transform of W is
approximately normal with n-dependent location and scale, which yields the
p-value.  Valid for 3 <= n <= 5000.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from ..errors import DegenerateSample, InsufficientData
from .special import normal_cdf, normal_quantile

# Corrections for the largest and second-largest weights, polynomials in
# u = 1/sqrt(n) (constant terms first).
_C1 = (0.0, 0.221157, -0.147981, -2.071190, 4.434685, -2.706056)
_C2 = (0.0, 0.042981, -0.293762, -1.752461, 5.682633, -3.582633)


@dataclass(frozen=True)
class NormalityTestResult:
    """W statistic and p-value of a normality test."""

    w_statistic: float
    p_value: float
    n: int


def _polynomial(coefficients: Sequence[float], x: float) -> float:
    value = 0.0
    for coefficient in reversed(coefficients):
        value = value * x + coefficient
    return value


def _weights(n: int) -> list[float]:
    m = [normal_quantile((i - 0.375) / (n + 0.25)) for i in range(1, n + 1)]
    m_sq = math.fsum(v * v for v in m)
    root_m_sq = math.sqrt(m_sq)
    u = 1.0 / math.sqrt(n)
    if n <= 5:
        if n == 3:
            # Exact two-point weight vector.
            root_half = math.sqrt(0.5)
            return [-root_half, 0.0, root_half]
        a_n = _polynomial(_C1, u) + m[n - 1] / root_m_sq
        phi = (m_sq - 2.0 * m[n - 1] ** 2) / (1.0 - 2.0 * a_n**2)
        scale = math.sqrt(phi)
        weights = [v / scale for v in m]
        weights[n - 1] = a_n
        weights[0] = -a_n
        return weights
    a_n = _polynomial(_C1, u) + m[n - 1] / root_m_sq
    a_n1 = _polynomial(_C2, u) + m[n - 2] / root_m_sq
    phi = (m_sq - 2.0 * m[n - 1] ** 2 - 2.0 * m[n - 2] ** 2) / (
        1.0 - 2.0 * a_n**2 - 2.0 * a_n1**2
    )
    scale = math.sqrt(phi)
    weights = [v / scale for v in m]
    weights[n - 1] = a_n
    weights[n - 2] = a_n1
    weights[0] = -a_n
    weights[1] = -a_n1
    return weights


def _p_value(w: float, n: int) -> float:
    if n == 3:
        p = 6.0 / math.pi * (math.asin(math.sqrt(w)) - math.asin(math.sqrt(0.75)))
        return min(max(p, 0.0), 1.0)
    if n <= 11:
        gamma = -2.273 + 0.459 * n
        transformed = -math.log(gamma - math.log1p(-w))
        mu = 0.5440 - 0.39978 * n + 0.025054 * n**2 - 0.0006714 * n**3
        sigma = math.exp(1.3822 - 0.77857 * n + 0.062767 * n**2 - 0.0020322 * n**3)
    else:
        log_n = math.log(n)
        transformed = math.log1p(-w)
        mu = -1.5861 - 0.31082 * log_n - 0.083751 * log_n**2 + 0.0038915 * log_n**3
        sigma = math.exp(-0.4803 - 0.082676 * log_n + 0.0030302 * log_n**2)
    z = (transformed - mu) / sigma
    return 1.0 - normal_cdf(z)


def shapiro_wilk(values: Sequence[float]) -> NormalityTestResult:
    """Test a sample against normality; returns W and its p-value."""
    n = len(values)
    if n < 3:
        raise InsufficientData(f"need at least 3 values, got {n}")
    if n > 5000:
        raise InsufficientData(f"approximation valid only up to n=5000, got {n}")
    if not all(math.isfinite(v) for v in values):
        raise ValueError("all values must be finite")
    ordered = sorted(values)
    mean = math.fsum(ordered) / n
    total_ss = math.fsum((v - mean) ** 2 for v in ordered)
    if total_ss == 0.0:
        raise DegenerateSample("sample has zero variance")
    weights = _weights(n)
    numerator = math.fsum(w * v for w, v in zip(weights, ordered)) ** 2
    w_statistic = min(numerator / total_ss, 1.0)
    return NormalityTestResult(
        w_statistic=w_statistic, p_value=_p_value(w_statistic, n), n=n
    )
