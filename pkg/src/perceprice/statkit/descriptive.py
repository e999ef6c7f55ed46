"""Descriptive summaries: mean, median, extrema, spread."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from ..errors import InsufficientData


@dataclass(frozen=True)
class SampleSummary:
    """Summary statistics for one numeric sample."""

    mean: float
    median: float
    minimum: float
    maximum: float
    standard_error: float
    standard_deviation: float
    n: int


def describe(values: Sequence[float]) -> SampleSummary:
    """Summarize a sample; sample (n-1) SD and SE = SD / sqrt(n)."""
    n = len(values)
    if n < 2:
        raise InsufficientData(f"need at least 2 values, got {n}")
    if not all(math.isfinite(v) for v in values):
        raise ValueError("all values must be finite")
    ordered = sorted(values)
    # fsum is exact, but the closing division can round one ulp past the
    # hull on near-constant samples; the true mean never leaves [min, max]
    mean = min(max(math.fsum(ordered) / n, ordered[0]), ordered[-1])
    half = n // 2
    if n % 2 == 1:
        median = ordered[half]
    else:
        low, high = ordered[half - 1], ordered[half]
        median = (low + high) / 2.0
        if math.isinf(median):
            # the sum overflowed; halving first cannot, and anywhere the
            # sum is finite the plain midpoint already stays in [low, high]
            median = low / 2.0 + high / 2.0
    variance = math.fsum((v - mean) ** 2 for v in ordered) / (n - 1)
    sd = math.sqrt(variance)
    return SampleSummary(
        mean=mean,
        median=median,
        minimum=ordered[0],
        maximum=ordered[-1],
        standard_error=sd / math.sqrt(n),
        standard_deviation=sd,
        n=n,
    )
