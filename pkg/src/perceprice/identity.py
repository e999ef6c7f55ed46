"""The price-perception identity and its algebraic rearrangements.

The identity links a consumer's relative price gap to the ratio of price and
income elasticities of demand:

    (Pa - Pr) / Pa = eta_p / eta_i - 1

where Pa is the actual price, Pr the consumer's reference price, eta_p the
price elasticity and eta_i the income elasticity.  A ratio of exactly 1 means
zero perception error; ratios below 1 mean the consumer overestimates the
actual price and ratios above 1 mean underestimation.

All arithmetic is plain 64-bit floating point; no rounding happens here.
Display rounding belongs to the report layer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import (
    NegativeTolerance,
    NonPositiveActualPrice,
    SingularRearrangement,
    ZeroIncomeElasticity,
)

DEFAULT_EPSILON = 0.05


class Classification(Enum):
    """Trichotomy of the perception error against a tolerance band."""

    OVERESTIMATE = "Overestimate"
    ALIGNED = "Aligned"
    UNDERESTIMATE = "Underestimate"

    @property
    def api_name(self) -> str:
        return self.value.lower()


@dataclass(frozen=True)
class ElasticityPair:
    """Signed price and income elasticities of demand for one good."""

    eta_p: float
    eta_i: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.eta_p) and math.isfinite(self.eta_i)):
            raise ValueError("elasticities must be finite")


@dataclass(frozen=True)
class PricePair:
    """Actual market price and consumer reference price, same currency."""

    pa: float
    pr: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.pa) and math.isfinite(self.pr)):
            raise ValueError("prices must be finite")
        if self.pa <= 0:
            raise NonPositiveActualPrice(
                f"actual price must be positive, got {self.pa}", field="pa"
            )
        if self.pr <= 0:
            raise ValueError(f"reference price must be positive, got {self.pr}")


@dataclass(frozen=True)
class PerceptionAssessment:
    """Ratio, error and classification for one elasticity pair."""

    ratio: float
    error: float
    classification: Classification
    epsilon: float
    observed_gap: float | None = None


@dataclass(frozen=True)
class SolveResult:
    """Solver output plus any warnings about non-physical values."""

    value: float
    warnings: tuple[str, ...] = ()


def elasticity_ratio(pair: ElasticityPair) -> float:
    """Return eta_p / eta_i, the right-hand ratio of the identity."""
    if pair.eta_i == 0:
        raise ZeroIncomeElasticity(
            "elasticity ratio undefined for zero income elasticity", field="eta_i"
        )
    return pair.eta_p / pair.eta_i


def perception_error(pair: ElasticityPair) -> float:
    """Return the perception error, elasticity_ratio(pair) - 1."""
    return elasticity_ratio(pair) - 1.0


def classify(error: float, epsilon: float = DEFAULT_EPSILON) -> Classification:
    """Classify a perception error against an inclusive tolerance band."""
    if epsilon < 0 or not math.isfinite(epsilon):
        raise NegativeTolerance(
            f"tolerance must be finite and >= 0, got {epsilon}", field="epsilon"
        )
    if not math.isfinite(error):
        raise ValueError("error must be finite")
    if abs(error) <= epsilon:
        return Classification.ALIGNED
    if error < 0:
        return Classification.OVERESTIMATE
    return Classification.UNDERESTIMATE


def assess(
    pair: ElasticityPair,
    epsilon: float = DEFAULT_EPSILON,
    prices: PricePair | None = None,
) -> PerceptionAssessment:
    """Bundle ratio, error and classification for one elasticity pair."""
    ratio = elasticity_ratio(pair)
    error = ratio - 1.0
    gap = relative_price_gap(prices) if prices is not None else None
    return PerceptionAssessment(
        ratio=ratio,
        error=error,
        classification=classify(error, epsilon),
        epsilon=epsilon,
        observed_gap=gap,
    )


def relative_price_gap(prices: PricePair) -> float:
    """Return (pa - pr) / pa, positive exactly when pa > pr."""
    return (prices.pa - prices.pr) / prices.pa


def _non_physical(name: str, value: float) -> tuple[str, ...]:
    if value <= 0:
        return (f"non_physical_solution: solved {name} {value!r} is not positive",)
    return ()


def solve_actual_price(pr: float, pair: ElasticityPair) -> SolveResult:
    """Solve the identity for the actual price: pa = pr / (2 - ratio)."""
    if not math.isfinite(pr) or pr <= 0:
        raise ValueError(f"reference price must be positive, got {pr}")
    ratio = elasticity_ratio(pair)
    denom = 2.0 - ratio
    if denom == 0:
        raise SingularRearrangement(
            "actual price is unconstrained when the elasticity ratio equals 2"
        )
    pa = pr / denom
    return SolveResult(pa, _non_physical("actual price", pa))


def solve_reference_price(pa: float, pair: ElasticityPair) -> SolveResult:
    """Solve the identity for the reference price: pr = pa * (2 - ratio)."""
    if not math.isfinite(pa):
        raise ValueError("actual price must be finite")
    if pa <= 0:
        raise NonPositiveActualPrice(
            f"actual price must be positive, got {pa}", field="pa"
        )
    pr = pa * (2.0 - elasticity_ratio(pair))
    return SolveResult(pr, _non_physical("reference price", pr))


def solve_price_elasticity(prices: PricePair, eta_i: float) -> SolveResult:
    """Solve the identity for eta_p: eta_p = eta_i * (2 - pr/pa)."""
    if not math.isfinite(eta_i):
        raise ValueError("income elasticity must be finite")
    if eta_i == 0:
        raise ZeroIncomeElasticity(
            "price elasticity is unconstrained when eta_i is 0", field="eta_i"
        )
    return SolveResult(eta_i * (2.0 - prices.pr / prices.pa))


def solve_income_elasticity(prices: PricePair, eta_p: float) -> SolveResult:
    """Solve the identity for eta_i: eta_i = eta_p / (2 - pr/pa)."""
    if not math.isfinite(eta_p):
        raise ValueError("price elasticity must be finite")
    denom = 2.0 - prices.pr / prices.pa
    if denom == 0:
        raise SingularRearrangement(
            "income elasticity is unconstrained when pr/pa equals 2"
        )
    return SolveResult(eta_p / denom)


def identity_residual(prices: PricePair, pair: ElasticityPair) -> float:
    """Return (pa-pr)/pa - (ratio - 1); zero for a consistent quadruple."""
    return relative_price_gap(prices) - perception_error(pair)
