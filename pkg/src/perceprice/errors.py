"""Exception taxonomy shared across the package.

Every exception carries a stable machine-readable ``code`` string so that
callers (CLI, HTTP service, library users) can dispatch on failures without
parsing messages.
"""

from __future__ import annotations


class PercepriceError(Exception):
    """Base class for all domain errors raised by this package."""

    code = "error"

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.message = message
        self.field = field


class ZeroIncomeElasticity(PercepriceError):
    """The elasticity ratio is undefined when the income elasticity is zero."""

    code = "zero_income_elasticity"


class NegativeTolerance(PercepriceError):
    """Classification tolerance must be non-negative."""

    code = "negative_tolerance"


class NonPositiveActualPrice(PercepriceError):
    """Actual price appears as a denominator and must be positive."""

    code = "non_positive_actual_price"


class SingularRearrangement(PercepriceError):
    """A solver denominator is zero (ratio of 2 or a price ratio of 2)."""

    code = "singular_rearrangement"


class SchemaViolation(PercepriceError):
    """A corpus file does not match the expected CSV schema."""

    code = "schema_violation"


class DuplicateCommodity(PercepriceError):
    """Corpus commodity labels must be unique."""

    code = "duplicate_commodity"


class EmptyCorpus(PercepriceError):
    """A corpus must contain at least one record."""

    code = "empty_corpus"


class MissingPublishedColumn(PercepriceError):
    """As-published derivations need the published ratio/error columns."""

    code = "missing_published_column"


class InsufficientData(PercepriceError):
    """Too few observations for the requested statistic."""

    code = "insufficient_data"


class DegenerateSample(PercepriceError):
    """Sample has zero variance where spread is required."""

    code = "degenerate_sample"


class RankDeficient(PercepriceError):
    """Design matrix does not have full column rank."""

    code = "rank_deficient"


class ZeroValueUnderAbsLog(PercepriceError):
    """ln|x| is undefined at x = 0."""

    code = "zero_value_under_abs_log"


class EmptyAfterTransform(PercepriceError):
    """A row-dropping transform left too few rows to analyze."""

    code = "empty_after_transform"


class InvalidBinWidth(PercepriceError):
    """Histogram bin width must be positive and finite."""

    code = "invalid_bin_width"


class InvalidDegreesOfFreedom(PercepriceError):
    """Distribution degrees of freedom must be positive integers."""

    code = "invalid_degrees_of_freedom"


class UnsupportedFormat(PercepriceError):
    """The requested render format does not apply to this artifact."""

    code = "unsupported_format"


class BindFailure(PercepriceError):
    """The service could not bind its listen address."""

    code = "bind_failure"
