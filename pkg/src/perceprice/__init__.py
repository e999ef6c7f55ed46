"""Price-perception toolkit built on the elasticity-ratio identity.

The identity links the gap between actual and reference prices to the ratio
of price and income elasticity of demand: (Pa - Pr) / Pa = ηp/ηi - 1.  This
package solves the identity in every direction, classifies perception
errors, carries a 30-study elasticity corpus, and reproduces the survey's
summary tables, regressions, and figures from it.
"""

from .corpus import (
    CSV_HEADER,
    Corpus,
    DerivedRow,
    DiscrepancyEntry,
    EtaVariant,
    Mode,
    StudyRecord,
    corpus_checksum,
    derive_rows,
    discrepancy_report,
    embedded_corpus,
    export_csv,
    load_csv,
    parse_csv,
)
from .errors import (
    BindFailure,
    DegenerateSample,
    DuplicateCommodity,
    EmptyAfterTransform,
    EmptyCorpus,
    InsufficientData,
    InvalidBinWidth,
    InvalidDegreesOfFreedom,
    MissingPublishedColumn,
    NegativeTolerance,
    NonPositiveActualPrice,
    PercepriceError,
    RankDeficient,
    SchemaViolation,
    SingularRearrangement,
    UnsupportedFormat,
    ZeroIncomeElasticity,
    ZeroValueUnderAbsLog,
)
from .identity import (
    DEFAULT_EPSILON,
    Classification,
    ElasticityPair,
    PerceptionAssessment,
    PricePair,
    SolveResult,
    assess,
    classify,
    elasticity_ratio,
    identity_residual,
    perception_error,
    relative_price_gap,
    solve_actual_price,
    solve_income_elasticity,
    solve_price_elasticity,
    solve_reference_price,
)

__version__ = "0.1.0"
