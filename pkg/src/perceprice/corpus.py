"""Study corpus: records, CSV ingestion/export, derived rows, reconciliation.

A corpus is an immutable list of study records.  Each record stores the raw
price and income elasticities plus, optionally, the derived ratio and error
columns exactly as published by the source survey.  Derivations can run in
two modes: Recomputed (honest arithmetic from the elasticities) and
AsPublished (the printed derived columns taken at face value).
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from pathlib import Path

from ._embedded import EMBEDDED_ROWS
from .errors import (
    DuplicateCommodity,
    EmptyCorpus,
    MissingPublishedColumn,
    SchemaViolation,
    ZeroIncomeElasticity,
)
from .identity import DEFAULT_EPSILON, Classification, classify

CSV_HEADER = ("commodity", "eta_p", "eta_i", "source", "published_ratio", "published_error")

# Published derived columns are printed at 2 decimals, so half a unit in the
# last place is the widest gap mere rounding can explain.
PRINT_ROUNDING = 0.01
DEFAULT_DISCREPANCY_TOLERANCE = 0.02


class Mode(Enum):
    """Source of derived ratio/error values."""

    RECOMPUTED = "recomputed"
    AS_PUBLISHED = "as_published"


class EtaVariant(Enum):
    """Which income-elasticity column the analysis layer consumes."""

    AS_PRINTED = "as_printed"
    SIGN_RECONCILED = "sign_reconciled"


@dataclass(frozen=True)
class StudyRecord:
    """One published elasticity study, stored as printed."""

    commodity: str
    eta_p: float
    eta_i: float
    source: str
    published_ratio: float | None = None
    published_error: float | None = None

    def __post_init__(self) -> None:
        if not self.commodity:
            raise SchemaViolation("commodity label must be non-empty", field="commodity")
        if not (math.isfinite(self.eta_p) and math.isfinite(self.eta_i)):
            raise SchemaViolation(
                f"elasticities must be finite for {self.commodity!r}", field="eta_p"
            )
        if self.published_ratio is not None and self.published_error is not None:
            if abs(self.published_error - (self.published_ratio - 1.0)) > PRINT_ROUNDING + 1e-12:
                raise SchemaViolation(
                    f"published error for {self.commodity!r} is not published ratio - 1 "
                    "within print rounding",
                    field="published_error",
                )

    @property
    def has_published(self) -> bool:
        return self.published_ratio is not None and self.published_error is not None


@dataclass(frozen=True)
class Corpus:
    """Immutable, validated collection of study records."""

    records: tuple[StudyRecord, ...]
    origin: str

    def __post_init__(self) -> None:
        if not self.records:
            raise EmptyCorpus("corpus contains no records")
        seen: set[str] = set()
        for record in self.records:
            if record.commodity in seen:
                raise DuplicateCommodity(
                    f"duplicate commodity label {record.commodity!r}", field="commodity"
                )
            seen.add(record.commodity)

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)


@dataclass(frozen=True)
class DerivedRow:
    """One corpus record with its derived ratio, error and classification."""

    record: StudyRecord
    ratio: float
    error: float
    classification: Classification
    mode: Mode


@dataclass(frozen=True)
class DiscrepancyEntry:
    """A record whose published ratio disagrees with recomputation."""

    commodity: str
    published: float
    recomputed: float
    absolute_difference: float


@lru_cache(maxsize=1)
def embedded_corpus() -> Corpus:
    """Return the embedded 30-study corpus, verbatim as published."""
    records = tuple(
        StudyRecord(
            commodity=row[0],
            eta_p=float(row[1]),
            eta_i=float(row[2]),
            source=row[5],
            published_ratio=float(row[3]),
            published_error=float(row[4]),
        )
        for row in EMBEDDED_ROWS
    )
    return Corpus(records=records, origin="embedded")


def _parse_float(cell: str, column: str, line_no: int) -> float:
    try:
        value = float(cell)
    except ValueError:
        raise SchemaViolation(
            f"line {line_no}: column {column!r} is not numeric: {cell!r}", field=column
        ) from None
    if not math.isfinite(value):
        raise SchemaViolation(
            f"line {line_no}: column {column!r} must be finite", field=column
        )
    return value


def _parse_optional(cell: str, column: str, line_no: int) -> float | None:
    if cell == "":
        return None
    return _parse_float(cell, column, line_no)


def parse_csv(text: str, origin: str = "file") -> Corpus:
    """Parse corpus CSV text against the fixed six-column schema."""
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise SchemaViolation("missing header line") from None
    if tuple(header) != CSV_HEADER:
        raise SchemaViolation(
            f"header must be exactly {','.join(CSV_HEADER)}, got {','.join(header)}"
        )
    records = []
    for line_no, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != len(CSV_HEADER):
            raise SchemaViolation(
                f"line {line_no}: expected {len(CSV_HEADER)} columns, got {len(row)}"
            )
        records.append(
            StudyRecord(
                commodity=row[0],
                eta_p=_parse_float(row[1], "eta_p", line_no),
                eta_i=_parse_float(row[2], "eta_i", line_no),
                source=row[3],
                published_ratio=_parse_optional(row[4], "published_ratio", line_no),
                published_error=_parse_optional(row[5], "published_error", line_no),
            )
        )
    return Corpus(records=tuple(records), origin=origin)


def load_csv(path: str | Path) -> Corpus:
    """Load and validate a corpus CSV file."""
    text = Path(path).read_text(encoding="utf-8")
    return parse_csv(text, origin=str(path))


def _format_value(value: float | None) -> str:
    if value is None:
        return ""
    return repr(value)


def export_csv(corpus: Corpus) -> str:
    """Serialize a corpus byte-deterministically (LF, shortest decimals)."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for record in corpus:
        writer.writerow(
            [
                record.commodity,
                repr(record.eta_p),
                repr(record.eta_i),
                record.source,
                _format_value(record.published_ratio),
                _format_value(record.published_error),
            ]
        )
    return buffer.getvalue()


def derive_rows(
    corpus: Corpus, mode: Mode, epsilon: float = DEFAULT_EPSILON
) -> tuple[DerivedRow, ...]:
    """Derive ratio/error per record, sorted ascending by error."""
    rows = []
    for record in corpus:
        if mode is Mode.RECOMPUTED:
            if record.eta_i == 0:
                raise ZeroIncomeElasticity(
                    f"cannot recompute ratio for {record.commodity!r}: eta_i is 0",
                    field="eta_i",
                )
            ratio = record.eta_p / record.eta_i
            error = ratio - 1.0
        else:
            if not record.has_published:
                raise MissingPublishedColumn(
                    f"record {record.commodity!r} lacks published ratio/error columns"
                )
            ratio = record.published_ratio
            error = record.published_error
        rows.append(
            DerivedRow(
                record=record,
                ratio=ratio,
                error=error,
                classification=classify(error, epsilon),
                mode=mode,
            )
        )
    rows.sort(key=lambda r: (r.error, r.record.commodity))
    return tuple(rows)


def discrepancy_report(
    corpus: Corpus, tolerance: float = DEFAULT_DISCREPANCY_TOLERANCE
) -> tuple[DiscrepancyEntry, ...]:
    """List records whose published ratio disagrees with eta_p/eta_i."""
    if tolerance < 0 or not math.isfinite(tolerance):
        raise ValueError(f"tolerance must be finite and >= 0, got {tolerance}")
    entries = []
    for record in corpus:
        if record.published_ratio is None:
            raise MissingPublishedColumn(
                f"record {record.commodity!r} lacks a published ratio"
            )
        if record.eta_i == 0:
            raise ZeroIncomeElasticity(
                f"cannot recompute ratio for {record.commodity!r}: eta_i is 0",
                field="eta_i",
            )
        recomputed = record.eta_p / record.eta_i
        difference = abs(record.published_ratio - recomputed)
        if difference > tolerance:
            entries.append(
                DiscrepancyEntry(
                    commodity=record.commodity,
                    published=record.published_ratio,
                    recomputed=recomputed,
                    absolute_difference=difference,
                )
            )
    entries.sort(key=lambda e: (-e.absolute_difference, e.commodity))
    return tuple(entries)


def column(corpus: Corpus, which: str) -> tuple[float, ...]:
    """Extract one derived or raw column in record order."""
    if which == "eta_p":
        return tuple(r.eta_p for r in corpus)
    if which == "eta_i":
        return tuple(r.eta_i for r in corpus)
    if which in ("ratio_recomputed", "error_recomputed"):
        for record in corpus:
            if record.eta_i == 0:
                raise ZeroIncomeElasticity(
                    f"cannot recompute ratio for {record.commodity!r}: eta_i is 0",
                    field="eta_i",
                )
        offset = 0.0 if which == "ratio_recomputed" else 1.0
        return tuple(r.eta_p / r.eta_i - offset for r in corpus)
    if which in ("ratio_as_published", "error_as_published"):
        attr = "published_ratio" if which == "ratio_as_published" else "published_error"
        values = []
        for record in corpus:
            value = getattr(record, attr)
            if value is None:
                raise MissingPublishedColumn(
                    f"record {record.commodity!r} lacks column {attr!r}"
                )
            values.append(value)
        return tuple(values)
    raise ValueError(f"unknown column {which!r}")


def sign_reconciled_eta_i(
    corpus: Corpus, tolerance: float = PRINT_ROUNDING
) -> tuple[tuple[float, ...], tuple[str, ...]]:
    """Return the eta_i column with published-ratio signs restored.

    The published ratio column carries sign information that a printed eta_i
    cell can lose.  Wherever the published ratio's sign disagrees with the
    recomputed ratio and negating eta_i reconciles the two to print rounding,
    the negated value is used.  Returns the reconciled column and the labels
    of the records that changed.  On the embedded corpus this restores
    exactly Sugar USA (-0.898) and Cereal USA (-0.029).
    """
    values = []
    flipped = []
    for record in corpus:
        value = record.eta_i
        if record.published_ratio is not None and record.eta_i != 0:
            recomputed = record.eta_p / record.eta_i
            signs_disagree = (record.published_ratio > 0) != (recomputed > 0)
            reconciles = abs(record.published_ratio + recomputed) <= tolerance + 1e-12
            if signs_disagree and reconciles:
                value = -record.eta_i
                flipped.append(record.commodity)
        values.append(value)
    return tuple(values), tuple(flipped)


def eta_columns(
    corpus: Corpus, variant: EtaVariant
) -> tuple[tuple[float, ...], tuple[float, ...]]:
    """Return (eta_p, eta_i) under the requested income-elasticity variant."""
    eta_p = column(corpus, "eta_p")
    if variant is EtaVariant.AS_PRINTED:
        return eta_p, column(corpus, "eta_i")
    eta_i, _ = sign_reconciled_eta_i(corpus)
    return eta_p, eta_i


def ratio_column(
    corpus: Corpus, mode: Mode, variant: EtaVariant = EtaVariant.AS_PRINTED
) -> tuple[float, ...]:
    """Ratio column under a mode, honoring the eta_i variant when recomputing."""
    if mode is Mode.AS_PUBLISHED:
        return column(corpus, "ratio_as_published")
    eta_p, eta_i = eta_columns(corpus, variant)
    for record, value in zip(corpus, eta_i):
        if value == 0:
            raise ZeroIncomeElasticity(
                f"cannot recompute ratio for {record.commodity!r}: eta_i is 0",
                field="eta_i",
            )
    return tuple(p / i for p, i in zip(eta_p, eta_i))


def corpus_checksum(corpus: Corpus) -> str:
    """Stable SHA-256 of the CSV serialization."""
    import hashlib

    return hashlib.sha256(export_csv(corpus).encode("utf-8")).hexdigest()


def records_as_dicts(corpus: Corpus) -> list[dict]:
    """JSON-ready record dictionaries in corpus order."""
    return [
        {
            "commodity": r.commodity,
            "eta_p": r.eta_p,
            "eta_i": r.eta_i,
            "source": r.source,
            "published_ratio": r.published_ratio,
            "published_error": r.published_error,
        }
        for r in corpus
    ]
