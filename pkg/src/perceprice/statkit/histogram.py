"""Histogram binning with half-open, anchor-aligned bins."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from ..errors import InvalidBinWidth


@dataclass(frozen=True)
class Histogram:
    """Bin edges (length bins + 1) and per-bin counts."""

    bin_edges: tuple[float, ...]
    counts: tuple[int, ...]


def _bin_index(value: float, anchor: float, width: float) -> int:
    index = math.floor((value - anchor) / width)
    # Guard the floor against float rounding at bin boundaries.
    while anchor + index * width > value:
        index -= 1
    while anchor + (index + 1) * width <= value:
        index += 1
    return index


def histogram(
    values: Sequence[float], bin_width: float, anchor: float = 0.0
) -> Histogram:
    """Bin values into [edge, edge + width) bins with ``anchor`` on an edge."""
    if not (math.isfinite(bin_width) and bin_width > 0):
        raise InvalidBinWidth(f"bin width must be positive and finite, got {bin_width}")
    if not math.isfinite(anchor):
        raise InvalidBinWidth("anchor must be finite")
    if not values:
        raise ValueError("values must be non-empty")
    if not all(math.isfinite(v) for v in values):
        raise ValueError("all values must be finite")
    indices = [_bin_index(v, anchor, bin_width) for v in values]
    low = min(indices)
    high = max(indices)
    counts = [0] * (high - low + 1)
    for index in indices:
        counts[index - low] += 1
    edges = tuple(anchor + k * bin_width for k in range(low, high + 2))
    return Histogram(bin_edges=edges, counts=tuple(counts))
