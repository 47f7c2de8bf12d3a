"""Pydantic models for the analysis pipeline and grade comparison."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from enum import StrEnum

from pydantic import Field

from hkst.models.base import HkstBaseModel
from hkst.models.quality import BetaNormalization, MomentSummary, QualityReport

# Largest unfolded raster that raster mode accepts (N x N spectrum in memory).
MAX_RASTER_SAMPLES = 4096


class UnfoldMode(StrEnum):
    """How an image becomes S-transform input."""

    ROWS = "rows"
    RASTER = "raster"


class EnhancementMethod(StrEnum):
    """Contrast enhancement applied before analysis."""

    HKMDHE = "hkmdhe"
    BHE = "bhe"
    GLOBAL = "global"
    NONE = "none"


class PipelineConfig(HkstBaseModel):
    """Configuration of a pipeline run.

    Attributes:
        unfold_mode: Per-row signals (default) or one raster signal.
        mean_removal: Subtract each signal's mean before the transform.
        enhancement: Equalizer applied first.
        beta_normalization: Hyper-kurtosis denominator for the modified mean.
        workers: Threads used for per-row transforms (1 = serial).
    """

    unfold_mode: UnfoldMode = UnfoldMode.ROWS
    mean_removal: bool = True
    enhancement: EnhancementMethod = EnhancementMethod.HKMDHE
    beta_normalization: BetaNormalization = BetaNormalization.SIGMA
    workers: int = Field(default=1, ge=1)


class PipelineReport(HkstBaseModel):
    """Result of analyzing one image.

    dominant_voice and the peak statistics are None when the enhanced image
    carries no non-DC energy; `warnings` then names the reason.
    """

    label: str | None = None
    dominant_voice: int | None = Field(default=None, ge=1)
    peak_amplitude: float | None = Field(default=None, ge=0.0)
    per_voice_mean_amplitude: list[float]
    per_row_peak_mean: float | None = None
    per_row_peak_std: float | None = None
    quality: QualityReport
    moments: MomentSummary
    config: PipelineConfig
    warnings: list[str] = Field(default_factory=list)


@dataclass(frozen=True)
class GradeRow:
    """One image's entry in a grade comparison."""

    label: str
    peak_amplitude: float | None
    dominant_voice: int | None


@dataclass(frozen=True)
class PairwiseOrder:
    """Ordering of two labelled peaks.

    relation is '<', '>' or '=', or '?' when either peak is missing.
    """

    first: str
    relation: str
    second: str

    def __str__(self) -> str:
        return f"{self.first} {self.relation} {self.second}"


@dataclass
class GradeComparison:
    """Peak-amplitude table sorted ascending, plus all pairwise orderings.

    Iterable over rows for convenience.

    Attributes:
        rows: Entries sorted by peak amplitude (ties by label; missing peaks last).
        pairwise: Relation of every pair, in input order.
    """

    rows: list[GradeRow]
    pairwise: list[PairwiseOrder]

    @property
    def labels(self) -> list[str]:
        """Labels in ascending peak order."""
        return [row.label for row in self.rows]

    def __iter__(self) -> Iterator[GradeRow]:
        """Iterate over the sorted rows."""
        return iter(self.rows)

    def __len__(self) -> int:
        """Return the number of compared reports."""
        return len(self.rows)

    def __repr__(self) -> str:
        """Return a readable representation."""
        return f"GradeComparison(order={' <= '.join(self.labels)})"
