"""Pydantic model for the enhancement report written by `hkst enhance`."""

from pydantic import Field

from hkst.models.base import HkstBaseModel
from hkst.models.pipeline import EnhancementMethod
from hkst.models.quality import MomentSummary, QualityReport


class EnhancementReport(HkstBaseModel):
    """Quality, moments and transfer map of one equalization.

    Attributes:
        method: Equalizer used.
        split_point: Segment boundary T (None for global HE).
        lut: 256-entry transfer map.
        quality: Input vs enhanced metrics.
        moments: Moments of the input image.
        warnings: Degenerate-input notices.
        input_histogram: Pixel counts per level before enhancement.
        output_histogram: Pixel counts per level after enhancement.
    """

    method: EnhancementMethod
    split_point: int | None = Field(default=None, ge=0, le=255)
    lut: list[int] = Field(min_length=256, max_length=256)
    quality: QualityReport
    moments: MomentSummary
    warnings: list[str] = Field(default_factory=list)
    input_histogram: list[int] = Field(min_length=256, max_length=256)
    output_histogram: list[int] = Field(min_length=256, max_length=256)
