"""Pydantic models for intensity moments and image-quality metrics."""

from enum import StrEnum

from pydantic import Field

from hkst.models.base import HkstBaseModel


class BetaNormalization(StrEnum):
    """Denominator of the hyper-kurtosis term beta.

    SIGMA divides the sixth central moment by sigma (the modified-mean
    formula as published); SIGMA6 by sigma**6 (the standardized moment).
    """

    SIGMA = "sigma"
    SIGMA6 = "sigma6"


class MomentSummary(HkstBaseModel):
    """Moments of an intensity distribution normalized to [0, 1].

    modified_mean is sqrt(mean + beta) when the excess kurtosis is negative
    and sqrt(mean - beta) otherwise; `clamped` records that the radicand
    left [0, 1] and was clipped.
    """

    mean: float = Field(ge=0.0, le=1.0)
    sigma: float = Field(ge=0.0)
    excess_kurtosis: float
    sixth_central_moment: float = Field(ge=0.0)
    beta: float = Field(ge=0.0)
    modified_mean: float = Field(ge=0.0, le=1.0)
    clamped: bool = False
    beta_normalization: BetaNormalization = BetaNormalization.SIGMA


class QualityReport(HkstBaseModel):
    """RMSE, PSNR and AMMBE of a test image against a reference.

    psnr_db is None when the images are identical (RMSE 0).
    """

    rmse: float = Field(ge=0.0)
    psnr_db: float | None
    ammbe: float = Field(ge=0.0, le=1.0)
    clamped_mm_reference: bool = False
    clamped_mm_test: bool = False
