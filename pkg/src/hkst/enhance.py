"""Histogram construction and histogram equalizers.

Three equalizers share one segment-wise mapping:
- global HE: one segment [0, 255];
- BHE: split at the rounded mean, lower [0, T] and upper [T + 1, 255];
- HKMDHE: the same split-and-equalize, with T taken from the modified mean.

Within a segment each level maps to lo + round((hi - lo) * (C(v) - C_min) /
(C_total - C_min)), C being the segment's cumulative count and C_min the
count at its darkest occupied level. Rounding is exact integer arithmetic,
ties away from zero. A segment with fewer than two occupied levels maps
identically onto its own range.
"""

from __future__ import annotations

import logging

import numpy as np
import numpy.typing as npt

from hkst.metrics import compute_moments
from hkst.models.base import round_half_away
from hkst.models.histogram import LEVELS, Histogram, TransferMap
from hkst.models.image import GrayImage
from hkst.models.pipeline import EnhancementMethod
from hkst.models.quality import BetaNormalization, MomentSummary

logger = logging.getLogger("hkst.enhance")

CONSTANT_IMAGE_WARNING = "constant image: transfer map is the identity"

# HKMDHE keeps both output ranges non-empty.
MIN_SPLIT = 1
MAX_SPLIT = 254


def histogram(image: GrayImage) -> Histogram:
    """Count pixels per intensity level."""
    return Histogram(np.bincount(image.pixels.ravel(), minlength=LEVELS))


def _equalize_segment(counts: npt.NDArray[np.int64], lo: int, hi: int) -> npt.NDArray[np.int64]:
    """Equalize counts[lo..hi] onto [lo, hi]."""
    identity = np.arange(lo, hi + 1, dtype=np.int64)
    segment = counts[lo : hi + 1]
    if np.count_nonzero(segment) < 2:
        return identity

    cumulative = np.cumsum(segment)
    c_min = int(cumulative[np.flatnonzero(segment)[0]])
    denominator = int(cumulative[-1]) - c_min
    numerator = np.maximum(cumulative - c_min, 0) * (hi - lo)
    # floor((2a + b) / 2b) == round-half-up of a / b for a >= 0
    return lo + (2 * numerator + denominator) // (2 * denominator)


def _split_map(hist: Histogram, split_point: int) -> TransferMap:
    counts = hist.counts
    lut = np.empty(LEVELS, dtype=np.int64)
    lut[: split_point + 1] = _equalize_segment(counts, 0, split_point)
    if split_point < LEVELS - 1:
        lut[split_point + 1 :] = _equalize_segment(counts, split_point + 1, LEVELS - 1)
    return TransferMap(lut, split_point=split_point)


def _constant_result(image: GrayImage, split_point: int | None) -> tuple[GrayImage, TransferMap]:
    logger.warning("Equalizing a constant image (level %d); returning identity map", image.pixel(0, 0))
    return image, TransferMap.identity(split_point=split_point, warnings=(CONSTANT_IMAGE_WARNING,))


def equalize_split(image: GrayImage, split_point: int) -> tuple[GrayImage, TransferMap]:
    """Equalize the sub-histograms [0, T] and [T + 1, 255] independently.

    Args:
        image: Input image.
        split_point: T; pixels with v <= T belong to the lower segment.

    Returns:
        Tuple of (enhanced image, transfer map).
    """
    if not 0 <= split_point <= LEVELS - 1:
        raise ValueError(f"split point {split_point} outside [0, 255]")
    if image.is_constant():
        return _constant_result(image, split_point)
    transfer = _split_map(histogram(image), split_point)
    return transfer.apply(image), transfer


def equalize_global(image: GrayImage) -> tuple[GrayImage, TransferMap]:
    """Classic cdf-based histogram equalization over [0, 255].

    Returns:
        Tuple of (enhanced image, transfer map with split_point None).
    """
    if image.is_constant():
        return _constant_result(image, None)
    lut = _equalize_segment(histogram(image).counts, 0, LEVELS - 1)
    transfer = TransferMap(lut)
    return transfer.apply(image), transfer


def equalize_bhe(image: GrayImage) -> tuple[GrayImage, TransferMap]:
    """Bi-histogram equalization split at T = round(255 * mean)."""
    split_point = int(round_half_away(float(image.pixels.mean())))
    logger.debug("BHE split point %d", split_point)
    return equalize_split(image, split_point)


def hkmdhe_split_point(moments: MomentSummary) -> int:
    """T = clamp(round(255 * MM), 1, 254)."""
    split_point = int(round_half_away(255.0 * moments.modified_mean))
    return min(max(split_point, MIN_SPLIT), MAX_SPLIT)


def equalize_hkmdhe(
    image: GrayImage,
    beta_normalization: BetaNormalization = BetaNormalization.SIGMA,
) -> tuple[GrayImage, TransferMap, MomentSummary]:
    """Hyper-kurtosis based modified duo histogram equalization.

    Splits the histogram at the modified mean MM instead of the mean, then
    equalizes both sub-histograms as BHE does.

    Args:
        image: Input image.
        beta_normalization: Denominator variant for the hyper-kurtosis term.

    Returns:
        Tuple of (enhanced image, transfer map, moments of the input).
    """
    moments = compute_moments(image, beta_normalization)
    split_point = hkmdhe_split_point(moments)
    logger.debug(
        "HKMDHE modified mean %.6f (clamped=%s) -> split point %d",
        moments.modified_mean,
        moments.clamped,
        split_point,
    )
    enhanced, transfer = equalize_split(image, split_point)
    return enhanced, transfer, moments


def equalize(
    image: GrayImage,
    method: EnhancementMethod,
    beta_normalization: BetaNormalization = BetaNormalization.SIGMA,
) -> tuple[GrayImage, TransferMap | None, MomentSummary]:
    """Apply the configured enhancement.

    Returns:
        Tuple of (enhanced image, transfer map or None for NONE, moments of
        the input image).
    """
    match method:
        case EnhancementMethod.HKMDHE:
            return equalize_hkmdhe(image, beta_normalization)
        case EnhancementMethod.BHE:
            enhanced, transfer = equalize_bhe(image)
        case EnhancementMethod.GLOBAL:
            enhanced, transfer = equalize_global(image)
        case EnhancementMethod.NONE:
            return image, None, compute_moments(image, beta_normalization)
    return enhanced, transfer, compute_moments(image, beta_normalization)
