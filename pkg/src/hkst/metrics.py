"""Intensity moments and image-quality metrics.

Moments (and hence the modified mean MM) are computed on intensities scaled
to [0, 1]; RMSE and PSNR on the stored 0-255 values.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Iterable, Mapping

import numpy as np

from hkst.exceptions import ShapeMismatchError, ZeroSignalError
from hkst.models.histogram import LEVELS
from hkst.models.image import GrayImage
from hkst.models.quality import BetaNormalization, MomentSummary, QualityReport

logger = logging.getLogger("hkst.metrics")


def compute_moments(
    image: GrayImage,
    beta_normalization: BetaNormalization = BetaNormalization.SIGMA,
) -> MomentSummary:
    """Compute mean, sigma, excess kurtosis, beta and the modified mean.

    beta is E[(X - m)^6] / sigma (or / sigma**6 for SIGMA6). The modified mean
    is sqrt(m + beta) when the excess kurtosis is negative, otherwise
    sqrt(m - beta); the radicand is clipped to [0, 1] and the clip recorded.
    A constant image (sigma == 0) has beta 0 and MM equal to its mean.

    Args:
        image: Input image.
        beta_normalization: Denominator variant for beta.

    Returns:
        MomentSummary on the normalized scale.
    """
    counts = np.bincount(image.pixels.ravel(), minlength=LEVELS).astype(np.float64)
    total = counts.sum()
    levels = np.arange(LEVELS, dtype=np.float64)

    raw_mean = float(counts @ levels) / total
    deviations = (levels - raw_mean) / 255.0
    weights = counts / total
    variance = float(weights @ deviations**2)
    mean = raw_mean / 255.0

    if variance == 0.0:
        return MomentSummary(
            mean=mean,
            sigma=0.0,
            excess_kurtosis=0.0,
            sixth_central_moment=0.0,
            beta=0.0,
            modified_mean=mean,
            clamped=False,
            beta_normalization=beta_normalization,
        )

    sigma = math.sqrt(variance)
    fourth = float(weights @ deviations**4)
    sixth = float(weights @ deviations**6)
    excess_kurtosis = fourth / variance**2 - 3.0

    match beta_normalization:
        case BetaNormalization.SIGMA:
            beta = sixth / sigma
        case BetaNormalization.SIGMA6:
            beta = sixth / sigma**6

    radicand = mean + beta if excess_kurtosis < 0 else mean - beta
    clamped = not 0.0 <= radicand <= 1.0
    if clamped:
        logger.debug("Modified-mean radicand %.6g clipped to [0, 1]", radicand)
    modified_mean = math.sqrt(min(max(radicand, 0.0), 1.0))

    return MomentSummary(
        mean=mean,
        sigma=sigma,
        excess_kurtosis=excess_kurtosis,
        sixth_central_moment=sixth,
        beta=beta,
        modified_mean=modified_mean,
        clamped=clamped,
        beta_normalization=beta_normalization,
    )


def _check_shapes(reference: GrayImage, test: GrayImage) -> None:
    if reference.shape != test.shape:
        raise ShapeMismatchError(reference.shape, test.shape)


def rmse(reference: GrayImage, test: GrayImage) -> float:
    """Root mean square error on raw 0-255 intensities.

    Raises:
        ShapeMismatchError: Images differ in dimensions.
    """
    _check_shapes(reference, test)
    diff = reference.pixels.astype(np.float64) - test.pixels.astype(np.float64)
    return math.sqrt(float(np.mean(diff * diff)))


def psnr(reference: GrayImage, test: GrayImage) -> float | None:
    """Peak signal-to-noise ratio 20 log10(max(test) / RMSE) in dB.

    The peak is the test image's own maximum, not the constant 255.

    Returns:
        PSNR in dB, or None when the images are identical.

    Raises:
        ShapeMismatchError: Images differ in dimensions.
        ZeroSignalError: Test image is all zero while the images differ.
    """
    error = rmse(reference, test)
    if error == 0.0:
        return None
    peak = int(test.pixels.max())
    if peak == 0:
        raise ZeroSignalError("zero-signal test image")
    return 20.0 * math.log10(peak / error)


def ammbe(
    reference: GrayImage,
    test: GrayImage,
    beta_normalization: BetaNormalization = BetaNormalization.SIGMA,
) -> float:
    """Absolute modified mean brightness error |MM(reference) - MM(test)|.

    Images may differ in size; only their intensity distributions matter.
    """
    mm_reference = compute_moments(reference, beta_normalization).modified_mean
    mm_test = compute_moments(test, beta_normalization).modified_mean
    return abs(mm_reference - mm_test)


def quality_report(
    reference: GrayImage,
    test: GrayImage,
    beta_normalization: BetaNormalization = BetaNormalization.SIGMA,
) -> QualityReport:
    """RMSE, PSNR and AMMBE of `test` against `reference`.

    Raises:
        ShapeMismatchError: Images differ in dimensions.
        ZeroSignalError: Test image is all zero while the images differ.
    """
    moments_reference = compute_moments(reference, beta_normalization)
    moments_test = compute_moments(test, beta_normalization)
    return QualityReport(
        rmse=rmse(reference, test),
        psnr_db=psnr(reference, test),
        ammbe=abs(moments_reference.modified_mean - moments_test.modified_mean),
        clamped_mm_reference=moments_reference.clamped,
        clamped_mm_test=moments_test.clamped,
    )


def brightness_comparison(
    images: Iterable[GrayImage],
    equalizers: Mapping[str, Callable[[GrayImage], GrayImage]],
    beta_normalization: BetaNormalization = BetaNormalization.SIGMA,
) -> dict[str, float]:
    """Mean AMMBE(input, equalized) per equalizer over a corpus.

    Lower means the equalizer better preserves the modified-mean brightness.

    Args:
        images: Corpus of input images.
        equalizers: Name -> function returning the enhanced image.
        beta_normalization: Denominator variant for beta.

    Returns:
        Name -> mean AMMBE.
    """
    corpus = list(images)
    if not corpus:
        raise ValueError("brightness comparison needs at least one image")
    return {
        name: float(np.mean([ammbe(image, equalize(image), beta_normalization) for image in corpus]))
        for name, equalize in equalizers.items()
    }
