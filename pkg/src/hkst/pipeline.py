"""End-to-end analysis: enhancement, unfolding, S-transform, peak extraction."""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from types import TracebackType
from typing import Self

import numpy as np
import numpy.typing as npt

from hkst.enhance import equalize
from hkst.exceptions import GradeComparisonError, SignalError, SizeLimitError
from hkst.metrics import quality_report
from hkst.models.histogram import TransferMap
from hkst.models.image import GrayImage, Signal
from hkst.models.pipeline import (
    MAX_RASTER_SAMPLES,
    GradeComparison,
    GradeRow,
    PairwiseOrder,
    PipelineConfig,
    PipelineReport,
    UnfoldMode,
)
from hkst.models.spectrum import AmplitudeSpectrum, STSpectrum
from hkst.stransform import amplitude, st_forward

logger = logging.getLogger("hkst.pipeline")

MIN_ROW_WIDTH = 4
# Aggregated non-DC amplitudes at or below this count as no energy.
ENERGY_FLOOR = 1e-12

CONSTANT_AFTER_ENHANCEMENT = "constant image after enhancement: no dominant voice"
NO_NON_DC_ENERGY = "no non-DC energy in the aggregated spectrum: no dominant voice"
CLAMPED_MODIFIED_MEAN = "modified mean radicand clamped to [0, 1]"


@dataclass(frozen=True)
class DominantPeak:
    """Strongest non-DC voice of an aggregated spectrum.

    Attributes:
        voice: Voice index in 1..N//2.
        amplitude: Temporal maximum of the aggregated amplitude at `voice`.
        row_peak_mean: Mean over rows of each row's temporal peak at `voice`.
        row_peak_std: Population std of the same per-row peaks.
    """

    voice: int
    amplitude: float
    row_peak_mean: float
    row_peak_std: float


@dataclass(frozen=True, eq=False)
class PipelineResult:
    """Everything one pipeline run produces.

    Attributes:
        report: The serializable report.
        enhanced: Image after enhancement.
        transfer: Transfer map of the equalizer (None when enhancement is off).
        aggregated: Entrywise mean of per-row amplitude spectra (raster mode:
            the amplitude of the single spectrum).
        spectrum: Complex spectrum of the unfolded raster (raster mode only,
            None for constant images).
    """

    report: PipelineReport
    enhanced: GrayImage
    transfer: TransferMap | None
    aggregated: AmplitudeSpectrum
    spectrum: STSpectrum | None = None


class Pipeline:
    """Immutable analysis runner.

    Per-row transforms run on a thread pool when `workers > 1`. The pool is
    created on first use and shut down by `close()` or the context manager.

    Usage:
        with Pipeline(PipelineConfig(workers=4)) as pipeline:
            result = pipeline.run(image, label="grade-1")
    """

    def __init__(self, config: PipelineConfig | None = None) -> None:
        """Initialize the pipeline.

        Args:
            config: Run configuration (defaults to PipelineConfig()).
        """
        self._config = config or PipelineConfig()
        self._executor: ThreadPoolExecutor | None = None

    @property
    def config(self) -> PipelineConfig:
        """The configuration this pipeline was built with."""
        return self._config

    def _get_executor(self) -> ThreadPoolExecutor | None:
        if self._config.workers == 1:
            return None
        if self._executor is None:
            self._executor = ThreadPoolExecutor(max_workers=self._config.workers, thread_name_prefix="hkst")
        return self._executor

    def _row_amplitude(self, signal: Signal) -> AmplitudeSpectrum:
        return amplitude(st_forward(signal, mean_removal=self._config.mean_removal))

    def _check_unfoldable(self, image: GrayImage) -> None:
        match self._config.unfold_mode:
            case UnfoldMode.ROWS:
                if image.width < MIN_ROW_WIDTH:
                    raise SignalError(f"rows mode needs width >= {MIN_ROW_WIDTH}, got {image.width}")
            case UnfoldMode.RASTER:
                if image.size > MAX_RASTER_SAMPLES:
                    raise SizeLimitError(
                        f"raster mode size limit: {image.size} samples exceeds {MAX_RASTER_SAMPLES}"
                    )

    def _constant_amplitude(self, level: float, n_samples: int) -> AmplitudeSpectrum:
        """Closed-form amplitude of a constant signal.

        Voice 0 holds the level (zero after mean removal); every other voice
        holds its e^{-2pi^2} alias of the DC term.
        """
        dc = 0.0 if self._config.mean_removal else level
        magnitudes = np.full((n_samples, n_samples), dc * math.exp(-2.0 * math.pi**2), dtype=np.float64)
        magnitudes[:, 0] = dc
        return AmplitudeSpectrum(magnitudes)

    def _unfold(self, image: GrayImage) -> list[Signal]:
        """Signals normalized to [0, 1]."""
        normalized = image.normalized()
        if self._config.unfold_mode is UnfoldMode.RASTER:
            return [Signal(normalized.ravel())]
        return [Signal(row) for row in normalized]

    def _aggregate(
        self, signals: list[Signal]
    ) -> tuple[AmplitudeSpectrum, npt.NDArray[np.float64], STSpectrum | None]:
        """Mean amplitude over signals, per-signal time peaks, raster spectrum."""
        if self._config.unfold_mode is UnfoldMode.RASTER:
            spectrum = st_forward(signals[0], mean_removal=self._config.mean_removal)
            single = amplitude(spectrum)
            return single, single.time_peak()[None, :], spectrum

        executor = self._get_executor()
        amplitudes = executor.map(self._row_amplitude, signals) if executor else map(self._row_amplitude, signals)

        n = signals[0].length
        total = np.zeros((n, n), dtype=np.float64)
        row_peaks = np.empty((len(signals), n), dtype=np.float64)
        # Summed in row order whatever the schedule.
        for index, row_amplitude in enumerate(amplitudes):
            total += row_amplitude.magnitudes
            row_peaks[index] = row_amplitude.time_peak()
        return AmplitudeSpectrum(total / len(signals)), row_peaks, None

    def _dominant_peak(
        self, aggregated: AmplitudeSpectrum, row_peaks: npt.NDArray[np.float64], warnings: list[str]
    ) -> DominantPeak | None:
        candidates = aggregated.time_mean()[1 : aggregated.n_voices // 2 + 1]
        if candidates.size == 0 or float(candidates.max()) <= ENERGY_FLOOR:
            warnings.append(NO_NON_DC_ENERGY)
            return None
        # argmax returns the first maximum, i.e. the smallest voice.
        voice = 1 + int(np.argmax(candidates))
        return DominantPeak(
            voice=voice,
            amplitude=float(aggregated.magnitudes[:, voice].max()),
            row_peak_mean=float(row_peaks[:, voice].mean()),
            row_peak_std=float(row_peaks[:, voice].std()),
        )

    def run(self, image: GrayImage, label: str | None = None) -> PipelineResult:
        """Analyze one image.

        A constant image after enhancement skips the transform and reports
        no dominant voice.

        Args:
            image: Input image.
            label: Optional name carried into the report (used by compare_grades).

        Returns:
            PipelineResult with the report and intermediate products.

        Raises:
            SignalError: Rows mode on an image narrower than 4 pixels.
            SizeLimitError: Raster mode on more than 4096 pixels.
        """
        config = self._config
        self._check_unfoldable(image)
        enhanced, transfer, moments = equalize(image, config.enhancement, config.beta_normalization)
        quality = quality_report(image, enhanced, config.beta_normalization)

        warnings = list(transfer.warnings) if transfer is not None else []
        if moments.clamped:
            warnings.append(CLAMPED_MODIFIED_MEAN)

        spectrum: STSpectrum | None = None
        dominant: DominantPeak | None = None
        if enhanced.is_constant():
            n_samples = enhanced.size if config.unfold_mode is UnfoldMode.RASTER else enhanced.width
            aggregated = self._constant_amplitude(float(enhanced.normalized()[0, 0]), n_samples)
            warnings.append(CONSTANT_AFTER_ENHANCEMENT)
        else:
            aggregated, row_peaks, spectrum = self._aggregate(self._unfold(enhanced))
            dominant = self._dominant_peak(aggregated, row_peaks, warnings)

        for warning in warnings:
            logger.warning("%s: %s", label or "image", warning)
        logger.debug("Dominant peak %s", dominant)

        report = PipelineReport(
            label=label,
            dominant_voice=dominant.voice if dominant else None,
            peak_amplitude=dominant.amplitude if dominant else None,
            per_voice_mean_amplitude=[float(v) for v in aggregated.time_mean()],
            per_row_peak_mean=dominant.row_peak_mean if dominant else None,
            per_row_peak_std=dominant.row_peak_std if dominant else None,
            quality=quality,
            moments=moments,
            config=config,
            warnings=warnings,
        )
        return PipelineResult(
            report=report, enhanced=enhanced, transfer=transfer, aggregated=aggregated, spectrum=spectrum
        )

    def close(self) -> None:
        """Shut down the worker pool if one was started."""
        if self._executor is not None:
            self._executor.shutdown(wait=True)
            self._executor = None

    def __enter__(self) -> Self:
        """Context manager entry."""
        return self

    def __exit__(
        self,
        exc_type: type[BaseException] | None,
        exc_val: BaseException | None,
        exc_tb: TracebackType | None,
    ) -> None:
        """Context manager exit."""
        self.close()

    def __repr__(self) -> str:
        """Return a readable representation."""
        return f"Pipeline(mode={self._config.unfold_mode}, enhancement={self._config.enhancement})"


def analyze(image: GrayImage, config: PipelineConfig | None = None, label: str | None = None) -> PipelineReport:
    """Run the pipeline once and return its report."""
    with Pipeline(config) as pipeline:
        return pipeline.run(image, label).report


def _relation(first: float | None, second: float | None) -> str:
    if first is None or second is None:
        return "?"
    if first < second:
        return "<"
    if first > second:
        return ">"
    return "="


def compare_grades(reports: list[PipelineReport]) -> GradeComparison:
    """Order reports by peak amplitude.

    Unlabelled reports are named by their 1-based input position ("#1").
    Missing peaks sort last.

    Args:
        reports: At least two pipeline reports.

    Returns:
        GradeComparison with rows sorted ascending (ties by label) and the
        relation of every pair in input order.

    Raises:
        GradeComparisonError: Fewer than two reports.
    """
    if len(reports) < 2:
        raise GradeComparisonError(f"grade comparison needs at least 2 reports, got {len(reports)}")

    rows = [
        GradeRow(
            label=report.label if report.label is not None else f"#{index}",
            peak_amplitude=report.peak_amplitude,
            dominant_voice=report.dominant_voice,
        )
        for index, report in enumerate(reports, start=1)
    ]
    ordered = sorted(
        rows,
        key=lambda row: (row.peak_amplitude is None, row.peak_amplitude or 0.0, row.label),
    )
    pairwise = [
        PairwiseOrder(first.label, _relation(first.peak_amplitude, second.peak_amplitude), second.label)
        for i, first in enumerate(rows)
        for second in rows[i + 1 :]
    ]
    return GradeComparison(rows=ordered, pairwise=pairwise)
