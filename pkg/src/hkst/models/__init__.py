"""Data models for images, spectra, reports and configuration."""

from hkst.models.base import HkstBaseModel
from hkst.models.enhancement import EnhancementReport
from hkst.models.histogram import Histogram, TransferMap
from hkst.models.image import GrayImage, Signal
from hkst.models.manifest import RunManifest
from hkst.models.phantom import PhantomKind, PhantomSpec
from hkst.models.pipeline import (
    MAX_RASTER_SAMPLES,
    EnhancementMethod,
    GradeComparison,
    GradeRow,
    PairwiseOrder,
    PipelineConfig,
    PipelineReport,
    UnfoldMode,
)
from hkst.models.quality import BetaNormalization, MomentSummary, QualityReport
from hkst.models.spectrum import AmplitudeSpectrum, STMethod, STSpectrum

__all__ = [
    "MAX_RASTER_SAMPLES",
    "AmplitudeSpectrum",
    "BetaNormalization",
    "EnhancementMethod",
    "EnhancementReport",
    "GradeComparison",
    "GradeRow",
    "GrayImage",
    "Histogram",
    "HkstBaseModel",
    "MomentSummary",
    "PairwiseOrder",
    "PhantomKind",
    "PhantomSpec",
    "PipelineConfig",
    "PipelineReport",
    "QualityReport",
    "RunManifest",
    "STMethod",
    "STSpectrum",
    "Signal",
    "TransferMap",
    "UnfoldMode",
]
