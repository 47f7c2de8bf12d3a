"""hkst: HKMDHE contrast enhancement and discrete S-transform analysis.

Equalize 8-bit grayscale images, measure brightness preservation, and
extract the dominant-voice peak amplitude from S-transform spectra.
"""

from hkst.enhance import equalize, equalize_bhe, equalize_global, equalize_hkmdhe, equalize_split, histogram
from hkst.exceptions import (
    BaseError,
    FormatError,
    GradeComparisonError,
    PGMHeaderError,
    PhantomSpecError,
    ShapeMismatchError,
    SignalError,
    SignalFormatError,
    SizeLimitError,
    SpectrumError,
    TruncatedPayloadError,
    UnsupportedMaxvalError,
    ZeroSignalError,
)
from hkst.image_io import load_pgm, read_pgm, save_pgm, unfold_raster, unfold_rows, write_pgm
from hkst.metrics import ammbe, compute_moments, psnr, quality_report, rmse
from hkst.models import (
    AmplitudeSpectrum,
    BetaNormalization,
    EnhancementMethod,
    GrayImage,
    MomentSummary,
    PhantomKind,
    PhantomSpec,
    PipelineConfig,
    PipelineReport,
    QualityReport,
    Signal,
    STSpectrum,
    TransferMap,
    UnfoldMode,
)
from hkst.phantom import make_phantom
from hkst.pipeline import Pipeline, PipelineResult, analyze, compare_grades
from hkst.stransform import amplitude, st_direct_freq, st_direct_time, st_forward, st_inverse

__all__ = [
    "GrayImage",
    "Signal",
    "TransferMap",
    "STSpectrum",
    "AmplitudeSpectrum",
    "MomentSummary",
    "QualityReport",
    "PipelineConfig",
    "PipelineReport",
    "PhantomSpec",
    "PhantomKind",
    "BetaNormalization",
    "EnhancementMethod",
    "UnfoldMode",
    "Pipeline",
    "PipelineResult",
    "analyze",
    "compare_grades",
    "read_pgm",
    "write_pgm",
    "load_pgm",
    "save_pgm",
    "unfold_raster",
    "unfold_rows",
    "histogram",
    "equalize",
    "equalize_split",
    "equalize_global",
    "equalize_bhe",
    "equalize_hkmdhe",
    "compute_moments",
    "rmse",
    "psnr",
    "ammbe",
    "quality_report",
    "st_forward",
    "st_direct_freq",
    "st_direct_time",
    "st_inverse",
    "amplitude",
    "make_phantom",
    "BaseError",
    "FormatError",
    "PGMHeaderError",
    "UnsupportedMaxvalError",
    "TruncatedPayloadError",
    "SignalFormatError",
    "ShapeMismatchError",
    "SignalError",
    "SpectrumError",
    "ZeroSignalError",
    "PhantomSpecError",
    "SizeLimitError",
    "GradeComparisonError",
]

__version__ = "0.1.0"
