"""Exceptions for the hkst package."""


class BaseError(Exception):
    """Base exception for all hkst errors."""


class FormatError(BaseError, ValueError):
    """Malformed input file (PGM or CSV).

    Attributes:
        offset: Byte offset (PGM, undecodable CSV) or 1-based line number
            (CSV rows) of the problem.
    """

    def __init__(self, message: str, offset: int) -> None:
        self.offset = offset
        super().__init__(f"{message} (at {offset})")


class PGMHeaderError(FormatError):
    """PGM magic number or header fields are malformed."""


class UnsupportedMaxvalError(FormatError):
    """PGM maxval other than 255."""


class TruncatedPayloadError(FormatError):
    """PGM raster shorter than width x height bytes."""


class SignalFormatError(FormatError):
    """Signal CSV is empty or malformed."""


class ShapeMismatchError(BaseError, ValueError):
    """Two images that must share dimensions do not."""

    def __init__(self, reference: tuple[int, ...], test: tuple[int, ...]) -> None:
        self.reference = reference
        self.test = test
        super().__init__(f"dimension mismatch: reference {reference} vs test {test}")


class SignalError(BaseError, ValueError):
    """Signal invariants violated (too short, non-finite samples)."""


class SpectrumError(BaseError, ValueError):
    """S-transform spectrum violates its invariants."""


class ZeroSignalError(BaseError, ValueError):
    """PSNR requested against an all-zero test image."""


class PhantomSpecError(BaseError, ValueError):
    """Phantom parameters are inconsistent with the requested generator."""


class SizeLimitError(BaseError):
    """Input exceeds a hard size limit (raster-mode spectrum memory)."""


class GradeComparisonError(BaseError, ValueError):
    """Grade comparison needs at least two reports."""
