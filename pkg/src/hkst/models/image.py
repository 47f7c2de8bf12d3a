"""Raster and signal containers."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from hkst.exceptions import SignalError
from hkst.models.base import readonly


@dataclass(frozen=True, eq=False)
class GrayImage:
    """An 8-bit grayscale raster.

    Pixels are stored as a (height, width) uint8 array; row i is X(i, .)
    and column j is X(., j). The array is read-only.

    Attributes:
        pixels: 2-D array of intensities in [0, 255].
    """

    pixels: npt.NDArray[np.uint8]

    def __post_init__(self) -> None:
        array = np.asarray(self.pixels)
        if array.ndim != 2 or array.shape[0] < 1 or array.shape[1] < 1:
            raise ValueError(f"image must be a non-empty 2-D raster, got shape {array.shape}")
        if array.dtype != np.uint8:
            if not np.issubdtype(array.dtype, np.integer):
                raise ValueError(f"pixel values must be integers, got {array.dtype}")
            if array.min() < 0 or array.max() > 255:
                raise ValueError("pixel values must lie in [0, 255]")
            array = array.astype(np.uint8)
        object.__setattr__(self, "pixels", readonly(np.array(array, order="C")))

    @classmethod
    def from_flat(cls, width: int, height: int, pixels: Iterable[int]) -> GrayImage:
        """Build an image from row-major pixel values.

        Args:
            width: Number of columns.
            height: Number of rows.
            pixels: width x height intensities, row-major.

        Returns:
            The GrayImage.
        """
        flat = np.fromiter(pixels, dtype=np.int64)
        if width < 1 or height < 1 or flat.size != width * height:
            raise ValueError(f"expected {width}x{height} pixels, got {flat.size}")
        return cls(flat.reshape(height, width))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> GrayImage:
        """Build an image from a list of rows."""
        return cls(np.asarray(rows, dtype=np.int64))

    @property
    def width(self) -> int:
        """Number of columns (N)."""
        return int(self.pixels.shape[1])

    @property
    def height(self) -> int:
        """Number of rows (M)."""
        return int(self.pixels.shape[0])

    @property
    def shape(self) -> tuple[int, int]:
        """(height, width)."""
        return (self.height, self.width)

    @property
    def size(self) -> int:
        """Pixel count."""
        return int(self.pixels.size)

    def pixel(self, i: int, j: int) -> int:
        """Intensity at row i, column j."""
        return int(self.pixels[i, j])

    def normalized(self) -> npt.NDArray[np.float64]:
        """Intensities scaled to [0, 1]."""
        return self.pixels.astype(np.float64) / 255.0

    def is_constant(self) -> bool:
        """True when every pixel has the same intensity."""
        return bool(self.pixels.min() == self.pixels.max())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GrayImage):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.pixels, other.pixels))

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        """Return a readable representation."""
        return f"GrayImage(width={self.width}, height={self.height})"


@dataclass(frozen=True, eq=False)
class Signal:
    """A finite 1-D real sequence of length >= 2.

    Attributes:
        samples: 1-D float64 array.
    """

    samples: npt.NDArray[np.float64]

    def __post_init__(self) -> None:
        array = np.asarray(self.samples, dtype=np.float64)
        if array.ndim != 1:
            raise SignalError(f"signal must be one-dimensional, got shape {array.shape}")
        if array.size < 2:
            raise SignalError(f"signal needs at least 2 samples, got {array.size}")
        if not np.all(np.isfinite(array)):
            raise SignalError("signal samples must be finite")
        object.__setattr__(self, "samples", readonly(np.array(array, order="C")))

    @property
    def length(self) -> int:
        """Number of samples (N)."""
        return int(self.samples.size)

    def __len__(self) -> int:
        """Return the number of samples."""
        return self.length

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Signal):
            return NotImplemented
        return bool(np.array_equal(self.samples, other.samples))

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        """Return a readable representation."""
        return f"Signal(length={self.length})"
