"""Intensity histogram and transfer-map containers."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from hkst.models.base import readonly
from hkst.models.image import GrayImage

LEVELS = 256


@dataclass(frozen=True, eq=False)
class Histogram:
    """Pixel counts per intensity level.

    Attributes:
        counts: 256 non-negative integers.
    """

    counts: npt.NDArray[np.int64]

    def __post_init__(self) -> None:
        array = np.asarray(self.counts, dtype=np.int64)
        if array.shape != (LEVELS,):
            raise ValueError(f"histogram needs {LEVELS} bins, got shape {array.shape}")
        if np.any(array < 0):
            raise ValueError("histogram counts must be non-negative")
        object.__setattr__(self, "counts", readonly(array.copy()))

    @property
    def total(self) -> int:
        """Pixel count of the source image."""
        return int(self.counts.sum())

    def cdf(self) -> npt.NDArray[np.float64]:
        """Cumulative distribution over the 256 levels (last entry 1)."""
        return np.cumsum(self.counts) / self.total

    def occupied(self) -> npt.NDArray[np.intp]:
        """Intensity levels with a non-zero count."""
        return np.flatnonzero(self.counts)

    def to_list(self) -> list[int]:
        """Counts as plain ints (JSON friendly)."""
        return [int(c) for c in self.counts]

    def __repr__(self) -> str:
        """Return a readable representation."""
        return f"Histogram(total={self.total}, occupied={self.occupied().size})"


@dataclass(frozen=True, eq=False)
class TransferMap:
    """A 256-entry intensity remapping produced by an equalizer.

    Attributes:
        lut: Output intensity for each input level.
        split_point: Upper bound of the lower segment, or None for global HE.
        warnings: Degenerate-input notices (e.g. constant image).
    """

    lut: npt.NDArray[np.uint8]
    split_point: int | None = None
    warnings: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        array = np.asarray(self.lut)
        if array.shape != (LEVELS,):
            raise ValueError(f"transfer map needs {LEVELS} entries, got shape {array.shape}")
        if array.min() < 0 or array.max() > 255:
            raise ValueError("transfer map entries must lie in [0, 255]")
        if self.split_point is not None and not 0 <= self.split_point <= 255:
            raise ValueError(f"split point {self.split_point} outside [0, 255]")
        object.__setattr__(self, "lut", readonly(array.astype(np.uint8)))

    @classmethod
    def identity(cls, split_point: int | None = None, warnings: tuple[str, ...] = ()) -> TransferMap:
        """The map v -> v."""
        return cls(np.arange(LEVELS), split_point=split_point, warnings=warnings)

    @property
    def is_identity(self) -> bool:
        """True when the map leaves every level unchanged."""
        return bool(np.array_equal(self.lut, np.arange(LEVELS)))

    def apply(self, image: GrayImage) -> GrayImage:
        """Remap every pixel of an image through the table."""
        return GrayImage(self.lut[image.pixels])

    def to_list(self) -> list[int]:
        """Entries as plain ints (JSON friendly)."""
        return [int(v) for v in self.lut]

    def __repr__(self) -> str:
        """Return a readable representation."""
        return f"TransferMap(split_point={self.split_point}, identity={self.is_identity})"
