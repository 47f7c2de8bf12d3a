"""S-transform spectrum containers."""

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum

import numpy as np
import numpy.typing as npt

from hkst.exceptions import SpectrumError
from hkst.models.base import readonly


class STMethod(StrEnum):
    """S-transform evaluator."""

    FORWARD = "forward"
    DIRECT_FREQ = "direct-freq"
    DIRECT_TIME = "direct-time"


@dataclass(frozen=True, eq=False)
class STSpectrum:
    """Complex time-frequency matrix S[j, n].

    Row index j is the time shift (tau), column index n the voice in cycles
    per record. Voices above N/2 are the negative frequencies n - N.

    Attributes:
        values: N x N complex matrix.
    """

    values: npt.NDArray[np.complex128]

    def __post_init__(self) -> None:
        array = np.asarray(self.values, dtype=np.complex128)
        if array.ndim != 2 or array.shape[0] != array.shape[1] or array.shape[0] < 2:
            raise SpectrumError(f"spectrum must be a square N x N matrix with N >= 2, got {array.shape}")
        object.__setattr__(self, "values", readonly(np.array(array, order="C")))

    @property
    def n_time(self) -> int:
        """Number of time shifts (N)."""
        return int(self.values.shape[0])

    @property
    def n_voices(self) -> int:
        """Number of voices (N)."""
        return int(self.values.shape[1])

    def voice(self, n: int) -> npt.NDArray[np.complex128]:
        """Time series of voice n."""
        return self.values[:, n]

    def __repr__(self) -> str:
        """Return a readable representation."""
        return f"STSpectrum(n={self.n_time})"


@dataclass(frozen=True, eq=False)
class AmplitudeSpectrum:
    """Entrywise magnitude |S[j, n]|.

    Attributes:
        magnitudes: N x N non-negative real matrix.
    """

    magnitudes: npt.NDArray[np.float64]

    def __post_init__(self) -> None:
        array = np.asarray(self.magnitudes, dtype=np.float64)
        if array.ndim != 2:
            raise SpectrumError(f"amplitude spectrum must be 2-D, got shape {array.shape}")
        if np.any(array < 0) or not np.all(np.isfinite(array)):
            raise SpectrumError("amplitudes must be finite and non-negative")
        object.__setattr__(self, "magnitudes", readonly(np.array(array, order="C")))

    @property
    def n_time(self) -> int:
        """Number of time shifts."""
        return int(self.magnitudes.shape[0])

    @property
    def n_voices(self) -> int:
        """Number of voices."""
        return int(self.magnitudes.shape[1])

    def time_mean(self) -> npt.NDArray[np.float64]:
        """Mean amplitude of each voice over time."""
        return self.magnitudes.mean(axis=0)

    def time_peak(self) -> npt.NDArray[np.float64]:
        """Maximum amplitude of each voice over time."""
        return self.magnitudes.max(axis=0)

    def __repr__(self) -> str:
        """Return a readable representation."""
        return f"AmplitudeSpectrum(shape={self.magnitudes.shape})"
