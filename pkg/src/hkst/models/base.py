"""Base models and shared numeric helpers."""

from typing import overload

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict


class HkstBaseModel(BaseModel):
    """Base model with common configuration for all hkst records."""

    model_config = ConfigDict(
        frozen=True,
        extra="forbid",
        populate_by_name=True,
    )


def readonly[T: np.generic](array: npt.NDArray[T]) -> npt.NDArray[T]:
    """Return a read-only view of an array."""
    view = array.view()
    view.setflags(write=False)
    return view


@overload
def round_half_away(value: float) -> float: ...


@overload
def round_half_away(value: npt.NDArray[np.float64]) -> npt.NDArray[np.float64]: ...


def round_half_away(value: float | npt.NDArray[np.float64]) -> float | npt.NDArray[np.float64]:
    """Round to the nearest integer, ties away from zero.

    Works on scalars and arrays; numpy's own rounding is half-to-even.
    """
    rounded = np.sign(value) * np.floor(np.abs(value) + 0.5)
    if isinstance(value, np.ndarray):
        return rounded
    return float(rounded)
