"""Pydantic model for synthetic phantom parameters."""

from enum import StrEnum
from typing import Self

from pydantic import Field, model_validator

from hkst.models.base import HkstBaseModel

MAX_SEED = 2**64 - 1


class PhantomKind(StrEnum):
    """Synthetic image families."""

    GRATING = "grating"
    TWO_LEVEL = "two_level"
    FRACTAL = "fractal"


class PhantomSpec(HkstBaseModel):
    """Parameters of a deterministic synthetic image.

    Only the fields relevant to `kind` are used: period/amplitude/offset for
    gratings, hurst for fractals, seed for the random kinds.
    """

    kind: PhantomKind
    width: int = Field(ge=1)
    height: int = Field(ge=1)
    period: int = Field(default=8, ge=1)
    amplitude: int = Field(default=100, ge=0, le=127)
    offset: int = Field(default=128, ge=0, le=255)
    hurst: float = Field(default=0.5, gt=0.0, lt=1.0)
    seed: int = Field(default=0, ge=0, le=MAX_SEED)

    @model_validator(mode="after")
    def _check_grating_range(self) -> Self:
        if self.kind is not PhantomKind.GRATING:
            return self
        if self.offset - self.amplitude < 0 or self.offset + self.amplitude > 255:
            raise ValueError(
                f"grating offset {self.offset} +/- amplitude {self.amplitude} leaves [0, 255]"
            )
        return self
