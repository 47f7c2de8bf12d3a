"""Deterministic synthetic images.

Random kinds draw from numpy's PCG64 bit generator seeded through
SeedSequence(seed), consuming only its raw 64-bit outputs:
- uniform in (0, 1): ((u >> 11) + 0.5) * 2**-53;
- standard complex Gaussian: Box-Muller on two uniforms;
- fair bit: the top bit of u.
The raw stream is fixed by numpy's published PCG64 algorithm, so images are
identical across platforms and numpy versions.
"""

from __future__ import annotations

import logging
import math

import numpy as np
import numpy.typing as npt

from hkst.exceptions import PhantomSpecError
from hkst.models.base import round_half_away
from hkst.models.image import GrayImage
from hkst.models.phantom import PhantomKind, PhantomSpec

logger = logging.getLogger("hkst.phantom")

_MANTISSA_SCALE = 2.0**-53


class RawStream:
    """Seeded stream of 64-bit outputs and the variates derived from them."""

    def __init__(self, seed: int) -> None:
        self._generator = np.random.PCG64(np.random.SeedSequence(seed))

    def raw(self, size: int) -> npt.NDArray[np.uint64]:
        """Next `size` raw 64-bit outputs."""
        return np.asarray(self._generator.random_raw(size), dtype=np.uint64)

    def uniform(self, size: int) -> npt.NDArray[np.float64]:
        """Uniforms strictly inside (0, 1)."""
        return ((self.raw(size) >> np.uint64(11)).astype(np.float64) + 0.5) * _MANTISSA_SCALE

    def complex_gaussian(self, size: int) -> npt.NDArray[np.complex128]:
        """Complex values with independent standard normal parts (Box-Muller)."""
        u1 = self.uniform(size)
        u2 = self.uniform(size)
        radius = np.sqrt(-2.0 * np.log(u1))
        return radius * np.exp(2j * math.pi * u2)


def _require_kind(spec: PhantomSpec, kind: PhantomKind) -> None:
    if spec.kind is not kind:
        raise PhantomSpecError(f"expected a {kind} spec, got {spec.kind}")


def _is_power_of_two(value: int) -> bool:
    return value > 0 and value & (value - 1) == 0


def make_grating(spec: PhantomSpec) -> GrayImage:
    """Horizontal cosine grating, offset + round(amplitude * cos(2 pi j / period)).

    Raises:
        PhantomSpecError: Wrong kind, or period does not divide width.
    """
    _require_kind(spec, PhantomKind.GRATING)
    if spec.width % spec.period != 0:
        raise PhantomSpecError(f"period {spec.period} does not divide width {spec.width}")

    j = np.arange(spec.width, dtype=np.float64)
    row = spec.offset + round_half_away(spec.amplitude * np.cos(2.0 * math.pi * j / spec.period))
    return GrayImage(np.tile(row.astype(np.int64), (spec.height, 1)))


def make_two_level(spec: PhantomSpec) -> GrayImage:
    """Each pixel 0 or 255 with probability 1/2, from the seeded raw stream."""
    _require_kind(spec, PhantomKind.TWO_LEVEL)
    bits = RawStream(spec.seed).raw(spec.width * spec.height) >> np.uint64(63)
    pixels = np.where(bits == 1, 255, 0).reshape(spec.height, spec.width)
    return GrayImage(pixels)


def make_fractal(spec: PhantomSpec) -> GrayImage:
    """Spectral-synthesis rough surface with roughness knob `hurst`.

    Complex white noise is shaped by (kx^2 + ky^2)^(-(H + 1) / 2) with a zero
    DC term, inverse transformed, and the real part rescaled affinely so the
    darkest pixel is 0 and the brightest 255. Larger H gives a smoother
    surface.

    Raises:
        PhantomSpecError: Wrong kind, or dimensions not powers of two.
    """
    _require_kind(spec, PhantomKind.FRACTAL)
    if not (_is_power_of_two(spec.width) and _is_power_of_two(spec.height)):
        raise PhantomSpecError(f"fractal dimensions must be powers of two, got {spec.width}x{spec.height}")

    ky = np.rint(np.fft.fftfreq(spec.height) * spec.height)
    kx = np.rint(np.fft.fftfreq(spec.width) * spec.width)
    radius2 = ky[:, None] ** 2 + kx[None, :] ** 2
    radius2[0, 0] = 1.0
    shaping = radius2 ** (-(spec.hurst + 1.0) / 2.0)
    shaping[0, 0] = 0.0

    noise = RawStream(spec.seed).complex_gaussian(spec.width * spec.height).reshape(spec.height, spec.width)
    field = np.fft.ifft2(noise * shaping).real

    low, high = float(field.min()), float(field.max())
    if high == low:
        raise PhantomSpecError(f"fractal of size {spec.width}x{spec.height} has no variation")
    pixels = round_half_away(255.0 * (field - low) / (high - low))
    logger.debug("Fractal %dx%d H=%.3f seed=%d", spec.width, spec.height, spec.hurst, spec.seed)
    return GrayImage(pixels.astype(np.int64))


def make_phantom(spec: PhantomSpec) -> GrayImage:
    """Generate the image described by `spec`."""
    match spec.kind:
        case PhantomKind.GRATING:
            return make_grating(spec)
        case PhantomKind.TWO_LEVEL:
            return make_two_level(spec)
        case PhantomKind.FRACTAL:
            return make_fractal(spec)
