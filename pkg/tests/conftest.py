"""Pytest configuration and fixtures."""

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from hkst import GrayImage, PhantomKind, PhantomSpec, make_phantom

settings.register_profile("default", max_examples=50, deadline=None)
settings.register_profile("ci", max_examples=300, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture
def half_image() -> GrayImage:
    """16x16 image, top half 0, bottom half 255."""
    pixels = np.zeros((16, 16), dtype=np.uint8)
    pixels[8:] = 255
    return GrayImage(pixels)


@pytest.fixture
def constant_image() -> GrayImage:
    """8x8 image, every pixel 128."""
    return GrayImage(np.full((8, 8), 128, dtype=np.uint8))


@pytest.fixture
def ramp_image() -> GrayImage:
    """16x16 image holding every level 0..255 exactly once."""
    return GrayImage(np.arange(256).reshape(16, 16))


@pytest.fixture
def grating_spec() -> PhantomSpec:
    """64x64 grating, period 8, amplitude 100, offset 128."""
    return PhantomSpec(kind=PhantomKind.GRATING, width=64, height=64, period=8, amplitude=100, offset=128)


@pytest.fixture
def grating_image(grating_spec: PhantomSpec) -> GrayImage:
    """The grating described by grating_spec."""
    return make_phantom(grating_spec)


@pytest.fixture
def fractal_image() -> GrayImage:
    """64x64 fractal, seed 11, H = 0.5."""
    return make_phantom(PhantomSpec(kind=PhantomKind.FRACTAL, width=64, height=64, hurst=0.5, seed=11))
