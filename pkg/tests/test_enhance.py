"""Tests for histograms and equalizers."""

import hashlib
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings

from hkst import GrayImage, PhantomKind, PhantomSpec, make_phantom
from hkst.enhance import (
    CONSTANT_IMAGE_WARNING,
    equalize,
    equalize_bhe,
    equalize_global,
    equalize_hkmdhe,
    equalize_split,
    histogram,
)
from hkst.image_io import write_pgm
from hkst.metrics import compute_moments
from hkst.models import EnhancementMethod, TransferMap
from hkst.models.base import round_half_away
from tests.goldens import FRACTAL_SEED11_SHA256
from tests.strategies import gray_images


def scripted_segment(counts: list[int], lo: int, hi: int) -> list[int]:
    """Segment LUT with exact fractions, round half up."""
    occupied = [v for v in range(lo, hi + 1) if counts[v]]
    if len(occupied) < 2:
        return list(range(lo, hi + 1))
    c_min = counts[occupied[0]]
    denominator = sum(counts[lo : hi + 1]) - c_min
    lut, cumulative = [], 0
    for v in range(lo, hi + 1):
        cumulative += counts[v]
        share = Fraction(max(cumulative - c_min, 0) * (hi - lo), denominator)
        lut.append(lo + math.floor(share + Fraction(1, 2)))
    return lut


def assert_split_invariants(transfer: TransferMap) -> None:
    lut = transfer.lut.astype(int)
    split = transfer.split_point
    assert split is not None
    assert np.all(np.diff(lut[: split + 1]) >= 0)
    assert np.all(lut[: split + 1] <= split)
    if split < 255:
        assert np.all(np.diff(lut[split + 1 :]) >= 0)
        assert np.all(lut[split + 1 :] >= split + 1)


def assert_hkmdhe_structure(image: GrayImage) -> None:
    enhanced, transfer, _ = equalize_hkmdhe(image)

    assert transfer.split_point is not None
    assert 1 <= transfer.split_point <= 254
    assert_split_invariants(transfer)
    assert enhanced.shape == image.shape
    assert histogram(enhanced).total == histogram(image).total
    np.testing.assert_array_equal(enhanced.pixels, transfer.lut[image.pixels])


class TestHistogram:
    """Tests for histogram."""

    def test_constant(self) -> None:
        """Constant 4x4 image should fill one bin."""
        hist = histogram(GrayImage(np.full((4, 4), 128, dtype=np.uint8)))

        assert hist.counts[128] == 16
        assert hist.total == 16
        assert hist.occupied().tolist() == [128]

    def test_half(self, half_image: GrayImage) -> None:
        """Half-0/half-255 should fill the two end bins."""
        hist = histogram(half_image)

        assert hist.counts[0] == hist.counts[255] == 128
        assert hist.cdf()[0] == pytest.approx(0.5)
        assert hist.cdf()[-1] == pytest.approx(1.0)

    def test_ramp(self, ramp_image: GrayImage) -> None:
        """Ramp should give one count per level."""
        assert histogram(ramp_image).to_list() == [1] * 256


class TestEqualizeGlobal:
    """Tests for equalize_global."""

    def test_cdf_min_anchoring(self) -> None:
        """[0, 0, 0, 255] should keep its endpoints."""
        image = GrayImage.from_rows([[0, 0], [0, 255]])
        enhanced, transfer = equalize_global(image)

        assert transfer.lut[0] == 0
        assert transfer.lut[255] == 255
        assert transfer.split_point is None
        assert enhanced == image

    def test_ramp_identity(self, ramp_image: GrayImage) -> None:
        """An already uniform histogram should map identically."""
        _, transfer = equalize_global(ramp_image)

        assert transfer.is_identity

    def test_constant_warns(self, constant_image: GrayImage, caplog: pytest.LogCaptureFixture) -> None:
        """Constant image should give identity plus a warning."""
        enhanced, transfer = equalize_global(constant_image)

        assert transfer.is_identity
        assert transfer.warnings == (CONSTANT_IMAGE_WARNING,)
        assert enhanced == constant_image
        assert "constant image" in caplog.text

    def test_rounds_half_up(self) -> None:
        """Exact ties should round away from zero, not to even."""
        image = GrayImage.from_flat(4, 1, [0, 1, 2, 255])

        _, transfer = equalize_split(image, 5)

        # 5 * 1/2 = 2.5 -> 3
        assert transfer.lut[1] == 3
        assert transfer.lut[2] == 5

    @given(gray_images)
    def test_monotone_and_conserving(self, image: GrayImage) -> None:
        """Global LUT is non-decreasing; pixel count is conserved."""
        enhanced, transfer = equalize_global(image)

        assert np.all(np.diff(transfer.lut.astype(int)) >= 0)
        assert histogram(enhanced).total == image.size
        assert enhanced.shape == image.shape


class TestEqualizeBhe:
    """Tests for equalize_bhe."""

    def test_half_image(self, half_image: GrayImage) -> None:
        """Mean split at 128 keeps both one-bin segments in place."""
        enhanced, transfer = equalize_bhe(half_image)

        assert transfer.split_point == 128
        assert transfer.lut[0] == 0
        assert transfer.lut[255] == 255
        assert enhanced == half_image

    def test_ramp_near_identity(self, ramp_image: GrayImage) -> None:
        """Each segment of the ramp is already uniform."""
        enhanced, _ = equalize_bhe(ramp_image)

        assert np.max(np.abs(enhanced.pixels.astype(int) - ramp_image.pixels.astype(int))) <= 1

    def test_constant_warns(self, constant_image: GrayImage) -> None:
        """Constant image should give identity plus a warning."""
        _, transfer = equalize_bhe(constant_image)

        assert transfer.is_identity
        assert CONSTANT_IMAGE_WARNING in transfer.warnings

    @given(gray_images)
    def test_segment_invariants(self, image: GrayImage) -> None:
        """Segments stay monotone and confined to their ranges."""
        _, transfer = equalize_bhe(image)

        assert_split_invariants(transfer)


class TestEqualizeHkmdhe:
    """Tests for equalize_hkmdhe."""

    def test_half_image_fixed_point(self, half_image: GrayImage) -> None:
        """Half-0/half-255 maps to itself with split point 186."""
        enhanced, transfer, moments = equalize_hkmdhe(half_image)

        assert moments.modified_mean == pytest.approx(0.728869, abs=1e-6)
        assert transfer.split_point == 186
        assert transfer.lut[0] == 0
        assert transfer.lut[255] == 255
        assert enhanced == half_image

    def test_constant_warns(self, constant_image: GrayImage) -> None:
        """Constant image: split from MM = m, identity map, warning."""
        enhanced, transfer, moments = equalize_hkmdhe(constant_image)

        assert moments.modified_mean == moments.mean
        assert transfer.split_point == 128
        assert transfer.is_identity
        assert transfer.warnings == (CONSTANT_IMAGE_WARNING,)
        assert enhanced == constant_image

    def test_matches_scripted_oracle(self, fractal_image: GrayImage) -> None:
        """Pinned fractal (seed 11, H 0.5) should match straight-line cdf arithmetic."""
        assert hashlib.sha256(write_pgm(fractal_image)).hexdigest() == FRACTAL_SEED11_SHA256

        mm = compute_moments(fractal_image).modified_mean
        split = min(max(math.floor(255 * mm + 0.5), 1), 254)
        counts = [0] * 256
        for v in fractal_image.pixels.ravel().tolist():
            counts[v] += 1
        lut = scripted_segment(counts, 0, split) + scripted_segment(counts, split + 1, 255)
        expected = [[lut[v] for v in row] for row in fractal_image.pixels.tolist()]

        enhanced, transfer, _ = equalize_hkmdhe(fractal_image)

        assert transfer.split_point == split
        assert transfer.to_list() == lut
        assert enhanced.pixels.tolist() == expected

    def test_same_as_bhe_when_split_agrees(self, half_image: GrayImage) -> None:
        """Splitting at the same point gives the same output as BHE."""
        enhanced, transfer, _ = equalize_hkmdhe(half_image)
        reference, _ = equalize_split(half_image, transfer.split_point or 0)

        assert enhanced == reference

    @settings(max_examples=500)
    @given(gray_images)
    def test_structural_invariants(self, image: GrayImage) -> None:
        """Mass conservation, segment monotonicity, range confinement, split range, dimensions."""
        assert_hkmdhe_structure(image)

    @pytest.mark.parametrize(
        "spec",
        [
            *(PhantomSpec(kind=PhantomKind.TWO_LEVEL, width=16, height=16, seed=seed) for seed in range(1, 11)),
            *(
                PhantomSpec(kind=PhantomKind.FRACTAL, width=32, height=32, hurst=hurst, seed=seed)
                for seed in range(1, 11)
                for hurst in (0.2, 0.5, 0.8)
            ),
            *(PhantomSpec(kind=PhantomKind.GRATING, width=64, height=8, period=p) for p in (2, 4, 8, 16, 32, 64)),
        ],
        ids=lambda spec: f"{spec.kind}-{spec.seed}-{spec.hurst}-{spec.period}",
    )
    def test_structural_invariants_on_phantoms(self, spec: PhantomSpec) -> None:
        """Phantom images satisfy the same structural invariants."""
        assert_hkmdhe_structure(make_phantom(spec))


class TestEqualize:
    """Tests for the equalize dispatcher and equalize_split."""

    def test_none_returns_input(self, fractal_image: GrayImage) -> None:
        """NONE should return the input and no transfer map."""
        enhanced, transfer, moments = equalize(fractal_image, EnhancementMethod.NONE)

        assert enhanced is fractal_image
        assert transfer is None
        assert moments == compute_moments(fractal_image)

    @pytest.mark.parametrize("method", [EnhancementMethod.HKMDHE, EnhancementMethod.BHE, EnhancementMethod.GLOBAL])
    def test_dispatches(self, fractal_image: GrayImage, method: EnhancementMethod) -> None:
        """Each method should return a transfer map consistent with the output."""
        enhanced, transfer, _ = equalize(fractal_image, method)

        assert transfer is not None
        assert transfer.apply(fractal_image) == enhanced

    def test_split_out_of_range(self, ramp_image: GrayImage) -> None:
        """Should reject split points outside [0, 255]."""
        with pytest.raises(ValueError, match="split point"):
            equalize_split(ramp_image, 256)

    def test_split_at_top(self, ramp_image: GrayImage) -> None:
        """Split at 255 leaves a single full-range segment."""
        _, transfer = equalize_split(ramp_image, 255)

        assert transfer.is_identity


class TestRoundHalfAway:
    """Tests for round_half_away."""

    @pytest.mark.parametrize(("value", "expected"), [(0.5, 1.0), (1.5, 2.0), (2.5, 3.0), (-0.5, -1.0), (2.49, 2.0)])
    def test_scalar_ties(self, value: float, expected: float) -> None:
        """Scalars round ties away from zero and stay plain floats."""
        result = round_half_away(value)

        assert result == expected
        assert type(result) is float

    def test_array_ties(self) -> None:
        """Arrays keep their shape and round elementwise."""
        values = np.array([[-2.5, -1.5], [0.5, 127.5]])

        result = round_half_away(values)

        assert isinstance(result, np.ndarray)
        np.testing.assert_array_equal(result, [[-3.0, -2.0], [1.0, 128.0]])
