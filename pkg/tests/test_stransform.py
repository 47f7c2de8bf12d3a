"""Tests for the discrete S-transform."""

import cmath
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hkst import Signal
from hkst.exceptions import SignalError, SpectrumError
from hkst.models import STMethod, STSpectrum
from hkst.stransform import (
    amplitude,
    phase,
    st_direct_freq,
    st_direct_time,
    st_forward,
    st_inverse,
    time_marginal,
    transform,
    voice_frequencies,
)
from tests.strategies import finite_floats, signals


def random_signal(seed: int, n: int) -> Signal:
    return Signal(np.random.default_rng(seed).standard_normal(n))


def cosine(cycles: int, n: int) -> Signal:
    return Signal(np.array([math.cos(2 * math.pi * cycles * k / n) for k in range(n)]))


def grating_row(n: int = 256, period: int = 8) -> Signal:
    """Normalized, mean-removed grating row (amplitude 100, offset 128)."""
    row = [128 + math.floor(100 * math.cos(2 * math.pi * j / period) + 0.5) for j in range(n)]
    values = [v / 255 for v in row]
    mean = sum(values) / n
    return Signal(np.array([v - mean for v in values]))


def dft(x: list[float]) -> list[complex]:
    """1/N-normalized DFT by direct summation."""
    n = len(x)
    return [sum(x[k] * cmath.exp(-2j * math.pi * m * k / n) for k in range(n)) / n for m in range(n)]


class TestVoiceFrequencies:
    """Tests for voice_frequencies."""

    def test_even(self) -> None:
        """Voices above N/2 are negative."""
        assert voice_frequencies(4).tolist() == [0, 1, -2, -1]

    def test_odd(self) -> None:
        """Odd N has a symmetric range."""
        assert voice_frequencies(5).tolist() == [0, 1, 2, -2, -1]

    def test_too_short(self) -> None:
        """Should reject N < 2."""
        with pytest.raises(SignalError):
            voice_frequencies(1)


class TestStForward:
    """Tests for st_forward."""

    @pytest.mark.parametrize("n", [8, 16, 33, 64])
    def test_constant_signal(self, n: int) -> None:
        """Voice 0 is the constant; other voices only keep the e^-2pi^2 alias."""
        c = 3.0
        spectrum = st_forward(Signal(np.full(n, c)))

        np.testing.assert_allclose(spectrum.values[:, 0], c, rtol=1e-15)
        assert np.max(np.abs(spectrum.values[:, 1:])) <= 3e-9 * abs(c)

    def test_cosine_voice(self) -> None:
        """cos(2 pi 2k/16) puts amplitude 0.5 on voice 2 at every j."""
        spectrum = st_forward(cosine(2, 16))

        np.testing.assert_allclose(np.abs(spectrum.voice(2)), 0.5, atol=1e-6)

    @pytest.mark.parametrize("n", [8, 64, 256, 1024])
    def test_time_marginal_identity(self, n: int) -> None:
        """Mean over time of every voice is the 1/N-normalized DFT."""
        for seed in range(25):
            x = random_signal(seed, n)
            expected = np.fft.fft(x.samples) / n
            marginal = time_marginal(st_forward(x))

            assert np.max(np.abs(marginal - expected)) <= 1e-12 * np.max(np.abs(expected))

    def test_time_marginal_matches_scalar_dft(self) -> None:
        """Seed 5, N = 64, against a straight-line DFT."""
        x = random_signal(5, 64)
        expected = np.array(dft(x.samples.tolist()))

        np.testing.assert_allclose(time_marginal(st_forward(x)), expected, atol=1e-12)

    def test_linearity(self) -> None:
        """ST(a x + b y) == a ST(x) + b ST(y)."""
        x, y = random_signal(1, 64), random_signal(2, 64)
        a, b = 1.7, -0.4
        combined = st_forward(Signal(a * x.samples + b * y.samples)).values

        np.testing.assert_allclose(combined, a * st_forward(x).values + b * st_forward(y).values, atol=1e-10)

    @pytest.mark.parametrize("shift", [1, 5, 17])
    def test_shift_covariance(self, shift: int) -> None:
        """Circular input shift moves every voice's time axis by the same amount."""
        x = random_signal(9, 64)
        shifted = st_forward(Signal(np.roll(x.samples, shift)))
        n = np.arange(64)

        expected = np.exp(-2j * np.pi * n * shift / 64)[None, :] * np.roll(st_forward(x).values, shift, axis=0)
        np.testing.assert_allclose(shifted.values, expected, atol=1e-9)
        np.testing.assert_allclose(
            amplitude(shifted).magnitudes, np.roll(amplitude(st_forward(x)).magnitudes, shift, axis=0), atol=1e-9
        )

    def test_mean_removal(self) -> None:
        """Mean removal zeroes voice 0; other voices only lose the DC alias term."""
        x = Signal(random_signal(4, 32).samples + 10.0)
        plain = st_forward(x)
        removed = st_forward(x, mean_removal=True)

        np.testing.assert_allclose(removed.values[:, 0], 0.0, atol=1e-12)
        np.testing.assert_allclose(removed.values[:, 1:], plain.values[:, 1:], atol=1e-7)


class TestStDirectFreq:
    """Tests for st_direct_freq."""

    def test_constant_signal(self) -> None:
        """Should match st_forward on a constant."""
        x = Signal(np.full(16, 2.5))

        np.testing.assert_allclose(st_direct_freq(x).values, st_forward(x).values, atol=1e-12)

    def test_cosine(self) -> None:
        """Should match st_forward on the cosine within 1e-9."""
        x = cosine(2, 16)

        np.testing.assert_allclose(st_direct_freq(x).values, st_forward(x).values, atol=1e-9)

    @pytest.mark.parametrize("n", [8, 32, 64])
    def test_matches_forward(self, n: int) -> None:
        """50 seeds agree with the FFT evaluator within 1e-9."""
        for seed in range(50):
            x = random_signal(seed, n)
            difference = np.max(np.abs(st_direct_freq(x).values - st_forward(x).values))
            assert difference <= 1e-9

    def test_time_marginal_identity(self) -> None:
        """Direct evaluation also satisfies the marginal identity."""
        x = random_signal(12, 32)

        np.testing.assert_allclose(time_marginal(st_direct_freq(x)), np.fft.fft(x.samples) / 32, atol=1e-12)


class TestStDirectTime:
    """Tests for st_direct_time."""

    def test_constant_voice_zero(self) -> None:
        """Voice 0 of a constant is exactly the mean."""
        x = Signal(np.full(8, 3.0))
        spectrum = st_direct_time(x)

        assert np.all(spectrum.values[:, 0] == 3.0)

    @pytest.mark.parametrize("signal", [cosine(16, 256), grating_row()], ids=["cosine", "grating"])
    def test_agrees_in_validated_band(self, signal: Signal) -> None:
        """Voices 4..N/8 at N = 256 agree with st_forward within 1e-3."""
        direct = st_direct_time(signal).values[:, 4:33]
        fast = st_forward(signal).values[:, 4:33]

        assert np.max(np.abs(direct - fast)) <= 1e-3

    def test_coarse_window_is_computed(self) -> None:
        """N = 8, voice 1 lies outside the validated band; only shape is checked."""
        spectrum = st_direct_time(random_signal(0, 8))

        assert spectrum.values.shape == (8, 8)
        assert np.all(np.isfinite(spectrum.values))


class TestStInverse:
    """Tests for st_inverse."""

    @pytest.mark.parametrize("n", [8, 64, 256, 1024])
    def test_round_trip(self, n: int) -> None:
        """st_inverse(st_forward(x)) reproduces x within 1e-9."""
        for seed in range(10):
            x = random_signal(seed, n)
            np.testing.assert_allclose(st_inverse(st_forward(x)).samples, x.samples, atol=1e-9)

    def test_constant(self) -> None:
        """Constant c comes back as c."""
        recovered = st_inverse(st_forward(Signal(np.full(16, -4.0))))

        np.testing.assert_allclose(recovered.samples, -4.0, atol=1e-12)

    def test_non_constant_voice_zero(self) -> None:
        """A DC voice varying in time is not a physical spectrum."""
        values = np.zeros((4, 4), dtype=complex)
        values[:, 0] = [1, 2, 3, 4]

        with pytest.raises(SpectrumError, match="non-physical spectrum"):
            st_inverse(STSpectrum(values))

    def test_imaginary_residue(self) -> None:
        """A lone positive-frequency voice reconstructs a complex signal."""
        values = np.zeros((8, 8), dtype=complex)
        values[:, 1] = 1.0

        with pytest.raises(SpectrumError, match="non-physical spectrum"):
            st_inverse(STSpectrum(values))

    @given(signals(min_size=2, max_size=48))
    def test_round_trip_property(self, x: Signal) -> None:
        """Round trip holds for arbitrary finite signals."""
        scale = max(1.0, float(np.max(np.abs(x.samples))))

        np.testing.assert_allclose(st_inverse(st_forward(x)).samples, x.samples, atol=1e-9 * scale)


class TestAmplitudeAndPhase:
    """Tests for amplitude, phase and transform."""

    def test_zero_spectrum(self) -> None:
        """Zero spectrum has zero amplitude."""
        assert not amplitude(STSpectrum(np.zeros((4, 4)))).magnitudes.any()

    def test_cosine_column(self) -> None:
        """Cosine example: column 2 is about 0.5 everywhere."""
        magnitudes = amplitude(st_forward(cosine(2, 16))).magnitudes

        np.testing.assert_allclose(magnitudes[:, 2], 0.5, atol=1e-6)

    def test_phase_reconstructs(self) -> None:
        """amplitude * exp(i phase) reproduces the spectrum."""
        spectrum = st_forward(random_signal(3, 16))
        rebuilt = amplitude(spectrum).magnitudes * np.exp(1j * phase(spectrum))

        np.testing.assert_allclose(rebuilt, spectrum.values, atol=1e-12)

    @pytest.mark.parametrize("method", list(STMethod))
    def test_transform_dispatch(self, method: STMethod) -> None:
        """Every evaluator keeps voice 0 at the mean."""
        x = random_signal(6, 16)
        spectrum = transform(x, method)

        np.testing.assert_allclose(spectrum.values[:, 0], x.samples.mean(), atol=1e-12)

    @given(st.lists(finite_floats, min_size=2, max_size=32))
    def test_amplitude_non_negative(self, values: list[float]) -> None:
        """Amplitudes are never negative."""
        assert np.all(amplitude(st_forward(Signal(np.array(values)))).magnitudes >= 0)
