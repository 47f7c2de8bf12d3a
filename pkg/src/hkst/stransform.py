"""Discrete Stockwell (S-) transform.

Conventions:
- the forward DFT carries the 1/N factor, X[n] = (1/N) sum_k x[k] e^{-i2pi nk/N};
- S[j, n] = sum_m X[(m + n) mod N] exp(-2pi^2 m^2 / nu^2) e^{+i2pi mj/N}, with
  m over the centered range -floor(N/2) <= m < ceil(N/2) and nu the signed
  alias of voice n in that same range;
- voice 0 is the signal mean for every j.

`st_forward` is the FFT evaluator. `st_direct_freq` and `st_direct_time`
evaluate the frequency-domain definition and the Gaussian-windowed Fourier
kernel term by term and serve as oracles.
"""

from __future__ import annotations

import logging
import math

import numpy as np
import numpy.typing as npt

from hkst.exceptions import SignalError, SpectrumError
from hkst.models.image import Signal
from hkst.models.spectrum import AmplitudeSpectrum, STMethod, STSpectrum

logger = logging.getLogger("hkst.stransform")

# Relative tolerance of st_inverse on the imaginary residue and the DC voice.
INVERSE_TOLERANCE = 1e-9


def voice_frequencies(n_samples: int) -> npt.NDArray[np.int64]:
    """Signed frequency of each voice in cycles per record.

    Voices above N/2 are the negative frequencies n - N; the result is in
    FFT order, e.g. [0, 1, 2, -1] for N = 4.

    Raises:
        SignalError: n_samples < 2.
    """
    if n_samples < 2:
        raise SignalError(f"signal needs at least 2 samples, got {n_samples}")
    return np.rint(np.fft.fftfreq(n_samples) * n_samples).astype(np.int64)


def _samples(signal: Signal, mean_removal: bool) -> npt.NDArray[np.float64]:
    x = signal.samples
    return x - x.mean() if mean_removal else x


def _gaussian(frequencies: npt.NDArray[np.int64], voice: int) -> npt.NDArray[np.float64]:
    """Frequency-domain window exp(-2pi^2 m^2 / nu^2)."""
    return np.exp(-2.0 * math.pi**2 * frequencies.astype(np.float64) ** 2 / float(voice) ** 2)


def st_forward(signal: Signal, mean_removal: bool = False) -> STSpectrum:
    """S-transform by one FFT plus one inverse FFT per voice.

    Args:
        signal: Input of length N >= 2.
        mean_removal: Subtract the signal mean first.

    Returns:
        N x N STSpectrum.
    """
    x = _samples(signal, mean_removal)
    n = x.size
    spectrum = np.fft.fft(x) / n
    frequencies = voice_frequencies(n)

    values = np.empty((n, n), dtype=np.complex128)
    values[:, 0] = x.mean()
    for voice in range(1, n):
        shifted = spectrum[(frequencies + voice) % n]
        values[:, voice] = n * np.fft.ifft(shifted * _gaussian(frequencies, int(frequencies[voice])))
    logger.debug("S-transform of %d samples (mean_removal=%s)", n, mean_removal)
    return STSpectrum(values)


def st_direct_freq(signal: Signal, mean_removal: bool = False) -> STSpectrum:
    """Term-by-term evaluation of the frequency-domain definition (no FFT).

    O(N^3); meant for N up to a few hundred.
    """
    x = _samples(signal, mean_removal)
    n = x.size
    k = np.arange(n, dtype=np.int64)
    frequencies = voice_frequencies(n)

    # Phases reduced modulo N as integers keep the kernels exact in k * m.
    dft = np.exp(-2j * math.pi * (np.outer(k, k) % n) / n)
    spectrum = dft @ x / n
    kernel = np.exp(2j * math.pi * (np.outer(k, frequencies) % n) / n)

    values = np.empty((n, n), dtype=np.complex128)
    values[:, 0] = x.mean()
    for voice in range(1, n):
        shifted = spectrum[(frequencies + voice) % n]
        values[:, voice] = kernel @ (shifted * _gaussian(frequencies, int(frequencies[voice])))
    return STSpectrum(values)


def st_direct_time(signal: Signal, mean_removal: bool = False) -> STSpectrum:
    """Time-domain evaluation with a Gaussian window and Fourier phase kernel.

    S[j, n] = sum_k x[k] (f/sqrt(2pi)) exp(-d(j, k)^2 f^2 / 2) e^{-i2pi nk/N},
    with f = |nu|/N cycles per sample and d the minimal circular distance.
    Agrees with st_forward only up to the aliasing of the sampled window,
    which is small for voices well inside (0, N/2) and large for n near 1.
    """
    x = _samples(signal, mean_removal)
    n = x.size
    k = np.arange(n, dtype=np.int64)
    frequencies = voice_frequencies(n)

    distance = np.abs(k[:, None] - k[None, :])
    distance = np.minimum(distance, n - distance).astype(np.float64)

    values = np.empty((n, n), dtype=np.complex128)
    values[:, 0] = x.mean()
    for voice in range(1, n):
        f = abs(int(frequencies[voice])) / n
        window = f / math.sqrt(2.0 * math.pi) * np.exp(-(distance**2) * f**2 / 2.0)
        phase = np.exp(-2j * math.pi * ((voice * k) % n) / n)
        values[:, voice] = window @ (x * phase)
    return STSpectrum(values)


def transform(signal: Signal, method: STMethod = STMethod.FORWARD, mean_removal: bool = False) -> STSpectrum:
    """Run the selected evaluator."""
    match method:
        case STMethod.FORWARD:
            return st_forward(signal, mean_removal)
        case STMethod.DIRECT_FREQ:
            return st_direct_freq(signal, mean_removal)
        case STMethod.DIRECT_TIME:
            return st_direct_time(signal, mean_removal)


def time_marginal(spectrum: STSpectrum) -> npt.NDArray[np.complex128]:
    """(1/N) sum_j S[j, n] for every voice; equals the 1/N-normalized DFT."""
    return spectrum.values.mean(axis=0)


def st_inverse(spectrum: STSpectrum) -> Signal:
    """Recover the signal through the time-marginal identity.

    Raises:
        SpectrumError: Voice 0 is not constant in time, or the reconstruction
            has an imaginary residue above 1e-9 of its max-norm.
    """
    values = spectrum.values
    n = spectrum.n_time

    dc = values[:, 0]
    dc_spread = float(np.max(np.abs(dc - dc[0])))
    if dc_spread > INVERSE_TOLERANCE * max(1.0, float(np.max(np.abs(dc)))):
        raise SpectrumError(f"non-physical spectrum: voice 0 varies in time by {dc_spread:.3g}")

    x = n * np.fft.ifft(time_marginal(spectrum))
    residue = float(np.max(np.abs(x.imag)))
    if residue > INVERSE_TOLERANCE * max(1.0, float(np.max(np.abs(x)))):
        raise SpectrumError(f"non-physical spectrum: imaginary residue {residue:.3g}")
    return Signal(x.real)


def amplitude(spectrum: STSpectrum) -> AmplitudeSpectrum:
    """Entrywise magnitude |S[j, n]|."""
    return AmplitudeSpectrum(np.abs(spectrum.values))


def phase(spectrum: STSpectrum) -> npt.NDArray[np.float64]:
    """Entrywise phase angle of S[j, n] in (-pi, pi]."""
    return np.angle(spectrum.values)
