"""Image and signal ingestion/emission.

Binary PGM (P5, maxval 255) is the only raster format. Signals travel as
two-column CSV (`index,value`); spectra as `tau,voice,re,im,abs` CSV.
"""

from __future__ import annotations

import csv
import io
import logging
from pathlib import Path

import numpy as np
import numpy.typing as npt

from hkst.exceptions import (
    PGMHeaderError,
    SignalError,
    SignalFormatError,
    TruncatedPayloadError,
    UnsupportedMaxvalError,
)
from hkst.models.image import GrayImage, Signal
from hkst.models.spectrum import AmplitudeSpectrum, STSpectrum

logger = logging.getLogger("hkst.image_io")

PGM_MAGIC = b"P5"
PGM_MAXVAL = 255
_WHITESPACE = b" \t\n\r\v\f"

SIGNAL_HEADER = ("index", "value")
SPECTRUM_HEADER = ("tau", "voice", "re", "im", "abs")
FLOAT_FORMAT = "%.17g"


def _skip_whitespace_and_comments(data: bytes, pos: int) -> int:
    """Advance past whitespace and '#' comments (comments run to end of line)."""
    while pos < len(data):
        byte = data[pos : pos + 1]
        if byte == b"#":
            end = data.find(b"\n", pos)
            pos = len(data) if end == -1 else end + 1
        elif byte in _WHITESPACE:
            pos += 1
        else:
            break
    return pos


def _read_header_int(data: bytes, pos: int, name: str) -> tuple[int, int, int]:
    """Read one decimal header field.

    Returns:
        Tuple of (value, start offset, offset just past the digits).
    """
    pos = _skip_whitespace_and_comments(data, pos)
    start = pos
    while pos < len(data) and data[pos : pos + 1].isdigit():
        pos += 1
    if pos == start:
        raise PGMHeaderError(f"expected {name} in PGM header", start)
    return int(data[start:pos]), start, pos


def read_pgm(data: bytes) -> GrayImage:
    """Decode a binary PGM (P5, maxval 255).

    Args:
        data: The complete file contents.

    Returns:
        GrayImage with the exact stored pixel values.

    Raises:
        PGMHeaderError: Bad magic number or header fields.
        UnsupportedMaxvalError: maxval other than 255.
        TruncatedPayloadError: Fewer than width x height raster bytes.
    """
    if data[:2] != PGM_MAGIC:
        raise PGMHeaderError("not a binary PGM (magic P5 expected)", 0)
    if len(data) < 3 or data[2:3] not in _WHITESPACE:
        raise PGMHeaderError("expected whitespace after magic P5", 2)

    width, width_at, pos = _read_header_int(data, 2, "width")
    height, height_at, pos = _read_header_int(data, pos, "height")
    maxval, maxval_at, pos = _read_header_int(data, pos, "maxval")

    if width < 1:
        raise PGMHeaderError(f"width must be positive, got {width}", width_at)
    if height < 1:
        raise PGMHeaderError(f"height must be positive, got {height}", height_at)
    if maxval != PGM_MAXVAL:
        raise UnsupportedMaxvalError(f"unsupported maxval {maxval}", maxval_at)
    if pos >= len(data) or data[pos : pos + 1] not in _WHITESPACE:
        raise PGMHeaderError("expected single whitespace after maxval", pos)
    pos += 1

    expected = width * height
    available = len(data) - pos
    if available < expected:
        raise TruncatedPayloadError(
            f"truncated payload: {available} of {expected} raster bytes", len(data)
        )
    if available > expected:
        logger.debug("Ignoring %d trailing bytes after PGM raster", available - expected)

    pixels = np.frombuffer(data, dtype=np.uint8, count=expected, offset=pos)
    return GrayImage(pixels.reshape(height, width))


def write_pgm(image: GrayImage) -> bytes:
    """Encode an image as binary PGM (P5, maxval 255)."""
    header = f"P5\n{image.width} {image.height}\n{PGM_MAXVAL}\n".encode("ascii")
    return header + image.pixels.tobytes()


def load_pgm(path: str | Path) -> GrayImage:
    """Read a PGM file from disk."""
    logger.debug("Reading PGM %s", path)
    return read_pgm(Path(path).read_bytes())


def save_pgm(image: GrayImage, path: str | Path) -> None:
    """Write a PGM file to disk."""
    logger.debug("Writing PGM %s (%dx%d)", path, image.width, image.height)
    Path(path).write_bytes(write_pgm(image))


def unfold_raster(image: GrayImage) -> Signal:
    """Unfold an image into one signal, row-major, without normalization."""
    return Signal(image.pixels.ravel().astype(np.float64))


def unfold_rows(image: GrayImage) -> list[Signal]:
    """Unfold an image into one horizontal signal per row.

    Raises:
        SignalError: Rows shorter than 2 samples.
    """
    if image.width < 2:
        raise SignalError("row too short for spectral analysis")
    return [Signal(row.astype(np.float64)) for row in image.pixels]


def read_signal_csv(text: str | bytes) -> Signal:
    """Parse an `index,value` CSV into a Signal.

    Rows may appear in any order; indices must be exactly 0..N-1. Raw bytes
    are decoded as UTF-8.

    Raises:
        SignalFormatError: Undecodable bytes (offset is the byte position),
            empty file, wrong header, unparsable rows, index gaps.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise SignalFormatError("signal CSV is not valid UTF-8", e.start) from e
    reader = csv.reader(io.StringIO(text))
    rows = [row for row in reader if row and any(cell.strip() for cell in row)]
    if not rows:
        raise SignalFormatError("empty signal CSV", 1)
    header = tuple(cell.strip() for cell in rows[0])
    if header != SIGNAL_HEADER:
        raise SignalFormatError(f"expected header 'index,value', got {','.join(header)!r}", 1)

    values: dict[int, float] = {}
    for line_number, row in enumerate(rows[1:], start=2):
        if len(row) != 2:
            raise SignalFormatError(f"expected 2 columns, got {len(row)}", line_number)
        try:
            index, value = int(row[0]), float(row[1])
        except ValueError as e:
            raise SignalFormatError(f"unparsable row {row!r}", line_number) from e
        if index in values:
            raise SignalFormatError(f"duplicate index {index}", line_number)
        values[index] = value

    if sorted(values) != list(range(len(values))):
        raise SignalFormatError("indices must run 0..N-1 without gaps", len(rows))
    try:
        return Signal(np.array([values[i] for i in range(len(values))]))
    except SignalError as e:
        raise SignalFormatError(str(e), len(rows)) from e


def write_signal_csv(signal: Signal) -> str:
    """Serialize a Signal as `index,value` CSV."""
    lines = [",".join(SIGNAL_HEADER)]
    lines.extend(f"{k},{FLOAT_FORMAT % v}" for k, v in enumerate(signal.samples))
    return "\n".join(lines) + "\n"


def _spectrum_rows(
    re: npt.NDArray[np.float64],
    im: npt.NDArray[np.float64],
    magnitude: npt.NDArray[np.float64],
) -> str:
    n_time, n_voices = magnitude.shape
    lines = [",".join(SPECTRUM_HEADER)]
    for j in range(n_time):
        for n in range(n_voices):
            cells = (FLOAT_FORMAT % re[j, n], FLOAT_FORMAT % im[j, n], FLOAT_FORMAT % magnitude[j, n])
            lines.append(f"{j},{n}," + ",".join(cells))
    return "\n".join(lines) + "\n"


def write_spectrum_csv(spectrum: STSpectrum) -> str:
    """Serialize a complex spectrum, one row per (tau, voice)."""
    values = spectrum.values
    return _spectrum_rows(values.real, values.imag, np.abs(values))


def write_amplitude_csv(amplitude: AmplitudeSpectrum) -> str:
    """Serialize an amplitude spectrum in the spectrum CSV layout (re = abs, im = 0)."""
    magnitudes = amplitude.magnitudes
    return _spectrum_rows(magnitudes, np.zeros_like(magnitudes), magnitudes)
