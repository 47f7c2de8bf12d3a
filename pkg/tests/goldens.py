"""Pinned reference values recorded from the implementation."""

# SHA-256 of the PGM written for the 64x64 fractal, seed 11, H 0.5.
FRACTAL_SEED11_SHA256 = "83de0792a74c1a3ffbcd6dd6928d6b142e56df4f782556a683d25ce04fec6a6b"

# Mean AMMBE(input, equalized) over 64x64 fractals, seeds 1-30, H cycling 0.2/0.5/0.8.
FRACTAL_CORPUS_MEAN_AMMBE = {
    "hkmdhe": 0.0642086160331077,
    "global": 0.024244848419379763,
}
