"""Command-line front end.

Exit codes: 0 success, 2 unreadable or malformed input, 3 dimension
mismatch, 4 size limit, 64 usage or invalid parameters.
"""

from __future__ import annotations

import argparse
import hashlib
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import NoReturn

from pydantic import ValidationError

from hkst import __version__
from hkst.enhance import equalize, histogram
from hkst.exceptions import (
    FormatError,
    PhantomSpecError,
    ShapeMismatchError,
    SignalError,
    SizeLimitError,
    SpectrumError,
    ZeroSignalError,
)
from hkst.image_io import read_pgm, read_signal_csv, write_amplitude_csv, write_pgm, write_spectrum_csv
from hkst.metrics import quality_report
from hkst.models.enhancement import EnhancementReport
from hkst.models.histogram import TransferMap
from hkst.models.manifest import RunManifest
from hkst.models.phantom import PhantomKind, PhantomSpec
from hkst.models.pipeline import EnhancementMethod, PipelineConfig, UnfoldMode
from hkst.models.quality import BetaNormalization
from hkst.models.spectrum import STMethod
from hkst.phantom import make_phantom
from hkst.pipeline import Pipeline
from hkst.stransform import transform

logger = logging.getLogger("hkst.cli")

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_SHAPE = 3
EXIT_SIZE = 4
EXIT_USAGE = 64

GRATING_FLAGS = ("period", "amplitude", "offset")


class UsageParser(argparse.ArgumentParser):
    """ArgumentParser that exits with the usage code 64 instead of 2."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class RunRecord:
    """Inputs read and outputs written by one command, for the manifest."""

    def __init__(self, argv: Sequence[str]) -> None:
        self.argv = list(argv)
        self.inputs: dict[str, str] = {}
        self.outputs: list[str] = []

    def read_bytes(self, path: str) -> bytes:
        data = Path(path).read_bytes()
        self.inputs[path] = hashlib.sha256(data).hexdigest()
        return data

    def write_bytes(self, path: str, data: bytes) -> None:
        Path(path).write_bytes(data)
        self.outputs.append(path)

    def write_text(self, path: str | None, text: str) -> None:
        """Write to `path`, or to standard output when it is None."""
        if path is None:
            sys.stdout.write(text)
            return
        self.write_bytes(path, text.encode("utf-8"))

    def manifest(self) -> RunManifest:
        return RunManifest(
            tool_version=__version__,
            command_line=self.argv,
            input_digests=self.inputs,
            outputs=self.outputs,
        )


def _size(value: str) -> tuple[int, int]:
    """Parse WxH."""
    width, sep, height = value.lower().partition("x")
    if not sep or not width.isdigit() or not height.isdigit():
        raise argparse.ArgumentTypeError(f"expected WxH, got {value!r}")
    return int(width), int(height)


def cmd_enhance(args: argparse.Namespace, record: RunRecord) -> int:
    """Equalize a PGM and optionally write the JSON report."""
    image = read_pgm(record.read_bytes(args.input))
    enhanced, transfer, moments = equalize(image, args.method, args.beta_normalization)
    if transfer is None:
        transfer = TransferMap.identity()
    record.write_bytes(args.output, write_pgm(enhanced))

    if args.report:
        report = EnhancementReport(
            method=args.method,
            split_point=transfer.split_point,
            lut=transfer.to_list(),
            quality=quality_report(image, enhanced, args.beta_normalization),
            moments=moments,
            warnings=list(transfer.warnings),
            input_histogram=histogram(image).to_list(),
            output_histogram=histogram(enhanced).to_list(),
        )
        record.write_text(args.report, report.model_dump_json(indent=2) + "\n")
    return EXIT_OK


def cmd_metrics(args: argparse.Namespace, record: RunRecord) -> int:
    """Compare two PGMs and emit a QualityReport."""
    reference = read_pgm(record.read_bytes(args.reference))
    test = read_pgm(record.read_bytes(args.test))
    report = quality_report(reference, test, args.beta_normalization)
    record.write_text(args.out, report.model_dump_json(indent=2) + "\n")
    return EXIT_OK


def cmd_stx(args: argparse.Namespace, record: RunRecord) -> int:
    """S-transform a signal CSV into a spectrum CSV."""
    signal = read_signal_csv(record.read_bytes(args.input))
    spectrum = transform(signal, args.method, mean_removal=args.mean_removal)
    record.write_text(args.out, write_spectrum_csv(spectrum))
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace, record: RunRecord) -> int:
    """Run the analysis pipeline on a PGM."""
    image = read_pgm(record.read_bytes(args.input))
    config = PipelineConfig(
        unfold_mode=args.mode,
        mean_removal=args.mean_removal,
        enhancement=args.enhancement,
        beta_normalization=args.beta_normalization,
        workers=args.workers,
    )
    with Pipeline(config) as pipeline:
        result = pipeline.run(image, label=args.label)
    record.write_text(args.out, result.report.model_dump_json(indent=2) + "\n")
    if args.spectrum_csv:
        record.write_text(args.spectrum_csv, write_amplitude_csv(result.aggregated))
    return EXIT_OK


def cmd_phantom(args: argparse.Namespace, record: RunRecord) -> int:
    """Generate a deterministic phantom PGM."""
    kind = PhantomKind(args.kind.replace("-", "_"))
    given = {name: getattr(args, name) for name in (*GRATING_FLAGS, "hurst") if getattr(args, name) is not None}
    if kind is not PhantomKind.GRATING and any(name in given for name in GRATING_FLAGS):
        raise PhantomSpecError(f"--period/--amplitude/--offset only apply to gratings, not {args.kind}")
    if kind is not PhantomKind.FRACTAL and "hurst" in given:
        raise PhantomSpecError(f"--hurst only applies to fractals, not {args.kind}")

    width, height = args.size
    spec = PhantomSpec(kind=kind, width=width, height=height, seed=args.seed, **given)
    image = make_phantom(spec)
    record.write_bytes(args.out, write_pgm(image))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    """Build the `hkst` argument parser."""
    common = UsageParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", help="log debug output to stderr")
    common.add_argument("--manifest", metavar="JSON", help="write a run manifest")

    beta = UsageParser(add_help=False)
    beta.add_argument(
        "--beta-normalization",
        type=BetaNormalization,
        choices=list(BetaNormalization),
        default=BetaNormalization.SIGMA,
        help="hyper-kurtosis denominator (default: sigma)",
    )

    parser = UsageParser(prog="hkst", description="HKMDHE enhancement and S-transform analysis.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    enhance = commands.add_parser("enhance", parents=[common, beta], help="equalize a PGM")
    enhance.add_argument("--input", required=True, metavar="PGM")
    enhance.add_argument("--output", required=True, metavar="PGM")
    enhance.add_argument(
        "--method",
        type=EnhancementMethod,
        choices=[m for m in EnhancementMethod if m is not EnhancementMethod.NONE],
        default=EnhancementMethod.HKMDHE,
    )
    enhance.add_argument("--report", metavar="JSON")
    enhance.set_defaults(handler=cmd_enhance)

    metrics = commands.add_parser("metrics", parents=[common, beta], help="RMSE, PSNR and AMMBE of two PGMs")
    metrics.add_argument("--reference", required=True, metavar="PGM")
    metrics.add_argument("--test", required=True, metavar="PGM")
    metrics.add_argument("--out", metavar="JSON", help="default: standard output")
    metrics.set_defaults(handler=cmd_metrics)

    stx = commands.add_parser("stx", parents=[common], help="S-transform a signal CSV")
    stx.add_argument("--input", required=True, metavar="CSV")
    stx.add_argument("--out", required=True, metavar="CSV")
    stx.add_argument("--no-mean-removal", dest="mean_removal", action="store_false")
    stx.add_argument("--method", type=STMethod, choices=list(STMethod), default=STMethod.FORWARD)
    stx.set_defaults(handler=cmd_stx)

    analyze = commands.add_parser("analyze", parents=[common, beta], help="run the analysis pipeline")
    analyze.add_argument("--input", required=True, metavar="PGM")
    analyze.add_argument("--mode", type=UnfoldMode, choices=list(UnfoldMode), default=UnfoldMode.ROWS)
    analyze.add_argument(
        "--enhancement", type=EnhancementMethod, choices=list(EnhancementMethod), default=EnhancementMethod.HKMDHE
    )
    analyze.add_argument("--no-mean-removal", dest="mean_removal", action="store_false")
    analyze.add_argument("--workers", type=int, default=1)
    analyze.add_argument("--label")
    analyze.add_argument("--out", metavar="JSON", help="default: standard output")
    analyze.add_argument("--spectrum-csv", metavar="CSV", help="aggregated amplitude spectrum")
    analyze.set_defaults(handler=cmd_analyze)

    phantom = commands.add_parser("phantom", parents=[common], help="generate a synthetic PGM")
    phantom.add_argument("--kind", required=True, choices=["grating", "two-level", "fractal"])
    phantom.add_argument("--size", required=True, type=_size, metavar="WxH")
    phantom.add_argument("--seed", type=int, default=0)
    phantom.add_argument("--period", type=int)
    phantom.add_argument("--amplitude", type=int)
    phantom.add_argument("--offset", type=int)
    phantom.add_argument("--hurst", type=float)
    phantom.add_argument("--out", required=True, metavar="PGM")
    phantom.set_defaults(handler=cmd_phantom)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Run the CLI and return its exit code."""
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    handler: Callable[[argparse.Namespace, RunRecord], int] = args.handler
    record = RunRecord(["hkst", *argv])

    try:
        code = handler(args, record)
    except ShapeMismatchError as e:
        logger.error("%s", e)
        return EXIT_SHAPE
    except SizeLimitError as e:
        logger.error("%s", e)
        return EXIT_SIZE
    except (PhantomSpecError, ValidationError) as e:
        logger.error("invalid parameters: %s", e)
        return EXIT_USAGE
    except (FormatError, SignalError, SpectrumError, ZeroSignalError, OSError) as e:
        logger.error("%s", e)
        return EXIT_INPUT

    if args.manifest:
        Path(args.manifest).write_text(record.manifest().model_dump_json(indent=2) + "\n", encoding="utf-8")
    return code


def run() -> None:
    """Console-script entry point."""
    sys.exit(main())
