"""
Entry point of the ``pps`` command.

Exit codes: 0 on success, 2 when input cannot be read or is empty, 3 when
input or options fail validation. Failures print a single ``error: ...`` line
on standard error.
"""

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import NoReturn, get_args, override

import pydantic
import structlog

from periodic_power_spectrum.cli.commands import CommandRunner
from periodic_power_spectrum.cli.config import OutputFormat, RunConfig, SynthKind
from periodic_power_spectrum.exceptions import (
    InputError,
    InvalidParameterError,
    PeriodicityError,
)
from periodic_power_spectrum.logs import configure_logging
from periodic_power_spectrum.settings import settings

logger = structlog.get_logger(__name__)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_VALIDATION = 3


class ArgumentParser(argparse.ArgumentParser):
    """Parser whose usage errors surface as validation failures."""

    @override
    def error(self, message: str) -> NoReturn:
        raise InvalidParameterError(message)


def _output_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        dest="output_format",
        choices=get_args(OutputFormat),
        help="output encoding (default: csv)",
    )
    parser.add_argument("--out", help="write output to this path instead of stdout")
    parser.add_argument("--log-level", dest="log_level", help="log level for this run")


def _input_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "input", nargs="?", default="-", help='FASTA or plain sequence file, "-" for stdin'
    )
    parser.add_argument(
        "--strict", action="store_true", help="reject residues outside A, C, G, T"
    )
    parser.add_argument(
        "--signal", action="store_true", help="read a real-valued signal instead of FASTA"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = ArgumentParser(
        prog="pps", description="Periodic power spectrum analysis of DNA and signals."
    )
    commands = parser.add_subparsers(dest="command", required=True)

    io_parent = ArgumentParser(add_help=False)
    _input_options(io_parent)
    _output_options(io_parent)

    periods_parent = ArgumentParser(add_help=False)
    periods_parent.add_argument(
        "--p",
        dest="periods",
        action="append",
        type=int,
        help="target periodicity (repeatable)",
    )

    scan = commands.add_parser(
        "scan", parents=[io_parent], help="PPS spectrum over a periodicity range"
    )
    scan.add_argument("--pmin", dest="p_min", type=int, help="first periodicity (default 2)")
    scan.add_argument(
        "--pmax", dest="p_max", type=int, help="last periodicity (default ceil(sqrt(2N)))"
    )
    scan.add_argument("--threshold", type=float, help="SNR threshold for --peaks")
    scan.add_argument(
        "--peaks", dest="peaks_only", action="store_true", help="emit detected peaks only"
    )

    commands.add_parser(
        "compare",
        parents=[io_parent, periods_parent],
        help="PPS beside padded and unpadded DFT power",
    )

    window = commands.add_parser(
        "window", parents=[io_parent, periods_parent], help="sliding-window SNR profile"
    )
    window.add_argument("--window", type=int, help="window length in bp (default 60)")
    window.add_argument("--step", type=int, help="window step in bp (default 1)")

    walk = commands.add_parser(
        "walk", parents=[io_parent, periods_parent], help="PPS of growing prefixes"
    )
    walk.add_argument("--step", type=int, help="prefix growth in multiples of p")

    dft = commands.add_parser(
        "dft", parents=[io_parent], help="Fourier power spectrum, k = 1..N/2"
    )
    dft.add_argument("--pad", type=int, help="zero-pad to a multiple of this periodicity")

    synth = commands.add_parser("synth", help="generate test signals and sequences")
    synth.add_argument("synth_kind", choices=get_args(SynthKind))
    _output_options(synth)
    synth.add_argument("--n", type=int, help="signal or random sequence length")
    synth.add_argument("--sigma", type=float, help="Gaussian noise deviation (fig1)")
    synth.add_argument("--seed", type=int, help="random seed")
    synth.add_argument("--motif", help="repeat unit (default ATCGA)")
    synth.add_argument("--copies", type=int, help="number of motif copies")
    synth.add_argument(
        "--edit",
        dest="edits",
        action="append",
        help="sub:POS[:BASE] or del:POS[:LEN], applied in order",
    )
    synth.add_argument(
        "--delete-tail", dest="delete_tail", type=int, help="bases removed from the end"
    )
    return parser


def _validation_message(exc: pydantic.ValidationError) -> str:
    error = exc.errors()[0]
    message = str(error["msg"]).removeprefix("Value error, ")
    location = ".".join(str(part) for part in error["loc"])
    return f"{location}: {message}" if location else message


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    Path(out).write_text(text, encoding="utf-8")


def _fail(code: int, message: str) -> int:
    sys.stderr.write(f"error: {message}\n")
    return code


def main(argv: Sequence[str] | None = None) -> int:
    """Run the ``pps`` command line and return its exit code."""
    configure_logging(settings.log_level, json=settings.log_json)
    try:
        args = build_parser().parse_args(argv)
        if args.log_level:
            configure_logging(args.log_level, json=settings.log_json)
        config = RunConfig.from_args(args)
        text = CommandRunner(config).run()
        _emit(text, config.out)
    except pydantic.ValidationError as exc:
        logger.debug("invalid_options", exc_info=True)
        return _fail(EXIT_VALIDATION, _validation_message(exc))
    except InputError as exc:
        logger.debug("input_failed", exc_info=True)
        return _fail(EXIT_INPUT, str(exc))
    except PeriodicityError as exc:
        logger.debug("validation_failed", exc_info=True)
        return _fail(EXIT_VALIDATION, str(exc))
    except (OSError, UnicodeError) as exc:
        logger.debug("io_failed", exc_info=True)
        return _fail(EXIT_INPUT, str(exc))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
