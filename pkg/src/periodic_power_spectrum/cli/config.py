"""
Run configuration for the command-line surface.

``RunConfig`` is validated by pydantic; its field constraints mirror the
preconditions of the operations the fields feed, so a bad flag is rejected
before any input is read.
"""

import argparse
from typing import Any, Literal, Self

from pydantic import BaseModel, ConfigDict, Field, model_validator

from periodic_power_spectrum.analysis.scan import DEFAULT_THRESHOLD
from periodic_power_spectrum.sequence.schemas import AmbiguityPolicy

Command = Literal["scan", "compare", "window", "walk", "dft", "synth"]
OutputFormat = Literal["csv", "json", "tsv"]
SynthKind = Literal["fig1", "repeat", "random"]

DEFAULT_WINDOW = 60


class RunConfig(BaseModel):
    """
    Validated options of one CLI invocation.

    Attributes:
        command: Sub-command to run
        input: Input path, or "-" for standard input
        p_min: First scanned periodicity (default 2)
        p_max: Last scanned periodicity (default ceil(sqrt(2N)))
        periods: Target periodicities for compare, window and walk
        window: Sliding window length in bp
        step: Window step in bp, or walk step in motif lengths
        threshold: SNR threshold for peak detection
        peaks_only: Emit only detected peaks from a scan
        policy: Handling of residues outside {A,C,G,T}
        signal: Read the input as a real-valued signal instead of FASTA
        pad: Zero-pad to a multiple of this periodicity before a DFT
        output_format: csv, tsv or json
        out: Output path; standard output when omitted
        synth_kind: Fixture generated by the synth command
        n: Length of a generated signal or random sequence
        sigma: Noise standard deviation of the generated signal
        seed: Seed for every random draw
        motif: Repeat unit of a generated repeat fixture
        copies: Number of motif copies
        edits: Edits applied to the repeat fixture (sub:POS[:BASE], del:POS[:LEN])
        delete_tail: Number of bases deleted from the 3' end of the fixture
        log_level: Log level override for this run
    """

    model_config = ConfigDict(frozen=True, extra="ignore")

    command: Command
    input: str = "-"
    p_min: int | None = Field(default=None, ge=1)
    p_max: int | None = Field(default=None, ge=1)
    periods: tuple[int, ...] = ()
    window: int = Field(default=DEFAULT_WINDOW, ge=1)
    step: int = Field(default=1, ge=1)
    threshold: float = Field(default=DEFAULT_THRESHOLD, gt=0)
    peaks_only: bool = False
    policy: AmbiguityPolicy = AmbiguityPolicy.LENIENT
    signal: bool = False
    pad: int | None = Field(default=None, ge=1)
    output_format: OutputFormat = "csv"
    out: str | None = None
    synth_kind: SynthKind | None = None
    n: int = Field(default=300, ge=1)
    sigma: float = Field(default=0.0, ge=0)
    seed: int = 0
    motif: str = Field(default="ATCGA", min_length=1)
    copies: int = Field(default=6, ge=1)
    edits: tuple[str, ...] = ()
    delete_tail: int = Field(default=0, ge=0)
    log_level: str | None = None

    @model_validator(mode="after")
    def _check_ranges(self) -> Self:
        if self.p_min is not None and self.p_max is not None and self.p_min > self.p_max:
            msg = "invalid periodicity range"
            raise ValueError(msg)
        if any(p < 1 for p in self.periods):
            msg = "periodicities must be >= 1"
            raise ValueError(msg)
        return self

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> Self:
        """Build a config from parsed arguments (None values fall back to defaults)."""
        data: dict[str, Any] = {
            key: value for key, value in vars(args).items() if value is not None
        }
        if data.pop("strict", False):
            data["policy"] = AmbiguityPolicy.STRICT
        for key in ("periods", "edits"):
            if key in data:
                data[key] = tuple(data[key])
        return cls.model_validate(data)

    def echo(self) -> dict[str, Any]:
        """Options echoed into JSON output metadata."""
        return self.model_dump(mode="json", exclude={"out", "log_level"})
