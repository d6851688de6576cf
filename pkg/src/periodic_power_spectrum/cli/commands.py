"""
Command implementations behind the ``pps`` entry point.

Each ``cmd_*`` method reads its sources, runs the analysis and returns the
rendered output text; the entry point decides where the text goes.
"""

from typing import Any

import structlog

from periodic_power_spectrum.analysis import (
    Edit,
    default_p_max,
    detect_peaks,
    dna_walk,
    random_sequence,
    scan,
    sliding_window,
    synth_fig1,
    synth_repeat,
)
from periodic_power_spectrum.cli.config import RunConfig
from periodic_power_spectrum.cli.emit import SIGNAL_FORMAT, Table, encode
from periodic_power_spectrum.exceptions import InvalidEditError, InvalidParameterError
from periodic_power_spectrum.sequence import (
    ChannelSource,
    DnaSequence,
    format_fasta,
    parse_fasta,
    parse_signal,
    read_source,
    voss_map,
)
from periodic_power_spectrum.transform import (
    candidate_bins,
    channel_power,
    nearest_bin,
    pps,
    zero_pad_to_multiple,
)

logger = structlog.get_logger(__name__)


class CommandRunner:
    """
    Runs one configured command and renders its output.

    Attributes:
        config: Validated options of the run
    """

    def __init__(self, config: RunConfig) -> None:
        self.config = config
        self.logger = logger.bind(command=config.command)
        self._sources: list[ChannelSource] = []

    def run(self) -> str:
        match self.config.command:
            case "scan":
                return self.cmd_scan()
            case "compare":
                return self.cmd_compare()
            case "window":
                return self.cmd_window()
            case "walk":
                return self.cmd_walk()
            case "dft":
                return self.cmd_dft()
            case "synth":
                return self.cmd_synth()

    def load_sources(self) -> list[ChannelSource]:
        """
        Read the configured input as a real signal or as FASTA records.

        Raises:
            OSError: If the input cannot be read
        """
        data = read_source(self.config.input)
        if self.config.signal:
            sources: list[ChannelSource] = [parse_signal(data)]
        else:
            sequences = parse_fasta(
                data, self.config.policy, source_name=self.config.input
            )
            sources = [voss_map(seq, self.config.policy) for seq in sequences]
        self.logger.debug("sources_loaded", records=len(sources), input=self.config.input)
        self._sources = sources
        return sources

    def _meta(self, sequences: list[dict[str, Any]] | None = None) -> dict[str, Any]:
        if sequences is None:
            sequences = [{"id": src.id, "n": src.length} for src in self._sources]
        return {
            "command": self.config.command,
            "config": self.config.echo(),
            "sequences": sequences,
        }

    def _render(self, table: Table, sequences: list[dict[str, Any]] | None = None) -> str:
        return encode(table, self.config.output_format, self._meta(sequences))

    def _periods(self) -> tuple[int, ...]:
        if not self.config.periods:
            msg = f"{self.config.command} needs at least one --p"
            raise InvalidParameterError(msg)
        return self.config.periods

    def scan_range(self, n: int) -> tuple[int, int]:
        """Scan range for a sequence of length n, filling unset bounds."""
        p_min = self.config.p_min if self.config.p_min is not None else min(2, n)
        p_max = self.config.p_max
        if p_max is None:
            p_max = min(max(default_p_max(n), p_min), n)
        return p_min, p_max

    def cmd_scan(self) -> str:
        """Rows ``p,power,snr`` for every periodicity of the scan range."""
        table = Table(columns=("p", "power", "snr"))
        for source in self.load_sources():
            spectrum = scan(source, *self.scan_range(source.length))
            entries = spectrum.entries
            if self.config.peaks_only:
                report = detect_peaks(spectrum, self.config.threshold)
                wanted = set(report.periods)
                entries = tuple(entry for entry in entries if entry.p in wanted)
            for entry in entries:
                table.add(source.id, p=entry.p, power=entry.power, snr=entry.snr)
        return self._render(table)

    def cmd_compare(self) -> str:
        """
        PPS beside the padded and unpadded DFT power at the bins around N/p.

        One row per candidate unpadded bin; ``nearest`` marks the bin closest
        to N/p and ``leakage`` marks periodicities that do not divide N.
        """
        table = Table(
            columns=(
                "p",
                "pps",
                "padded_n",
                "padded_bin",
                "padded_dft",
                "bin",
                "dft",
                "nearest",
                "leakage",
            )
        )
        periods = self._periods()
        for source in self.load_sources():
            n = source.length
            spectrum = channel_power(source)
            for p in periods:
                power = pps(source, p)
                padded = zero_pad_to_multiple(source, p)
                padded_bin = padded.length // p
                padded_dft = channel_power(padded).at(padded_bin)
                closest = nearest_bin(n, p)
                for k in candidate_bins(n, p):
                    table.add(
                        source.id,
                        p=p,
                        pps=power,
                        padded_n=padded.length,
                        padded_bin=padded_bin,
                        padded_dft=padded_dft,
                        bin=k,
                        dft=spectrum.at(k),
                        nearest=int(k == closest),
                        leakage=int(n % p != 0),
                    )
        return self._render(table)

    def cmd_window(self) -> str:
        """Rows ``p,start,snr`` ordered by window start, then by p."""
        table = Table(columns=("p", "start", "snr"))
        periods = self._periods()
        for source in self.load_sources():
            profiles = [
                sliding_window(source, p, self.config.window, self.config.step)
                for p in periods
            ]
            for points in zip(*(profile.points for profile in profiles), strict=True):
                for profile, point in zip(profiles, points, strict=True):
                    table.add(source.id, p=profile.p, start=point.start, snr=point.snr)
        return self._render(table)

    def cmd_walk(self) -> str:
        """Rows ``p,prefix_len,power``, one block per periodicity."""
        table = Table(columns=("p", "prefix_len", "power"))
        periods = self._periods()
        for source in self.load_sources():
            for p in periods:
                profile = dna_walk(source, p, self.config.step)
                for point in profile.points:
                    table.add(
                        source.id, p=p, prefix_len=point.prefix_length, power=point.power
                    )
        return self._render(table)

    def cmd_dft(self) -> str:
        """Rows ``k,period,power`` for k = 1..N/2 of the Fourier power spectrum."""
        table = Table(columns=("k", "period", "power"))
        sequences: list[dict[str, Any]] = []
        for source in self.load_sources():
            target = source
            if self.config.pad is not None:
                target = zero_pad_to_multiple(source, self.config.pad)
            spectrum = channel_power(target)
            n = spectrum.length
            sequences.append({"id": source.id, "n": n})
            for k in range(1, n // 2 + 1):
                table.add(source.id, k=k, period=n / k, power=spectrum.at(k))
        return self._render(table, sequences)

    def cmd_synth(self) -> str:
        """Synthetic fixtures: the two-tone signal as a table, sequences as FASTA."""
        config = self.config
        match config.synth_kind:
            case "fig1":
                signal = synth_fig1(config.n, config.sigma, config.seed)
                table = Table(columns=("n", "value"), float_format=SIGNAL_FORMAT)
                for index, value in enumerate(signal.samples.tolist(), start=1):
                    table.add(signal.id, n=index, value=value)
                return self._render(table, [{"id": signal.id, "n": signal.length}])
            case "repeat":
                motif = DnaSequence(id=config.motif.upper(), residues=config.motif)
                motif.ensure_strict()
                edits = [Edit.parse(text) for text in config.edits]
                seq = synth_repeat(motif, config.copies, edits, config.seed)
                seq = self._delete_tail(seq)
            case "random":
                seq = random_sequence(config.n, config.seed)
            case None:
                msg = "synth needs a kind: fig1, repeat or random"
                raise InvalidParameterError(msg)
        self.logger.debug("synth_sequence", sequence_id=seq.id, length=seq.length)
        return format_fasta([seq])

    def _delete_tail(self, seq: DnaSequence) -> DnaSequence:
        tail = self.config.delete_tail
        if tail == 0:
            return seq
        if tail >= seq.length:
            msg = f"cannot delete {tail} bases from a {seq.length} bp sequence"
            raise InvalidEditError(msg)
        return DnaSequence(id=seq.id, residues=seq.residues[:-tail])
