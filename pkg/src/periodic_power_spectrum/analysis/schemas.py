"""
Schema Definitions for Periodicity Analyses

Result types of whole-sequence scans, peak detection, sliding windows and
DNA walks, plus the edit description used by the repeat fixture generator.
"""

import re
from dataclasses import dataclass
from typing import Literal, Self

from periodic_power_spectrum.exceptions import InvalidEditError

_EDIT_PATTERN = re.compile(r"^(sub|del):(\d+)(?::([A-Za-z]|\d+))?$")


@dataclass(frozen=True)
class SpectrumEntry:
    p: int
    power: float
    snr: float


@dataclass(frozen=True)
class PeriodicitySpectrum:
    """
    PPS power and SNR for every periodicity of a scan range.

    Attributes:
        sequence_id: Identifier of the analysed sequence or signal
        length: Sequence length N
        entries: One entry per periodicity, ascending by p
        p_min: First periodicity scanned
        p_max: Last periodicity scanned
    """

    sequence_id: str
    length: int
    entries: tuple[SpectrumEntry, ...]
    p_min: int
    p_max: int

    def power_at(self, p: int) -> float:
        if not self.p_min <= p <= self.p_max:
            msg = f"periodicity {p} outside scanned range [{self.p_min}, {self.p_max}]"
            raise KeyError(msg)
        return self.entries[p - self.p_min].power

    def top(self, k: int) -> list[SpectrumEntry]:
        """Entries with the k largest powers; ties go to the smaller p."""
        return sorted(self.entries, key=lambda entry: (-entry.power, entry.p))[:k]


@dataclass(frozen=True)
class Peak:
    p: int
    snr: float
    local_maximum: bool


@dataclass(frozen=True)
class PeakReport:
    """
    Periodicities whose SNR reaches the threshold, ascending by p.

    Attributes:
        sequence_id: Identifier of the analysed sequence
        threshold: SNR threshold the peaks were selected with
        peaks: Selected periodicities
    """

    sequence_id: str
    threshold: float
    peaks: tuple[Peak, ...]

    @property
    def periods(self) -> list[int]:
        return [peak.p for peak in self.peaks]


@dataclass(frozen=True)
class WindowPoint:
    start: int
    power: float
    snr: float


@dataclass(frozen=True)
class WindowProfile:
    """
    SNR at one periodicity inside each sliding window.

    Window starts are 0, step, 2*step, ... with start + window <= N; each SNR
    is normalised by the window length.
    """

    sequence_id: str
    p: int
    window: int
    step: int
    points: tuple[WindowPoint, ...]


@dataclass(frozen=True)
class WalkPoint:
    prefix_length: int
    power: float


@dataclass(frozen=True)
class WalkProfile:
    """
    PPS of growing prefixes [0, L); prefix lengths increase strictly and end at N.
    """

    sequence_id: str
    p: int
    step: int
    points: tuple[WalkPoint, ...]


@dataclass(frozen=True)
class Edit:
    """
    A deterministic edit applied to a repeat fixture.

    Attributes:
        kind: "substitute" replaces one residue, "delete" removes a run
        position: 0-based position in the sequence as left by earlier edits
        base: Replacement base; None draws a different base from the seeded RNG
        length: Number of residues removed by a deletion
    """

    kind: Literal["substitute", "delete"]
    position: int
    base: str | None = None
    length: int = 1

    @classmethod
    def substitute(cls, position: int, base: str | None = None) -> Self:
        return cls(kind="substitute", position=position, base=base)

    @classmethod
    def delete(cls, position: int, length: int = 1) -> Self:
        return cls(kind="delete", position=position, length=length)

    @classmethod
    def parse(cls, text: str) -> Self:
        """
        Parse ``sub:POS[:BASE]`` or ``del:POS[:LEN]``.

        Raises:
            InvalidEditError: If the text does not match either form
        """
        match = _EDIT_PATTERN.match(text.strip())
        if match is None:
            msg = f"malformed edit '{text}'; expected sub:POS[:BASE] or del:POS[:LEN]"
            raise InvalidEditError(msg)
        kind, position, extra = match.groups()
        if kind == "sub":
            if extra is not None and extra.isdigit():
                msg = f"substitution base must be a letter, got '{extra}'"
                raise InvalidEditError(msg)
            return cls.substitute(int(position), extra.upper() if extra else None)
        if extra is not None and not extra.isdigit():
            msg = f"deletion length must be an integer, got '{extra}'"
            raise InvalidEditError(msg)
        return cls.delete(int(position), int(extra) if extra else 1)
