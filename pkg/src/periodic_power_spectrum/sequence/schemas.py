"""
Schema Definitions for Sequence Inputs

This module defines the immutable input types of the toolkit: validated DNA
sequences, their Voss indicator channels, and real-valued signals. Both
``IndicatorSet`` and ``RealSignal`` expose their samples as a read-only
channel matrix (channels x N) so that every spectrum kernel can treat a DNA
sequence as four channels and a real signal as one.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Final, Protocol, Self, runtime_checkable

import numpy as np
from numpy.typing import NDArray

from periodic_power_spectrum.exceptions import (
    EmptyRecordError,
    InvalidParameterError,
    InvalidResidueError,
    InvalidSignalError,
)

NUCLEOTIDES: Final[tuple[str, ...]] = ("A", "T", "C", "G")
ACGT: Final[frozenset[str]] = frozenset(NUCLEOTIDES)


def _frozen(values: NDArray[np.float64]) -> NDArray[np.float64]:
    array = np.array(values, dtype=np.float64, copy=True)
    array.flags.writeable = False
    return array


class AmbiguityPolicy(str, Enum):
    """
    How residues outside {A,C,G,T} are treated.

    Attributes:
        STRICT: Reject the sequence with InvalidResidueError
        LENIENT: Keep the residue; its indicator column is all zeros
            (U is read as T)
    """

    STRICT = "strict"
    LENIENT = "lenient"


@runtime_checkable
class ChannelSource(Protocol):
    """Anything the spectrum kernels can analyse: an id and a channel matrix"""

    @property
    def id(self) -> str: ...

    @property
    def length(self) -> int: ...

    @property
    def matrix(self) -> NDArray[np.float64]: ...

    def window(self, start: int, stop: int) -> Self: ...

    def padded(self, length: int) -> Self: ...


@dataclass(frozen=True)
class DnaSequence:
    """
    A validated nucleotide sequence with its provenance.

    Attributes:
        id: Record identifier (FASTA header up to the first whitespace)
        residues: Uppercase residue string
        source: File the record was read from, if any
    """

    id: str
    residues: str
    source: str | None = None

    def __post_init__(self) -> None:
        if not self.residues:
            raise EmptyRecordError(self.id)
        upper = self.residues.upper()
        if upper != self.residues:
            object.__setattr__(self, "residues", upper)

    @property
    def length(self) -> int:
        return len(self.residues)

    def ensure_strict(self) -> None:
        """Raise InvalidResidueError at the first residue outside {A,C,G,T}."""
        for position, char in enumerate(self.residues):
            if char not in ACGT:
                raise InvalidResidueError(position, char)

    def __len__(self) -> int:
        return len(self.residues)


@dataclass(frozen=True, eq=False)
class IndicatorSet:
    """
    The four 0/1 Voss indicator channels of a sequence.

    Rows of ``matrix`` follow ``NUCLEOTIDES`` (A, T, C, G). A column is all
    zeros where the residue is not one of the four nucleotides.

    Attributes:
        id: Identifier of the sequence the channels were built from
        matrix: Read-only array of shape (4, N)
    """

    id: str
    matrix: NDArray[np.float64] = field(repr=False)

    def __post_init__(self) -> None:
        matrix = _frozen(self.matrix)
        if matrix.ndim != 2 or matrix.shape[0] != len(NUCLEOTIDES):  # noqa: PLR2004
            msg = f"indicator matrix must have shape (4, N), got {matrix.shape}"
            raise InvalidParameterError(msg)
        if matrix.shape[1] < 1:
            raise EmptyRecordError(self.id)
        object.__setattr__(self, "matrix", matrix)

    @property
    def length(self) -> int:
        return int(self.matrix.shape[1])

    @property
    def channels(self) -> dict[str, NDArray[np.float64]]:
        """Map each nucleotide to its indicator vector."""
        return dict(zip(NUCLEOTIDES, self.matrix, strict=True))

    @property
    def counts(self) -> dict[str, int]:
        """Number of occurrences of each nucleotide."""
        return {
            symbol: int(total)
            for symbol, total in zip(NUCLEOTIDES, self.matrix.sum(axis=1), strict=True)
        }

    def decode(self) -> str:
        """Rebuild the residue string (argmax per column, "N" for empty columns)."""
        symbols = np.array(NUCLEOTIDES)[self.matrix.argmax(axis=0)]
        symbols[self.matrix.sum(axis=0) == 0] = "N"
        return "".join(symbols.tolist())

    def window(self, start: int, stop: int) -> "IndicatorSet":
        return IndicatorSet(id=self.id, matrix=self.matrix[:, start:stop])

    def padded(self, length: int) -> "IndicatorSet":
        extra = max(length - self.length, 0)
        if extra == 0:
            return self
        return IndicatorSet(id=self.id, matrix=np.pad(self.matrix, ((0, 0), (0, extra))))


@dataclass(frozen=True, eq=False)
class RealSignal:
    """
    A finite real-valued signal.

    Attributes:
        samples: Read-only 1-D array of length N >= 1
        id: Label used in reports
    """

    samples: NDArray[np.float64] = field(repr=False)
    id: str = "signal"

    def __post_init__(self) -> None:
        samples = _frozen(np.ravel(self.samples))
        if samples.size < 1:
            msg = "signal has no samples"
            raise InvalidSignalError(msg)
        if not np.all(np.isfinite(samples)):
            msg = "signal contains non-finite values"
            raise InvalidSignalError(msg)
        object.__setattr__(self, "samples", samples)

    @property
    def length(self) -> int:
        return int(self.samples.size)

    @property
    def matrix(self) -> NDArray[np.float64]:
        return self.samples[np.newaxis, :]

    def window(self, start: int, stop: int) -> "RealSignal":
        return RealSignal(samples=self.samples[start:stop], id=self.id)

    def padded(self, length: int) -> "RealSignal":
        extra = max(length - self.length, 0)
        if extra == 0:
            return self
        return RealSignal(samples=np.pad(self.samples, (0, extra)), id=self.id)

    def __len__(self) -> int:
        return self.length
