"""
FASTA and Signal Text I/O

This module turns raw input bytes into the toolkit's input types. FASTA text
(one or more ``>``-headed records) is split into records with Biopython's
``SimpleFastaParser``, which skips any preamble before the first header; text
with no header at all is read as a single record. Records are written back with
Biopython's ``FastaWriter``. Real-valued signals are read with pandas from
one-number-per-line text or from a CSV whose last column holds the values.

Example:
    ```python
    records = parse_fasta(b">x\\nACGT\\n")
    signal = parse_signal(b"n,value\\n1,0.5\\n2,0.25\\n")
    ```
"""

import io
import re
import sys
from pathlib import Path
from typing import BinaryIO

import numpy as np
import pandas as pd
import structlog
from Bio.Seq import Seq
from Bio.SeqIO.FastaIO import FastaWriter, SimpleFastaParser
from Bio.SeqRecord import SeqRecord

from periodic_power_spectrum.exceptions import (
    EmptyInputError,
    InvalidParameterError,
    InvalidSignalError,
)
from periodic_power_spectrum.sequence.schemas import (
    AmbiguityPolicy,
    DnaSequence,
    RealSignal,
)

logger = structlog.get_logger(__name__)

_NON_RESIDUE = re.compile(r"[\s\d]+")
_HEADER_LINE = re.compile(r"^>", re.MULTILINE)
_LETTER = re.compile(r"[A-Za-z]")
HEADERLESS_ID = "seq1"


def read_source(path: str) -> bytes:
    """
    Read raw bytes from a file path, or from standard input when path is "-".

    Raises:
        OSError: If the file cannot be read
    """
    if path == "-":
        return sys.stdin.buffer.read()
    return Path(path).read_bytes()


def _as_text(source: bytes | str | BinaryIO) -> str:
    if isinstance(source, str):
        return source
    data = source if isinstance(source, bytes) else source.read()
    return data.decode("utf-8", errors="replace")


def _clean(raw: str) -> str:
    return _NON_RESIDUE.sub("", raw).upper()


def _records(text: str) -> list[tuple[str, str]]:
    if _HEADER_LINE.search(text) is None:
        return [(HEADERLESS_ID, text)]
    # lines before the first header are dropped by the parser
    records: list[tuple[str, str]] = []
    for index, (title, raw) in enumerate(SimpleFastaParser(io.StringIO(text)), start=1):
        words = title.split(maxsplit=1)
        records.append((words[0] if words else f"seq{index}", raw))
    return records


def parse_fasta(
    source: bytes | str | BinaryIO,
    policy: AmbiguityPolicy = AmbiguityPolicy.LENIENT,
    source_name: str | None = None,
) -> list[DnaSequence]:
    """
    Parse FASTA or headerless sequence text into validated sequences.

    Whitespace and digits are stripped, residues are uppercased, and record ids
    are taken from the header up to the first whitespace ("seq1" for headerless
    input). Both \\n and \\r\\n line endings are accepted.

    Args:
        source: Raw bytes, text, or a binary stream
        policy: STRICT rejects residues outside {A,C,G,T}
        source_name: File the input came from, kept as provenance

    Returns:
        list[DnaSequence]: One sequence per record, in input order

    Raises:
        EmptyInputError: If the input is empty or whitespace only
        EmptyRecordError: If a record has no residues
        InvalidResidueError: Under STRICT policy, for any non-ACGT residue
    """
    text = _as_text(source)
    if not text.strip():
        raise EmptyInputError
    sequences: list[DnaSequence] = []
    for record_id, raw in _records(text):
        seq = DnaSequence(id=record_id, residues=_clean(raw), source=source_name)
        if policy is AmbiguityPolicy.STRICT:
            seq.ensure_strict()
        sequences.append(seq)
    logger.debug(
        "parsed_fasta",
        source=source_name,
        records=len(sequences),
        lengths=[seq.length for seq in sequences],
    )
    return sequences


def format_fasta(records: list[DnaSequence], width: int = 60) -> str:
    """
    Serialize sequences as FASTA text with residue lines wrapped at ``width``.

    Raises:
        InvalidParameterError: If width < 1
    """
    if width < 1:
        msg = f"line width must be >= 1, got {width}"
        raise InvalidParameterError(msg)
    handle = io.StringIO()
    FastaWriter(handle, wrap=width).write_records(
        SeqRecord(Seq(seq.residues), id=seq.id, description="") for seq in records
    )
    return handle.getvalue()


def _is_label(cell: object) -> bool:
    # pandas already turned "nan"/"NA" fields into missing values
    if not isinstance(cell, str) or _LETTER.search(cell) is None:
        return False
    try:
        float(cell)
    except ValueError:
        return True
    return False


def _is_header(row: pd.Series) -> bool:
    return all(_is_label(cell.strip() if isinstance(cell, str) else cell) for cell in row)


def parse_signal(source: bytes | str | BinaryIO, signal_id: str = "signal") -> RealSignal:
    """
    Parse a real-valued signal from text.

    Accepts one number per line, or comma/tab separated rows whose last column
    holds the values. A first row made only of column names (fields with a
    letter that do not read as numbers) is treated as a header; any other
    first row is data.

    Raises:
        EmptyInputError: If the input is empty, whitespace only or comments only
        InvalidSignalError: If rows are ragged or any value is unparsable or
            not finite
    """
    text = _as_text(source)
    if not text.strip():
        raise EmptyInputError
    try:
        frame = pd.read_csv(
            io.StringIO(text),
            header=None,
            sep=r"[,\t]",
            engine="python",
            comment="#",
            skip_blank_lines=True,
            dtype=str,
        )
    except pd.errors.EmptyDataError as e:
        raise EmptyInputError from e
    except pd.errors.ParserError as e:
        msg = f"malformed signal table: {str(e).splitlines()[0]}"
        raise InvalidSignalError(msg) from e
    if _is_header(frame.iloc[0]):
        frame = frame.iloc[1:]
    column = frame.iloc[:, -1].str.strip()
    samples = pd.to_numeric(column, errors="coerce").to_numpy(dtype=np.float64)
    if samples.size == 0:
        raise EmptyInputError
    if not np.all(np.isfinite(samples)):
        bad = int(np.flatnonzero(~np.isfinite(samples))[0])
        msg = f"unparsable or non-finite sample at row {bad}"
        raise InvalidSignalError(msg)
    logger.debug("parsed_signal", signal_id=signal_id, samples=samples.size)
    return RealSignal(samples=samples, id=signal_id)
