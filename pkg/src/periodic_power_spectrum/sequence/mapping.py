"""
Voss indicator mapping of DNA sequences.
"""

from typing import Final

import numpy as np
import structlog

from periodic_power_spectrum.sequence.schemas import (
    NUCLEOTIDES,
    AmbiguityPolicy,
    DnaSequence,
    IndicatorSet,
)

logger = structlog.get_logger(__name__)

_SYMBOL_CODES: Final = np.frombuffer("".join(NUCLEOTIDES).encode("ascii"), dtype=np.uint8)
_RNA_URACIL: Final = ord("U")
_THYMINE: Final = ord("T")


def voss_map(
    seq: DnaSequence, policy: AmbiguityPolicy = AmbiguityPolicy.LENIENT
) -> IndicatorSet:
    """
    Decompose a sequence into its four binary indicator channels.

    Args:
        seq: Sequence to map
        policy: STRICT rejects residues outside {A,C,G,T}; LENIENT leaves their
            columns empty and reads U as T

    Returns:
        IndicatorSet with rows A, T, C, G

    Raises:
        InvalidResidueError: Under STRICT policy, at the first non-ACGT residue
    """
    if policy is AmbiguityPolicy.STRICT:
        seq.ensure_strict()
    codes = np.frombuffer(seq.residues.encode("ascii", errors="replace"), dtype=np.uint8)
    if policy is AmbiguityPolicy.LENIENT:
        codes = np.where(codes == _RNA_URACIL, _THYMINE, codes)
    matrix = (codes[np.newaxis, :] == _SYMBOL_CODES[:, np.newaxis]).astype(np.float64)
    unmapped = seq.length - int(matrix.sum())
    if unmapped:
        logger.warning("non_acgt_residues", sequence_id=seq.id, count=unmapped)
    return IndicatorSet(id=seq.id, matrix=matrix)
