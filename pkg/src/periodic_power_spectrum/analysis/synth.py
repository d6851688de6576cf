"""
Synthetic Signal and Sequence Generators

Deterministic fixtures for reproducing the periodicity experiments: the
two-tone test signal (periods 20 and 50 plus Gaussian noise), tandem repeat
sequences with controlled edits, and seeded random or shuffled sequences.

All randomness comes from ``numpy.random.default_rng(seed)`` (PCG64), so the
same seed gives the same output on every platform numpy supports.
"""

from collections.abc import Sequence
from typing import Final

import numpy as np
import structlog

from periodic_power_spectrum.analysis.schemas import Edit
from periodic_power_spectrum.exceptions import InvalidEditError, InvalidParameterError
from periodic_power_spectrum.sequence.schemas import (
    NUCLEOTIDES,
    DnaSequence,
    RealSignal,
)

logger = structlog.get_logger(__name__)

FIG1_PERIODS: Final[tuple[int, int]] = (20, 50)


def synth_fig1(n: int = 300, noise_sigma: float = 0.0, seed: int = 0) -> RealSignal:
    """
    x(k) = sin(2πk/20 + π/4) + cos(2πk/50 + π/4) + g(k), k = 1..n.

    Args:
        n: Number of samples
        noise_sigma: Standard deviation of the Gaussian noise g (0 for noiseless)
        seed: Seed of the noise generator

    Raises:
        InvalidParameterError: If n < 1 or noise_sigma < 0
    """
    if n < 1:
        msg = f"signal length must be >= 1, got {n}"
        raise InvalidParameterError(msg)
    if noise_sigma < 0:
        msg = f"noise sigma must be >= 0, got {noise_sigma}"
        raise InvalidParameterError(msg)
    k = np.arange(1, n + 1)
    short, long = FIG1_PERIODS
    samples = np.sin(2 * np.pi * k / short + np.pi / 4) + np.cos(
        2 * np.pi * k / long + np.pi / 4
    )
    if noise_sigma > 0:
        samples = samples + np.random.default_rng(seed).normal(0.0, noise_sigma, n)
    return RealSignal(samples=samples, id="fig1")


def _apply(
    residues: list[str], edit: Edit, rng: np.random.Generator
) -> list[str]:
    if edit.kind == "substitute":
        if not 0 <= edit.position < len(residues):
            msg = f"substitution at {edit.position} outside 0..{len(residues) - 1}"
            raise InvalidEditError(msg)
        base = edit.base
        if base is None:
            choices = [b for b in NUCLEOTIDES if b != residues[edit.position]]
            base = choices[int(rng.integers(len(choices)))]
        elif base not in NUCLEOTIDES:
            msg = f"substitution base must be one of A, C, G, T, got '{base}'"
            raise InvalidEditError(msg)
        residues[edit.position] = base
        return residues
    end = edit.position + edit.length
    if edit.length < 1 or edit.position < 0 or end > len(residues):
        msg = f"deletion [{edit.position}, {end}) outside 0..{len(residues)}"
        raise InvalidEditError(msg)
    if end - edit.position == len(residues):
        msg = "deletion would leave an empty sequence"
        raise InvalidEditError(msg)
    del residues[edit.position : end]
    return residues


def synth_repeat(
    motif: DnaSequence,
    copies: int,
    mutations: Sequence[Edit] = (),
    seed: int = 0,
) -> DnaSequence:
    """
    Concatenate copies of a motif and apply edits in order.

    Each edit position refers to the sequence as left by the previous edits.

    Raises:
        InvalidParameterError: If copies < 1
        InvalidEditError: If an edit points outside the sequence
    """
    if copies < 1:
        msg = f"copies must be >= 1, got {copies}"
        raise InvalidParameterError(msg)
    rng = np.random.default_rng(seed)
    residues = list(motif.residues * copies)
    for edit in mutations:
        residues = _apply(residues, edit, rng)
    logger.debug(
        "synth_repeat", motif=motif.residues, copies=copies, edits=len(mutations)
    )
    return DnaSequence(id=f"{motif.id}x{copies}", residues="".join(residues))


def random_sequence(n: int, seed: int = 0, seq_id: str = "random") -> DnaSequence:
    """
    Uniform random ACGT sequence of length n.

    Raises:
        InvalidParameterError: If n < 1
    """
    if n < 1:
        msg = f"sequence length must be >= 1, got {n}"
        raise InvalidParameterError(msg)
    picks = np.random.default_rng(seed).integers(len(NUCLEOTIDES), size=n)
    return DnaSequence(id=seq_id, residues="".join(np.array(NUCLEOTIDES)[picks]))


def shuffle_sequence(seq: DnaSequence, seed: int = 0) -> DnaSequence:
    """
    Seeded permutation of the residues; composition is preserved.
    """
    order = np.random.default_rng(seed).permutation(seq.length)
    residues = np.array(list(seq.residues))[order]
    return DnaSequence(id=f"{seq.id}_shuffled", residues="".join(residues))
