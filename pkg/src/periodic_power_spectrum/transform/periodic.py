"""
Periodic Power Spectrum (PPS) Core

This module computes spectra directly in periodicity space. A signal is folded
into its congruence derivative vector f_p (per-residue-class sums modulo p),
and the power at periodicity p is the quadratic form f_p S_p f_p^T with the
lower-triangular spectrum transform matrix S_p. For DNA the four Voss channels
are folded separately and their powers summed.

Every kernel works on a channel matrix (channels x N), so real signals (one
channel) and indicator sets (four channels) share one code path.

Example:
    ```python
    ind = voss_map(parse_fasta(b">x\\nATATAT\\n")[0])
    pps_dna(ind, 2)  # 18.0
    ```
"""

import math
from functools import lru_cache
from typing import Final, TypeVar

import numpy as np
from numpy.typing import NDArray

from periodic_power_spectrum.exceptions import (
    EmptyInputError,
    InvalidParameterError,
    PeriodOutOfRangeError,
    UnsupportedClosedFormError,
)
from periodic_power_spectrum.sequence.schemas import (
    ChannelSource,
    IndicatorSet,
    RealSignal,
)
from periodic_power_spectrum.transform.schemas import (
    CongruenceVector,
    PeriodicTransformValue,
    SpectrumMatrix,
)

CLAMP_TOLERANCE: Final[float] = 1e-9
CLOSED_FORM_PERIODS: Final[frozenset[int]] = frozenset({2, 3, 4})

SourceT = TypeVar("SourceT", bound=ChannelSource)


def check_period(p: int, n: int) -> None:
    """
    Raise PeriodOutOfRangeError unless 1 <= p <= n.
    """
    if p < 1 or p > n:
        msg = f"periodicity {p} outside 1..{n}"
        raise PeriodOutOfRangeError(msg)


def fold(matrix: NDArray[np.float64], p: int) -> NDArray[np.float64]:
    """
    Congruence derivative vectors of every channel, shape (channels, p).

    The channels are zero-padded to a multiple of p and summed block-wise;
    appended zeros leave every residue-class sum unchanged.
    """
    n = matrix.shape[-1]
    padded = np.pad(matrix, ((0, 0), (0, -n % p)))
    return padded.reshape(matrix.shape[0], -1, p).sum(axis=1)


@lru_cache(maxsize=512)
def _spectrum_entries(p: int) -> NDArray[np.float64]:
    angles = 2.0 * np.pi * np.arange(p) / p
    cos_row = np.cos(angles)[np.newaxis, :]
    sin_row = np.sin(angles)[np.newaxis, :]
    gram = cos_row.T @ cos_row + sin_row.T @ sin_row
    entries = np.tril(gram + gram.T, k=-1) + np.eye(p)
    entries.flags.writeable = False
    return entries


def spectrum_matrix(p: int) -> SpectrumMatrix:
    """
    Build the spectrum transform matrix S_p.

    With C = [cos(2πq/p)] and V = [sin(2πq/p)], U = C^T C + V^T V and
    S_p(k, j) = U(k, j) + U(j, k) for k > j, 1 on the diagonal, 0 above it.
    Matrices are memoised per p.

    Raises:
        PeriodOutOfRangeError: If p < 1
    """
    if p < 1:
        msg = f"periodicity must be >= 1, got {p}"
        raise PeriodOutOfRangeError(msg)
    return SpectrumMatrix(p=p, entries=_spectrum_entries(p))


def quadratic_power(folded: NDArray[np.float64], p: int) -> float:
    """
    Sum over channels of f S_p f^T for folded vectors of shape (channels, p).

    Round-off can leave a tiny negative where the exact value is zero; results
    within CLAMP_TOLERANCE * ||f||^2 below zero are returned as 0.
    """
    entries = _spectrum_entries(p)
    total = float(np.einsum("ci,ij,cj->", folded, entries, folded))
    if total < 0 and -total <= CLAMP_TOLERANCE * float(np.square(folded).sum()):
        return 0.0
    return total


def congruence_vector(x: RealSignal, p: int) -> CongruenceVector:
    """
    Congruence derivative vector f_p of a real signal, positions from 0.

    Raises:
        PeriodOutOfRangeError: If p < 1 or p > N
    """
    check_period(p, x.length)
    return CongruenceVector(p=p, values=fold(x.matrix, p)[0])


def periodic_transform(x: RealSignal, p: int) -> PeriodicTransformValue:
    """
    Project a signal onto the p-periodic basis: XP(p) = sum_q f_p(q) ω_p^q.

    Raises:
        PeriodOutOfRangeError: If p < 1 or p > N
    """
    folded = congruence_vector(x, p).values
    angles = 2.0 * np.pi * np.arange(p) / p
    return PeriodicTransformValue(
        real=float(folded @ np.cos(angles)),
        imag=float(-(folded @ np.sin(angles))),
    )


def pps(source: ChannelSource, p: int) -> float:
    """
    Periodic power spectrum at p of any channel source (signal or indicator set).

    Raises:
        PeriodOutOfRangeError: If p < 1 or p > N
    """
    check_period(p, source.length)
    return quadratic_power(fold(source.matrix, p), p)


def pps_real(x: RealSignal, p: int) -> float:
    """
    PPS(p) = f_p S_p f_p^T for a real signal.

    Raises:
        PeriodOutOfRangeError: If p < 1 or p > N
    """
    return pps(x, p)


def pps_dna(ind: IndicatorSet, p: int) -> float:
    """
    PPS(p) = sum over A, T, C, G of f_α S_p f_α^T.

    Raises:
        PeriodOutOfRangeError: If p < 1 or p > N
    """
    return pps(ind, p)


def pps_closed_form(ind: IndicatorSet, p: int) -> float:
    """
    Evaluate the explicit PPS polynomial for p in {2, 3, 4}.

    Serves as an oracle independent of the spectrum transform matrix.

    Raises:
        UnsupportedClosedFormError: If p is not 2, 3 or 4
    """
    if p not in CLOSED_FORM_PERIODS:
        msg = f"no closed form for periodicity {p}; supported: 2, 3, 4"
        raise UnsupportedClosedFormError(msg)
    f = fold(ind.matrix, p)
    squares = np.square(f).sum(axis=1)
    match p:
        case 2:
            cross = -2.0 * f[:, 0] * f[:, 1]
        case 3:
            cross = -(f[:, 0] * f[:, 1] + f[:, 0] * f[:, 2] + f[:, 1] * f[:, 2])
        case _:
            cross = -2.0 * (f[:, 0] * f[:, 2] + f[:, 1] * f[:, 3])
    return float((squares + cross).sum())


def zero_pad_to_multiple(source: SourceT, p: int) -> SourceT:
    """
    Extend every channel with zeros to length p * ceil(N / p).

    No-op when p divides N.

    Raises:
        PeriodOutOfRangeError: If p < 1
    """
    if p < 1:
        msg = f"periodicity must be >= 1, got {p}"
        raise PeriodOutOfRangeError(msg)
    return source.padded(p * math.ceil(source.length / p))


def snr(pps_value: float, n: int) -> float:
    """
    Signal-to-noise ratio PPS(p) / N; values >= 1 flag candidate periodicities.

    Raises:
        EmptyInputError: If n == 0
        InvalidParameterError: If n < 0
    """
    if n == 0:
        raise EmptyInputError
    if n < 0:
        msg = f"sequence length must be positive, got {n}"
        raise InvalidParameterError(msg)
    return pps_value / n
