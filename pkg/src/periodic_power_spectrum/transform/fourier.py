"""
Reference DFT power spectra.

PS(k) = |X(k)|^2 with X(k) = sum_n x(n) exp(-i2πkn/N). The "direct" method is
the explicit O(N^2) sum and serves as the reference; "fft" uses scipy.fft and
must agree with it to 1e-6 relative. A DNA spectrum is the sum of its four
indicator channel spectra.
"""

from typing import Final, Literal

import numpy as np
import scipy.fft
import structlog
from numpy.typing import NDArray

from periodic_power_spectrum.exceptions import InvalidParameterError
from periodic_power_spectrum.sequence.schemas import (
    ChannelSource,
    IndicatorSet,
    RealSignal,
)
from periodic_power_spectrum.settings import settings
from periodic_power_spectrum.transform.periodic import check_period
from periodic_power_spectrum.transform.schemas import DftPowerSpectrum

logger = structlog.get_logger(__name__)

type DftMethod = Literal["fft", "direct"]

# rows of the direct DFT matrix built at once
_DIRECT_BLOCK: Final[int] = 512


def _direct_transform(matrix: NDArray[np.float64]) -> NDArray[np.complex128]:
    n = matrix.shape[-1]
    positions = np.arange(n)
    spectrum = np.empty(matrix.shape, dtype=np.complex128)
    for start in range(0, n, _DIRECT_BLOCK):
        bins = np.arange(start, min(start + _DIRECT_BLOCK, n))
        # reduce k*n modulo N before scaling to keep the phase exact
        phase = (np.outer(bins, positions) % n) * (-2.0 * np.pi / n)
        spectrum[:, bins] = matrix @ np.exp(1j * phase).T
    return spectrum


def channel_power(
    source: ChannelSource, method: DftMethod | None = None
) -> DftPowerSpectrum:
    """
    DFT power spectrum of a channel source, summed over channels.

    Args:
        source: Real signal or indicator set
        method: "fft" or "direct"; defaults to the configured backend
    """
    method = method or settings.dft_backend
    match method:
        case "fft":
            transform = scipy.fft.fft(source.matrix, axis=-1)
        case "direct":
            transform = _direct_transform(source.matrix)
        case _:
            msg = f"unknown DFT method '{method}'"
            raise InvalidParameterError(msg)
    power = np.square(transform.real) + np.square(transform.imag)
    logger.debug("dft_power", source_id=source.id, length=source.length, method=method)
    return DftPowerSpectrum(length=source.length, power=power.sum(axis=0))


def dft_power_spectrum(x: RealSignal, method: DftMethod | None = None) -> DftPowerSpectrum:
    """
    PS(k) = X(k) X(k)^* for k = 0..N-1 of a real signal.
    """
    return channel_power(x, method)


def dft_power_dna(ind: IndicatorSet, method: DftMethod | None = None) -> DftPowerSpectrum:
    """
    Sum of the Fourier power spectra of the four indicator channels.
    """
    return channel_power(ind, method)


def dft_power_at(source: ChannelSource, k: float) -> float:
    """
    DFT power at an arbitrary, possibly fractional, bin k.

    At k = N/p the basis exp(-i2πkn/N) equals exp(-i2πn/p), so the value
    coincides with PPS(p) even when p does not divide N.
    """
    n = source.length
    phase = np.exp(-2j * np.pi * k * np.arange(n) / n)
    transform = source.matrix @ phase
    return float(np.square(np.abs(transform)).sum())


def candidate_bins(n: int, p: int) -> list[int]:
    """
    Integer DFT bins bracketing N/p: floor and ceil (one bin when p divides N).

    Bin N (p = 1) aliases the DC bin.

    Raises:
        PeriodOutOfRangeError: If p < 1 or p > N
    """
    check_period(p, n)
    return sorted({n // p, -(-n // p)})


def nearest_bin(n: int, p: int) -> int:
    """
    Integer bin nearest N/p, halves rounded up.
    """
    return (2 * n + p) // (2 * p)
