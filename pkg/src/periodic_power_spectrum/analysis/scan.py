"""
Whole-sequence periodicity scans and peak detection.
"""

import math

import structlog

from periodic_power_spectrum.analysis.schemas import (
    Peak,
    PeakReport,
    PeriodicitySpectrum,
    SpectrumEntry,
)
from periodic_power_spectrum.exceptions import (
    InvalidParameterError,
    PeriodOutOfRangeError,
)
from periodic_power_spectrum.sequence.schemas import ChannelSource
from periodic_power_spectrum.transform.periodic import pps, snr

logger = structlog.get_logger(__name__)

DEFAULT_THRESHOLD = 1.0


def default_p_max(n: int) -> int:
    """
    Default upper scan bound ceil(sqrt(2n)).

    Past roughly this periodicity the spectrum turns smooth and peakless.

    Raises:
        InvalidParameterError: If n < 1
    """
    if n < 1:
        msg = f"sequence length must be >= 1, got {n}"
        raise InvalidParameterError(msg)
    root = math.isqrt(2 * n)
    return root if root * root == 2 * n else root + 1


def scan(source: ChannelSource, p_min: int, p_max: int) -> PeriodicitySpectrum:
    """
    PPS and SNR for every periodicity in [p_min, p_max].

    Args:
        source: Indicator set or real signal
        p_min: First periodicity (>= 1)
        p_max: Last periodicity (<= N)

    Returns:
        PeriodicitySpectrum: Entries ascending by p

    Raises:
        PeriodOutOfRangeError: Unless 1 <= p_min <= p_max <= N
    """
    n = source.length
    if not 1 <= p_min <= p_max <= n:
        msg = f"invalid periodicity range [{p_min}, {p_max}] for length {n}"
        raise PeriodOutOfRangeError(msg)
    entries: list[SpectrumEntry] = []
    for p in range(p_min, p_max + 1):
        power = pps(source, p)
        entries.append(SpectrumEntry(p=p, power=power, snr=snr(power, n)))
    logger.debug(
        "scan_complete", sequence_id=source.id, length=n, p_min=p_min, p_max=p_max
    )
    return PeriodicitySpectrum(
        sequence_id=source.id,
        length=n,
        entries=tuple(entries),
        p_min=p_min,
        p_max=p_max,
    )


def _is_local_maximum(entries: tuple[SpectrumEntry, ...], index: int) -> bool:
    value = entries[index].snr
    left = entries[index - 1].snr if index > 0 else -math.inf
    right = entries[index + 1].snr if index + 1 < len(entries) else -math.inf
    return value > left and value > right


def detect_peaks(
    spec: PeriodicitySpectrum,
    threshold: float = DEFAULT_THRESHOLD,
    *,
    require_local_maximum: bool = True,
) -> PeakReport:
    """
    Select periodicities whose SNR reaches the threshold.

    A peak must also be strictly greater than both neighbours inside the scan
    range (entries at the range boundary compare against their one neighbour).
    With ``require_local_maximum=False`` every entry at or above the threshold
    is reported and the flag tells which ones are local maxima.

    Raises:
        InvalidParameterError: If threshold <= 0
    """
    if not threshold > 0:
        msg = f"threshold must be > 0, got {threshold}"
        raise InvalidParameterError(msg)
    peaks: list[Peak] = []
    for index, entry in enumerate(spec.entries):
        if entry.snr < threshold:
            continue
        local = _is_local_maximum(spec.entries, index)
        if local or not require_local_maximum:
            peaks.append(Peak(p=entry.p, snr=entry.snr, local_maximum=local))
    logger.debug(
        "peaks_detected",
        sequence_id=spec.sequence_id,
        threshold=threshold,
        periods=[peak.p for peak in peaks],
    )
    return PeakReport(
        sequence_id=spec.sequence_id, threshold=threshold, peaks=tuple(peaks)
    )
